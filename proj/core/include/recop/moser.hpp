#pragma once

#include "recop/form_field.hpp"
#include "recop/matrix.hpp"

#include <cstdint>
#include <vector>

namespace recop::flow {

struct DegenerateFamilyError : Error {
  using Error::Error;
};

/// Two intertwined families (w_t, alpha_t) and (h_t, beta_t) on the same
/// torus, plus an optional coordinate block structure for foliation checks.
struct FlowFamily {
  FormFamily omega;
  FormFamily eta;
  std::vector<std::size_t> blocks;  // sizes summing to n; empty = no check
};

struct IntertwiningResult {
  double primitive_residual = 0.0;  // max |alpha - beta o A| over samples/times
  double constancy_residual = 0.0;  // max relative |A(x,t) - A(x,0)|
};

/// Pointwise recursion operator in double mode; A-constancy is reported,
/// never enforced.
IntertwiningResult intertwining_check(const FlowFamily& family,
                                      const std::vector<std::vector<double>>& samples,
                                      const std::vector<double>& times);

/// Solves i_X w_t = -alpha_t at a point. Throws DegenerateFamilyError when
/// the form matrix has condition number above 1e8.
std::vector<double> moser_vector_field(const FormFamily& family, const std::vector<double>& x,
                                       double t);

struct FlowCheckpoint {
  double t = 0.0;
  double pullback_error_omega = 0.0;  // max |Dphi^T M_w(phi(x)) Dphi - M_w0(x)|
  double pullback_error_eta = 0.0;
  double min_jacobian_det = 0.0;
  double max_offblock = 0.0;           // Jacobian mass crossing the block split
  double cohomology_delta_omega = 0.0; // grid average drift vs t = 0
  double cohomology_delta_eta = 0.0;
};

struct FlowResult {
  std::vector<std::vector<double>> initial_points;
  std::vector<FlowCheckpoint> checkpoints;  // t in {0.25, 0.5, 0.75, 1}
  std::vector<std::vector<double>> final_points;
  std::vector<Matrix<double>> final_jacobians;
  IntertwiningResult intertwining;
  double field_agreement_residual = 0.0;  // max |X_t - Y_t| when primitives match

  const FlowCheckpoint& at_time_one() const { return checkpoints.back(); }
};

/// RK4 integration of x' = X_t(x) jointly with the variational equation
/// J' = DX_t(x) J, Jacobian transport by analytic differentiation of the
/// solved linear system. `steps` must be divisible by 4 so the checkpoint
/// times land on step boundaries.
FlowResult integrate_flow(const FlowFamily& family,
                          const std::vector<std::vector<double>>& samples, std::size_t steps,
                          double intertwine_tolerance);

/// Deterministic uniform samples in [0,1)^n.
std::vector<std::vector<double>> sample_points(std::size_t n, std::size_t count,
                                               std::uint64_t seed);

}  // namespace recop::flow
