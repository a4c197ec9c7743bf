#pragma once

#include "recop/kform.hpp"
#include "recop/matrix.hpp"
#include "recop/trig_poly.hpp"

#include <map>
#include <vector>

namespace recop::flow {

/// Time-dependent 1-form on the torus with TimePoly coefficients.
class OneFormField {
 public:
  explicit OneFormField(std::size_t n) : n_(n), components_(n, TimePoly(n)) {}

  std::size_t dimension() const { return n_; }

  TimePoly& component(std::size_t j) { return components_[j]; }
  const TimePoly& component(std::size_t j) const { return components_[j]; }

  std::vector<double> evaluate(const std::vector<double>& x, double t) const;
  std::vector<double> evaluate_dx(std::size_t k, const std::vector<double>& x, double t) const;

  OneFormField derivative_x(std::size_t k) const;
  OneFormField integrate_t() const;
  bool is_zero() const;
  int max_frequency() const;

 private:
  std::size_t n_;
  std::vector<TimePoly> components_;
};

/// Time-dependent 2-form, coefficients on increasing pairs (i < j, 0-based).
class TwoFormField {
 public:
  explicit TwoFormField(std::size_t n) : n_(n) {}

  /// Constant-in-x, constant-in-t base 2-form.
  static TwoFormField from_constant(const KForm<double>& base);

  std::size_t dimension() const { return n_; }

  void add(std::size_t i, std::size_t j, const TimePoly& p);
  const TimePoly* coefficient(std::size_t i, std::size_t j) const;

  /// Skew matrix M(x,t) of the form in the frame, both triangles filled.
  Matrix<double> matrix_at(const std::vector<double>& x, double t) const;
  Matrix<double> matrix_dx_at(std::size_t k, const std::vector<double>& x, double t) const;

  TwoFormField derivative_x(std::size_t k) const;
  TwoFormField operator+(const TwoFormField& o) const;

  int max_frequency() const;

  const std::map<std::pair<std::size_t, std::size_t>, TimePoly>& terms() const { return coeffs_; }

 private:
  std::size_t n_;
  std::map<std::pair<std::size_t, std::size_t>, TimePoly> coeffs_;
};

/// Coordinate exterior derivative of a 1-form field:
/// (d a)_{ij} = d_i a_j - d_j a_i, exact on the trig-polynomial coefficients.
TwoFormField exterior_derivative_field(const OneFormField& a);

/// Max coefficient magnitude of the 3-form d w; zero for closed fields up to
/// floating-point cancellation in the symbolic coefficients.
double closedness_residual(const TwoFormField& w);

/// Family w_t = base + d(integral of the primitive), stored so that
/// dw_t/dt = d(alpha_t) holds by construction.
class FormFamily {
 public:
  FormFamily(KForm<double> base, OneFormField primitive);

  std::size_t dimension() const { return base_.dimension(); }

  const TwoFormField& realized() const { return omega_; }
  const OneFormField& primitive() const { return alpha_; }
  const KForm<double>& base() const { return base_; }

  Matrix<double> matrix_at(const std::vector<double>& x, double t) const {
    return omega_.matrix_at(x, t);
  }
  Matrix<double> matrix_dx_at(std::size_t k, const std::vector<double>& x, double t) const {
    return omega_.matrix_dx_at(k, x, t);
  }
  std::vector<double> alpha_at(const std::vector<double>& x, double t) const {
    return alpha_.evaluate(x, t);
  }
  std::vector<double> alpha_dx_at(std::size_t k, const std::vector<double>& x, double t) const {
    return alpha_.evaluate_dx(k, x, t);
  }

  double closedness_residual() const { return flow::closedness_residual(omega_); }

  /// Grid average of the coefficient matrix at time t; the cohomology-class
  /// proxy on the torus. The grid must out-resolve every frequency.
  Matrix<double> average_matrix(double t, std::size_t grid_per_axis) const;

  int max_frequency() const;

 private:
  KForm<double> base_;
  OneFormField alpha_;
  TwoFormField omega_;
};

}  // namespace recop::flow
