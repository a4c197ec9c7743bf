#include "recop/moser.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace recop::flow {

namespace {

constexpr double kConditionLimit = 1e8;

double norm_inf(const Matrix<double>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

double max_abs(const Matrix<double>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
  return best;
}

Matrix<double> checked_inverse(const Matrix<double>& m) {
  const auto inv = inverse(m);
  if (!inv || norm_inf(m) * norm_inf(*inv) > kConditionLimit) {
    std::ostringstream os;
    os << "degenerate family: form matrix condition exceeds 1e8";
    throw DegenerateFamilyError(os.str());
  }
  return *inv;
}

/// Precomputed spatial derivatives of one family, so the RK4 right-hand side
/// does not re-derive trig polynomials at every evaluation.
struct FieldCache {
  explicit FieldCache(const FormFamily& f) : family(&f) {
    for (std::size_t k = 0; k < f.dimension(); ++k) {
      m_dx.push_back(f.realized().derivative_x(k));
      a_dx.push_back(f.primitive().derivative_x(k));
    }
  }

  std::vector<double> velocity(const std::vector<double>& x, double t,
                               Matrix<double>* jacobian) const {
    // i_X w = -alpha: the covector of i_X w is M^T X = -M X, so M X = alpha
    const Matrix<double> m = family->matrix_at(x, t);
    const Matrix<double> minv = checked_inverse(m);
    const std::vector<double> vel = minv * family->alpha_at(x, t);
    if (jacobian) {
      const std::size_t n = x.size();
      Matrix<double> dv(n, n);
      for (std::size_t k = 0; k < n; ++k) {
        // differentiate M X = alpha: M dX = dalpha - dM X
        const Matrix<double> dm = m_dx[k].matrix_at(x, t);
        std::vector<double> rhs = a_dx[k].evaluate(x, t);
        const std::vector<double> dmx = dm * vel;
        for (std::size_t i = 0; i < n; ++i) rhs[i] -= dmx[i];
        const std::vector<double> col = minv * rhs;
        for (std::size_t i = 0; i < n; ++i) dv(i, k) = col[i];
      }
      *jacobian = dv;
    }
    return vel;
  }

  const FormFamily* family;
  std::vector<TwoFormField> m_dx;
  std::vector<OneFormField> a_dx;
};

std::vector<std::size_t> block_ids(const std::vector<std::size_t>& blocks, std::size_t n) {
  std::vector<std::size_t> ids(n, 0);
  if (blocks.empty()) return ids;
  std::size_t pos = 0, id = 0;
  for (std::size_t size : blocks) {
    for (std::size_t i = 0; i < size && pos < n; ++i) ids[pos++] = id;
    ++id;
  }
  return ids;
}

const std::vector<double> kCheckpointTimes{0.25, 0.5, 0.75, 1.0};

}  // namespace

IntertwiningResult intertwining_check(const FlowFamily& family,
                                      const std::vector<std::vector<double>>& samples,
                                      const std::vector<double>& times) {
  IntertwiningResult out;
  for (const auto& x : samples) {
    const Matrix<double> a0 =
        checked_inverse(family.eta.matrix_at(x, 0.0)) * family.omega.matrix_at(x, 0.0);
    for (double t : times) {
      const Matrix<double> m_omega = family.omega.matrix_at(x, t);
      const Matrix<double> m_eta = family.eta.matrix_at(x, t);
      const Matrix<double> a = checked_inverse(m_eta) * m_omega;
      const std::vector<double> alpha = family.omega.alpha_at(x, t);
      const std::vector<double> beta_a = a.transpose() * family.eta.alpha_at(x, t);
      for (std::size_t j = 0; j < alpha.size(); ++j)
        out.primitive_residual = std::max(out.primitive_residual,
                                          std::abs(alpha[j] - beta_a[j]));
      const double scale = std::max(1.0, max_abs(a0));
      out.constancy_residual = std::max(out.constancy_residual, max_abs(a - a0) / scale);
    }
  }
  return out;
}

std::vector<double> moser_vector_field(const FormFamily& family, const std::vector<double>& x,
                                       double t) {
  const Matrix<double> m = family.matrix_at(x, t);
  const Matrix<double> minv = checked_inverse(m);
  return minv * family.alpha_at(x, t);
}

FlowResult integrate_flow(const FlowFamily& family,
                          const std::vector<std::vector<double>>& samples, std::size_t steps,
                          double intertwine_tolerance) {
  const std::size_t n = family.omega.dimension();
  if (family.eta.dimension() != n) throw Error("flow family dimension mismatch");
  if (steps == 0 || steps % 4 != 0) throw Error("step count must be a positive multiple of 4");

  FlowResult result;
  result.initial_points = samples;
  result.intertwining = intertwining_check(family, samples, kCheckpointTimes);
  if (result.intertwining.primitive_residual > intertwine_tolerance) {
    std::ostringstream os;
    os << "intertwining residual " << result.intertwining.primitive_residual
       << " exceeds tolerance " << intertwine_tolerance;
    throw Error(os.str());
  }

  const FieldCache omega_cache(family.omega);
  const FieldCache eta_cache(family.eta);
  const auto ids = block_ids(family.blocks, n);
  const std::size_t grid = static_cast<std::size_t>(
      std::max(4, std::max(family.omega.max_frequency(), family.eta.max_frequency()) + 1));
  const Matrix<double> omega_avg0 = family.omega.average_matrix(0.0, grid);
  const Matrix<double> eta_avg0 = family.eta.average_matrix(0.0, grid);

  struct State {
    std::vector<double> x;
    Matrix<double> jac;
  };
  std::vector<State> states;
  states.reserve(samples.size());
  std::vector<Matrix<double>> m_omega0, m_eta0;
  for (const auto& x : samples) {
    states.push_back({x, Matrix<double>::identity(n)});
    m_omega0.push_back(family.omega.matrix_at(x, 0.0));
    m_eta0.push_back(family.eta.matrix_at(x, 0.0));
  }

  // residual of the "both primitives generate the same field" identity
  for (const auto& x : samples)
    for (double t : kCheckpointTimes) {
      const auto vx = omega_cache.velocity(x, t, nullptr);
      const auto vy = eta_cache.velocity(x, t, nullptr);
      for (std::size_t j = 0; j < n; ++j)
        result.field_agreement_residual =
            std::max(result.field_agreement_residual, std::abs(vx[j] - vy[j]));
    }

  const double h = 1.0 / static_cast<double>(steps);
  double min_det = std::numeric_limits<double>::infinity();

  const auto rhs = [&](const State& s, double t, State& out) {
    Matrix<double> dv(n, n);
    out.x = omega_cache.velocity(s.x, t, &dv);
    out.jac = dv * s.jac;
  };
  const auto axpy_state = [&](State base, double factor, const State& delta) {
    for (std::size_t i = 0; i < n; ++i) base.x[i] += factor * delta.x[i];
    base.jac = base.jac + delta.jac * factor;
    return base;
  };

  std::size_t step_index = 0;
  for (double checkpoint : kCheckpointTimes) {
    const std::size_t target = static_cast<std::size_t>(
        std::llround(checkpoint * static_cast<double>(steps)));
    for (; step_index < target; ++step_index) {
      const double t = static_cast<double>(step_index) * h;
      for (auto& s : states) {
        State k1{std::vector<double>(n), Matrix<double>(n, n)};
        State k2 = k1, k3 = k1, k4 = k1;
        rhs(s, t, k1);
        rhs(axpy_state(s, h / 2, k1), t + h / 2, k2);
        rhs(axpy_state(s, h / 2, k2), t + h / 2, k3);
        rhs(axpy_state(s, h, k3), t + h, k4);
        for (std::size_t i = 0; i < n; ++i)
          s.x[i] += h / 6 * (k1.x[i] + 2 * k2.x[i] + 2 * k3.x[i] + k4.x[i]);
        s.jac = s.jac + (k1.jac + k2.jac * 2.0 + k3.jac * 2.0 + k4.jac) * (h / 6);
        for (double v : s.x)
          if (!std::isfinite(v)) throw Error("flow diverged: non-finite state");
        min_det = std::min(min_det, determinant(s.jac));
        if (!std::isfinite(min_det)) throw Error("flow diverged: non-finite Jacobian");
      }
    }
    FlowCheckpoint cp;
    cp.t = checkpoint;
    cp.min_jacobian_det = min_det;
    for (std::size_t si = 0; si < states.size(); ++si) {
      const auto& s = states[si];
      const Matrix<double> pw =
          s.jac.transpose() * family.omega.matrix_at(s.x, checkpoint) * s.jac - m_omega0[si];
      const Matrix<double> pe =
          s.jac.transpose() * family.eta.matrix_at(s.x, checkpoint) * s.jac - m_eta0[si];
      cp.pullback_error_omega = std::max(cp.pullback_error_omega, max_abs(pw));
      cp.pullback_error_eta = std::max(cp.pullback_error_eta, max_abs(pe));
      if (!family.blocks.empty())
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (ids[i] != ids[j])
              cp.max_offblock = std::max(cp.max_offblock, std::abs(s.jac(i, j)));
    }
    cp.cohomology_delta_omega =
        max_abs(family.omega.average_matrix(checkpoint, grid) - omega_avg0);
    cp.cohomology_delta_eta = max_abs(family.eta.average_matrix(checkpoint, grid) - eta_avg0);
    result.checkpoints.push_back(cp);
  }

  for (const auto& s : states) {
    result.final_points.push_back(s.x);
    result.final_jacobians.push_back(s.jac);
  }
  return result;
}

std::vector<std::vector<double>> sample_points(std::size_t n, std::size_t count,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<std::vector<double>> points(count, std::vector<double>(n));
  for (auto& p : points)
    for (auto& c : p) c = dist(rng);
  return points;
}

}  // namespace recop::flow
