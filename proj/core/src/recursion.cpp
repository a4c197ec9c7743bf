#include "recop/recursion.hpp"

namespace recop {

namespace {

void require_pair_preconditions(const RForm& omega, const RForm& eta) {
  if (omega.degree() != 2 || eta.degree() != 2)
    throw Error("recursion operator requires 2-forms");
  if (omega.dimension() != eta.dimension())
    throw Error("recursion operator: dimension mismatch");
  if (omega.dimension() % 2 != 0)
    throw DegenerateFormError("2-forms on an odd-dimensional frame are degenerate");
  if (pfaffian(form_matrix(omega).get()) == 0)
    throw DegenerateFormError("omega is degenerate (zero Pfaffian)");
  if (pfaffian(form_matrix(eta).get()) == 0)
    throw DegenerateFormError("eta is degenerate (zero Pfaffian)");
}

}  // namespace

RMatrix recursion_operator(const RForm& omega, const RForm& eta) {
  require_pair_preconditions(omega, eta);
  const RMatrix m_omega = form_matrix(omega).get();
  const RMatrix m_eta = form_matrix(eta).get();
  const auto m_eta_inv = inverse(m_eta);
  if (!m_eta_inv) throw DegenerateFormError("eta is degenerate (singular matrix)");
  return *m_eta_inv * m_omega;
}

bool eta_symmetry_check(const RForm& omega, const RForm& eta, const RMatrix& a) {
  (void)omega;
  const RMatrix m_eta = form_matrix(eta).get();
  return a.transpose() * m_eta == m_eta * a;
}

std::string to_string(PairTag tag) {
  switch (tag) {
    case PairTag::TrivialIdentity: return "TrivialIdentity";
    case PairTag::TrivialNegation: return "TrivialNegation";
    case PairTag::SymplecticPair: return "SymplecticPair";
    case PairTag::HolomorphicSymplectic: return "HolomorphicSymplectic";
    case PairTag::Generic: return "Generic";
  }
  return "?";
}

PairClassification classify_pair(const RForm& omega, const RForm& eta) {
  PairClassification out;
  out.a = recursion_operator(omega, eta);
  const std::size_t n = omega.dimension();
  const RMatrix id = RMatrix::identity(n);
  if (out.a == id) {
    out.tag = PairTag::TrivialIdentity;
    return out;
  }
  if (out.a == -id) {
    out.tag = PairTag::TrivialNegation;
    return out;
  }
  const RMatrix a2 = out.a * out.a;
  if (a2 == id) {
    out.tag = PairTag::SymplecticPair;
    const RForm plus = omega + eta;    // Omega^+, kernel = D_-
    const RForm minus = omega - eta;   // Omega^-, kernel = D_+
    auto d_plus = Subspace::span(n, null_space(form_matrix(minus).get()));
    auto d_minus = Subspace::span(n, null_space(form_matrix(plus).get()));
    out.symplectic_pair = SymplecticPairData{
        std::move(d_plus), std::move(d_minus), plus, minus,
        rank_2form(plus), rank_2form(minus)};
    return out;
  }
  if (a2 == -id) {
    out.tag = PairTag::HolomorphicSymplectic;
    return out;
  }
  out.tag = PairTag::Generic;
  out.minimal_polynomial_degree = minimal_polynomial_degree(out.a);
  return out;
}

bool complex_kernel_check(const RForm& omega, const RForm& eta, const RMatrix& a) {
  const std::size_t n = omega.dimension();
  if (!((a * a) == -RMatrix::identity(n)))
    throw Error("complex_kernel_check requires A^2 = -Id");
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    const RVector u = unit_vector(n, i);
    const RVector au = a * u;
    // i_X(w + i h) with X = u + i Au: real part i_u w - i_{Au} h,
    // imaginary part i_u h + i_{Au} w; both must vanish identically.
    const RForm real_part = contract(u, omega) - contract(au, eta);
    const RForm imag_part = contract(u, eta) + contract(au, omega);
    if (!real_part.is_zero() || !imag_part.is_zero()) return false;
  }
  return true;
}

CoupleConditions couple_conditions(const RForm& omega, const RForm& eta) {
  if (omega.dimension() != 4 || eta.dimension() != 4)
    throw Error("couple_conditions is a dimension-4 notion");
  CoupleConditions out;
  out.squares_equal = wedge(omega, omega) == wedge(eta, eta);
  out.product_zero = wedge(omega, eta).is_zero();
  return out;
}

std::size_t minimal_polynomial_degree(const RMatrix& a) {
  const std::size_t n = a.rows();
  // vectorized Krylov sequence Id, a, a^2, ... ; degree = first power that
  // becomes linearly dependent on the previous ones
  RMatrix krylov(n * n, n + 1);
  RMatrix power = RMatrix::identity(n);
  std::size_t prev_rank = 0;
  for (std::size_t d = 0; d <= n; ++d) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) krylov(i * n + j, d) = power(i, j);
    RMatrix head(n * n, d + 1);
    for (std::size_t r = 0; r < n * n; ++r)
      for (std::size_t c = 0; c <= d; ++c) head(r, c) = krylov(r, c);
    const std::size_t current_rank = rank(head);
    if (current_rank == prev_rank) return d;
    prev_rank = current_rank;
    power = power * a;
  }
  return n;  // unreachable for n x n matrices (Cayley-Hamilton)
}

}  // namespace recop
