#pragma once

#include "recop/kform.hpp"
#include "recop/matrix.hpp"
#include "recop/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace recop {

/// The unique invertible A with i_X w = i_{AX} h for non-degenerate 2-forms;
/// in the shared sign convention A = M_h^{-1} M_w.
/// Throws DegenerateFormError naming the offending side.
RMatrix recursion_operator(const RForm& omega, const RForm& eta);

/// Checks h(AX,Y) = h(X,AY), i.e. A^T M_h == M_h A exactly.
bool eta_symmetry_check(const RForm& omega, const RForm& eta, const RMatrix& a);

enum class PairTag {
  TrivialIdentity,
  TrivialNegation,
  SymplecticPair,
  HolomorphicSymplectic,
  Generic,
};

std::string to_string(PairTag tag);

struct SymplecticPairData {
  Subspace d_plus;   // ker(w - h) = +1 eigenspace of A
  Subspace d_minus;  // ker(w + h) = -1 eigenspace of A
  RForm omega_plus;  // w + h
  RForm omega_minus; // w - h
  std::size_t rank_plus = 0;
  std::size_t rank_minus = 0;
};

struct PairClassification {
  PairTag tag = PairTag::Generic;
  RMatrix a;
  std::optional<SymplecticPairData> symplectic_pair;
  std::size_t minimal_polynomial_degree = 0;  // attached for Generic
};

/// Classify a pair of non-degenerate 2-forms by the square of its recursion
/// operator. Trivial cases A = +-Id are split off before squaring.
PairClassification classify_pair(const RForm& omega, const RForm& eta);

/// For A with A^2 = -Id: every complexified vector u + i*Au must annihilate
/// w + i*h. Real and imaginary parts are checked separately, exactly.
bool complex_kernel_check(const RForm& omega, const RForm& eta, const RMatrix& a);

struct CoupleConditions {
  bool squares_equal = false;  // w^w == h^h
  bool product_zero = false;   // w^h == 0
};

/// Dimension-4 conformal-couple conditions; exact equality of 4-forms.
CoupleConditions couple_conditions(const RForm& omega, const RForm& eta);

/// Degree of the minimal polynomial of a, by exact Krylov rank growth on the
/// vectorized powers Id, a, a^2, ...
std::size_t minimal_polynomial_degree(const RMatrix& a);

}  // namespace recop
