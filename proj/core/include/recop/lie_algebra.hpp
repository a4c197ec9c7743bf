#pragma once

#include "recop/kform.hpp"
#include "recop/matrix.hpp"
#include "recop/subspace.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace recop {

/// One bracket relation [e_i, e_j] += c * e_k, indices 1-based.
struct BracketEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  Rational c;
};

struct JacobiViolation {
  std::array<int, 3> triple;  // 1-based (i, j, k) with i < j < k
  RVector defect;             // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct LieValidation;

/// Table of Nijenhuis values N(e_i, e_j) for i < j.
struct NijenhuisTable {
  std::size_t dimension = 0;
  std::vector<std::pair<std::array<int, 3>, RVector>> nonzero;  // ((i,j,0), N(e_i,e_j))
  bool is_zero() const { return nonzero.empty(); }
  RVector value(int i, int j) const;  // antisymmetric lookup, 1-based
};

/// Finite-dimensional real Lie algebra given by structure constants, with the
/// Jacobi identity validated on construction (use validate_lie).
class LieAlgebra {
 public:
  static LieValidation validate(std::size_t n, const std::vector<BracketEntry>& entries);
  static LieAlgebra abelian(std::size_t n);

  /// Block-diagonal direct sum of two algebras.
  static LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

  std::size_t dimension() const { return n_; }

  /// Bracket of two coefficient vectors.
  RVector bracket(const RVector& x, const RVector& y) const;
  const RVector& bracket_basis(int i, int j) const;  // 1-based, any order via antisymmetry

  /// Chevalley-Eilenberg differential: on 1-forms da(X,Y) = -a([X,Y]),
  /// general degree by the alternating-sum formula.
  RForm ce_differential(const RForm& f) const;
  bool is_closed(const RForm& f) const { return ce_differential(f).is_zero(); }

  /// N_A(X,Y) = A^2[X,Y] + [AX,AY] - A[AX,Y] - A[X,AY] on all frame pairs.
  NijenhuisTable nijenhuis(const RMatrix& a) const;

  bool is_subalgebra(const Subspace& s) const;

  int nilpotency_step() const { return nilpotency_step_; }
  bool is_abelian() const;

  const std::vector<BracketEntry>& defining_entries() const { return entries_; }

 private:
  LieAlgebra(std::size_t n, std::vector<RVector> table, std::vector<BracketEntry> entries);
  int compute_nilpotency_step() const;

  std::size_t n_;
  // bracket_[(i-1)*n + (j-1)] = [e_i, e_j], full antisymmetric table
  std::vector<RVector> table_;
  std::vector<BracketEntry> entries_;
  int nilpotency_step_ = 0;
};

/// Outcome of validate_lie: either a usable algebra or a full error report.
struct LieValidation {
  std::optional<LieAlgebra> algebra;
  std::vector<std::string> errors;
  std::vector<JacobiViolation> jacobi_violations;
  /// 1 for abelian, s for s-step nilpotent, 0 when the lower central
  /// series stabilizes away from zero.
  int nilpotency_step = 0;

  bool valid() const { return algebra.has_value(); }
};

}  // namespace recop
