#pragma once

#include "recop/matrix.hpp"

#include <vector>

namespace recop {

/// Linear subspace of the frame's span, held in a canonical reduced-echelon
/// basis so equality and membership tests are exact and deterministic.
class Subspace {
 public:
  /// Validates linear independence of the given spanning vectors.
  static Subspace from_vectors(std::size_t ambient, const std::vector<RVector>& vectors);

  /// Span of possibly dependent vectors (no independence requirement).
  static Subspace span(std::size_t ambient, const std::vector<RVector>& vectors);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }

  const std::vector<RVector>& basis() const { return basis_; }

  bool contains(const RVector& v) const;
  bool operator==(const Subspace& other) const = default;

 private:
  Subspace(std::size_t ambient, std::vector<RVector> canonical_basis)
      : ambient_(ambient), basis_(std::move(canonical_basis)) {}

  std::size_t ambient_;
  std::vector<RVector> basis_;  // rows of a reduced echelon matrix
};

}  // namespace recop
