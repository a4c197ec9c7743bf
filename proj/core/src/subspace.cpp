#include "recop/subspace.hpp"

namespace recop {

namespace {

std::vector<RVector> canonical_rows(std::size_t ambient, const std::vector<RVector>& vectors) {
  RMatrix m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw Error("subspace vector has wrong length");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  const auto pivots = rref_in_place(m);
  std::vector<RVector> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    RVector row(ambient);
    for (std::size_t j = 0; j < ambient; ++j) row[j] = m(r, j);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Subspace Subspace::from_vectors(std::size_t ambient, const std::vector<RVector>& vectors) {
  auto rows = canonical_rows(ambient, vectors);
  if (rows.size() != vectors.size())
    throw Error("subspace basis vectors are linearly dependent");
  return Subspace(ambient, std::move(rows));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RVector>& vectors) {
  return Subspace(ambient, canonical_rows(ambient, vectors));
}

bool Subspace::contains(const RVector& v) const {
  auto extended = basis_;
  extended.push_back(v);
  return canonical_rows(ambient_, extended).size() == basis_.size();
}

}  // namespace recop
