#include "recop/lie_algebra.hpp"

#include <sstream>

namespace recop {

namespace {

RVector zero_vector(std::size_t n) { return RVector(n, Rational(0)); }

bool vector_is_zero(const RVector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

void axpy(RVector& acc, const Rational& s, const RVector& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
}

}  // namespace

RVector NijenhuisTable::value(int i, int j) const {
  for (const auto& [key, vec] : nonzero) {
    if (key[0] == i && key[1] == j) return vec;
    if (key[0] == j && key[1] == i) {
      RVector neg = vec;
      for (auto& c : neg) c = -c;
      return neg;
    }
  }
  return zero_vector(dimension);
}

LieAlgebra::LieAlgebra(std::size_t n, std::vector<RVector> table,
                       std::vector<BracketEntry> entries)
    : n_(n), table_(std::move(table)), entries_(std::move(entries)) {
  nilpotency_step_ = compute_nilpotency_step();
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
  std::vector<RVector> table(n * n, zero_vector(n));
  return LieAlgebra(n, std::move(table), {});
}

LieAlgebra LieAlgebra::direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.n_ + b.n_;
  std::vector<RVector> table(n * n, zero_vector(n));
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j)
      for (std::size_t k = 0; k < a.n_; ++k)
        table[i * n + j][k] = a.table_[i * a.n_ + j][k];
  for (std::size_t i = 0; i < b.n_; ++i)
    for (std::size_t j = 0; j < b.n_; ++j)
      for (std::size_t k = 0; k < b.n_; ++k)
        table[(a.n_ + i) * n + (a.n_ + j)][a.n_ + k] = b.table_[i * b.n_ + j][k];
  std::vector<BracketEntry> entries = a.entries_;
  for (BracketEntry e : b.entries_) {
    e.i += static_cast<int>(a.n_);
    e.j += static_cast<int>(a.n_);
    e.k += static_cast<int>(a.n_);
    entries.push_back(e);
  }
  return LieAlgebra(n, std::move(table), std::move(entries));
}

LieValidation LieAlgebra::validate(std::size_t n, const std::vector<BracketEntry>& entries) {
  LieValidation result;
  if (n == 0 || n > kMaxDimension) {
    result.errors.push_back("algebra dimension out of range [1,16]");
    return result;
  }
  std::vector<RVector> table(n * n, zero_vector(n));
  std::vector<bool> given(n * n, false);
  for (const auto& e : entries) {
    const bool in_range = e.i >= 1 && e.i <= static_cast<int>(n) && e.j >= 1 &&
                          e.j <= static_cast<int>(n) && e.k >= 1 && e.k <= static_cast<int>(n);
    if (!in_range) {
      std::ostringstream os;
      os << "bracket entry (" << e.i << "," << e.j << "," << e.k << ") out of range [1," << n
         << "]";
      result.errors.push_back(os.str());
      continue;
    }
    if (e.i == e.j && e.c != 0) {
      std::ostringstream os;
      os << "antisymmetry violation: [e" << e.i << ",e" << e.i << "] must vanish";
      result.errors.push_back(os.str());
      continue;
    }
    table[(e.i - 1) * n + (e.j - 1)][e.k - 1] += e.c;
    given[(e.i - 1) * n + (e.j - 1)] = true;
  }
  // antisymmetric extension, with a consistency check where both orders appeared
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& fwd = table[i * n + j];
      auto& rev = table[j * n + i];
      if (given[i * n + j] && given[j * n + i]) {
        RVector sum = fwd;
        axpy(sum, Rational(1), rev);
        if (!vector_is_zero(sum)) {
          std::ostringstream os;
          os << "antisymmetry violation between [e" << (i + 1) << ",e" << (j + 1) << "] and [e"
             << (j + 1) << ",e" << (i + 1) << "]";
          result.errors.push_back(os.str());
        }
      } else if (given[j * n + i]) {
        for (std::size_t k = 0; k < n; ++k) fwd[k] = -rev[k];
      } else {
        for (std::size_t k = 0; k < n; ++k) rev[k] = -fwd[k];
      }
    }
  if (!result.errors.empty()) return result;

  LieAlgebra candidate(n, std::move(table), entries);
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = i + 1; j <= static_cast<int>(n); ++j)
      for (int k = j + 1; k <= static_cast<int>(n); ++k) {
        RVector defect = candidate.bracket(candidate.bracket_basis(i, j),
                                           unit_vector(n, k));
        axpy(defect, Rational(1),
             candidate.bracket(candidate.bracket_basis(j, k), unit_vector(n, i)));
        axpy(defect, Rational(1),
             candidate.bracket(candidate.bracket_basis(k, i), unit_vector(n, j)));
        if (!vector_is_zero(defect)) {
          result.jacobi_violations.push_back({{i, j, k}, defect});
          std::ostringstream os;
          os << "Jacobi identity fails on (e" << i << ",e" << j << ",e" << k << ")";
          result.errors.push_back(os.str());
        }
      }
  if (!result.errors.empty()) return result;
  result.nilpotency_step = candidate.nilpotency_step();
  result.algebra = std::move(candidate);
  return result;
}

RVector LieAlgebra::bracket(const RVector& x, const RVector& y) const {
  RVector out = zero_vector(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      const Rational s = x[i] * y[j];
      axpy(out, s, table_[i * n_ + j]);
    }
  }
  return out;
}

const RVector& LieAlgebra::bracket_basis(int i, int j) const {
  return table_[(i - 1) * n_ + (j - 1)];
}

RForm LieAlgebra::ce_differential(const RForm& f) const {
  if (f.dimension() != n_) throw Error("ce_differential: dimension mismatch");
  const std::size_t k = f.degree();
  RForm df(n_, k + 1);
  if (k + 1 > n_ || f.is_zero()) return df;
  // iterate over increasing (k+1)-tuples
  std::vector<int> tuple(k + 1);
  for (std::size_t i = 0; i <= k; ++i) tuple[i] = static_cast<int>(i) + 1;
  for (;;) {
    Rational coeff(0);
    for (std::size_t a = 0; a <= k; ++a)
      for (std::size_t b = a + 1; b <= k; ++b) {
        const RVector& br = bracket_basis(tuple[a], tuple[b]);
        if (vector_is_zero(br)) continue;
        std::vector<int> rest;
        rest.reserve(k);
        rest.push_back(0);  // placeholder for the bracket slot
        for (std::size_t m = 0; m <= k; ++m)
          if (m != a && m != b) rest.push_back(tuple[m]);
        const int sign = ((a + b) % 2 == 1) ? -1 : 1;  // (-1)^{a+b}, a<b 0-based
        for (std::size_t m = 0; m < n_; ++m) {
          if (br[m] == 0) continue;
          rest[0] = static_cast<int>(m) + 1;
          const Rational value = f.evaluate(rest);
          if (value != 0) coeff += Rational(sign) * br[m] * value;
        }
      }
    if (coeff != 0) df.add_term(tuple, coeff);
    // advance the increasing (k+1)-tuple
    int pos = static_cast<int>(k);
    while (pos >= 0 && tuple[pos] == static_cast<int>(n_ - k) + pos) --pos;
    if (pos < 0) break;
    ++tuple[pos];
    for (std::size_t i = pos + 1; i <= k; ++i) tuple[i] = tuple[i - 1] + 1;
  }
  return df;
}

NijenhuisTable LieAlgebra::nijenhuis(const RMatrix& a) const {
  if (a.rows() != n_ || a.cols() != n_) throw Error("nijenhuis: endomorphism size mismatch");
  NijenhuisTable out;
  out.dimension = n_;
  const RMatrix a2 = a * a;
  std::vector<RVector> a_cols(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    a_cols[j] = zero_vector(n_);
    for (std::size_t i = 0; i < n_; ++i) a_cols[j][i] = a(i, j);
  }
  for (int i = 1; i <= static_cast<int>(n_); ++i)
    for (int j = i + 1; j <= static_cast<int>(n_); ++j) {
      RVector value = a2 * bracket_basis(i, j);
      axpy(value, Rational(1), bracket(a_cols[i - 1], a_cols[j - 1]));
      axpy(value, Rational(-1), a * bracket(a_cols[i - 1], unit_vector(n_, j)));
      axpy(value, Rational(-1), a * bracket(unit_vector(n_, i), a_cols[j - 1]));
      if (!vector_is_zero(value)) out.nonzero.push_back({{i, j, 0}, std::move(value)});
    }
  return out;
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  if (s.ambient_dimension() != n_) throw Error("is_subalgebra: ambient dimension mismatch");
  for (std::size_t a = 0; a < s.basis().size(); ++a)
    for (std::size_t b = a + 1; b < s.basis().size(); ++b)
      if (!s.contains(bracket(s.basis()[a], s.basis()[b]))) return false;
  return true;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!vector_is_zero(v)) return false;
  return true;
}

int LieAlgebra::compute_nilpotency_step() const {
  // lower central series g^1 = g, g^{s+1} = [g, g^s]
  std::vector<RVector> current;
  for (std::size_t i = 0; i < n_; ++i) current.push_back(unit_vector(n_, static_cast<int>(i) + 1));
  Subspace prev = Subspace::span(n_, current);
  for (int step = 1; step <= static_cast<int>(n_) + 1; ++step) {
    if (prev.dimension() == 0) return step - 1;
    std::vector<RVector> next_gens;
    for (std::size_t i = 0; i < n_; ++i)
      for (const auto& v : prev.basis()) {
        RVector w = bracket(unit_vector(n_, static_cast<int>(i) + 1), v);
        if (!vector_is_zero(w)) next_gens.push_back(std::move(w));
      }
    Subspace next = Subspace::span(n_, next_gens);
    if (next.dimension() == prev.dimension()) return 0;  // stabilized, not nilpotent
    prev = next;
  }
  return 0;
}

}  // namespace recop
