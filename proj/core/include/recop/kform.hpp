#pragma once

#include "recop/matrix.hpp"
#include "recop/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace recop {

/// Index subsets of the frame are stored as bitmasks: bit (i-1) set means the
/// 1-based frame index i participates. Increasing-tuple storage falls out for
/// free and the wedge sign is an inversion count.
using IndexMask = std::uint32_t;

constexpr std::size_t kMaxDimension = 16;

inline IndexMask tuple_to_mask(const std::vector<int>& increasing) {
  IndexMask m = 0;
  for (int i : increasing) m |= IndexMask(1) << (i - 1);
  return m;
}

inline std::vector<int> mask_to_tuple(IndexMask m) {
  std::vector<int> t;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) t.push_back(i + 1);
  return t;
}

/// Sign of merging two disjoint increasing tuples, +1 or -1.
inline int merge_sign(IndexMask a, IndexMask b) {
  int inversions = 0;
  IndexMask rest = b;
  while (rest != 0) {
    const int bit = std::countr_zero(rest);
    inversions += std::popcount(a >> (bit + 1));
    rest &= rest - 1;
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Degree-k alternating form on an n-dimensional frame with coefficients in
/// T (Rational in algebraic mode, double in flow mode). Absent tuples are
/// zero; zero coefficients are pruned so equality is map equality.
template <class T>
class KForm {
 public:
  KForm(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (n == 0 || n > kMaxDimension) throw Error("form dimension out of range [1,16]");
    if (k > n) throw Error("form degree exceeds dimension");
  }

  static KForm basis(std::size_t n, std::vector<int> increasing) {
    KForm f(n, increasing.size());
    f.add_term(increasing, T(1));
    return f;
  }

  std::size_t dimension() const { return n_; }
  std::size_t degree() const { return k_; }

  /// Accumulate a coefficient on a strictly increasing tuple.
  void add_term(const std::vector<int>& increasing, const T& c) {
    for (std::size_t i = 0; i < increasing.size(); ++i) {
      if (increasing[i] < 1 || increasing[i] > static_cast<int>(n_))
        throw Error("form index out of range");
      if (i > 0 && increasing[i - 1] >= increasing[i])
        throw Error("form indices must be strictly increasing");
    }
    if (increasing.size() != k_) throw Error("term arity does not match form degree");
    accumulate(tuple_to_mask(increasing), c);
  }

  T coefficient(IndexMask mask) const {
    const auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? T(0) : it->second;
  }
  T coefficient(const std::vector<int>& increasing) const {
    return coefficient(tuple_to_mask(increasing));
  }

  /// Evaluate on an arbitrary index tuple (not necessarily sorted); repeated
  /// indices give zero, out-of-order ones pick up the permutation sign.
  T evaluate(std::vector<int> indices) const {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < indices.size(); ++i)
      for (std::size_t j = 0; j + 1 < indices.size() - i; ++j)
        if (indices[j] > indices[j + 1]) {
          std::swap(indices[j], indices[j + 1]);
          sign = -sign;
        }
    for (std::size_t i = 0; i + 1 < indices.size(); ++i)
      if (indices[i] == indices[i + 1]) return T(0);
    return coefficient(tuple_to_mask(indices)) * T(sign);
  }

  bool is_zero() const { return coeffs_.empty(); }

  bool operator==(const KForm& other) const {
    return n_ == other.n_ && k_ == other.k_ && coeffs_ == other.coeffs_;
  }

  KForm operator+(const KForm& o) const {
    require_same_shape(o);
    KForm r = *this;
    for (const auto& [mask, c] : o.coeffs_) r.accumulate(mask, c);
    return r;
  }
  KForm operator-(const KForm& o) const {
    require_same_shape(o);
    KForm r = *this;
    for (const auto& [mask, c] : o.coeffs_) r.accumulate(mask, -c);
    return r;
  }
  KForm operator-() const {
    KForm r(n_, k_);
    for (const auto& [mask, c] : coeffs_) r.coeffs_.emplace(mask, -c);
    return r;
  }
  KForm operator*(const T& s) const {
    KForm r(n_, k_);
    if (s == T(0)) return r;
    for (const auto& [mask, c] : coeffs_) r.coeffs_.emplace(mask, c * s);
    return r;
  }

  const std::map<IndexMask, T>& terms() const { return coeffs_; }

  /// Terms sorted lexicographically by index tuple, for printing.
  std::vector<std::pair<std::vector<int>, T>> sorted_terms() const {
    std::vector<std::pair<std::vector<int>, T>> out;
    out.reserve(coeffs_.size());
    for (const auto& [mask, c] : coeffs_) out.emplace_back(mask_to_tuple(mask), c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  void require_same_shape(const KForm& o) const {
    if (n_ != o.n_) throw Error("form dimension mismatch");
    if (k_ != o.k_) throw Error("form degree mismatch");
  }

  void accumulate(IndexMask mask, const T& c) {
    if (c == T(0)) return;
    auto [it, inserted] = coeffs_.emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (it->second == T(0)) coeffs_.erase(it);
    }
  }

  template <class U>
  friend KForm<U> wedge(const KForm<U>&, const KForm<U>&);
  template <class U>
  friend KForm<U> contract(const std::vector<U>&, const KForm<U>&);

  std::size_t n_, k_;
  std::map<IndexMask, T> coeffs_;
};

/// Alternating wedge product; bilinear, graded-commutative.
template <class T>
KForm<T> wedge(const KForm<T>& f, const KForm<T>& g) {
  if (f.dimension() != g.dimension()) throw Error("wedge: dimension mismatch");
  if (f.degree() + g.degree() > f.dimension()) throw Error("wedge: degree overflow");
  KForm<T> r(f.dimension(), f.degree() + g.degree());
  for (const auto& [ma, ca] : f.coeffs_)
    for (const auto& [mb, cb] : g.coeffs_) {
      if ((ma & mb) != 0) continue;
      r.accumulate(ma | mb, ca * cb * T(merge_sign(ma, mb)));
    }
  return r;
}

/// Interior product i_v f.
template <class T>
KForm<T> contract(const std::vector<T>& v, const KForm<T>& f) {
  if (v.size() != f.dimension()) throw Error("contract: vector length mismatch");
  if (f.degree() == 0) throw Error("contract: cannot contract a 0-form");
  KForm<T> r(f.dimension(), f.degree() - 1);
  for (const auto& [mask, c] : f.coeffs_) {
    IndexMask rest = mask;
    int position = 0;
    while (rest != 0) {
      const int bit = std::countr_zero(rest);
      rest &= rest - 1;
      const T& component = v[bit];
      if (!(component == T(0))) {
        const T signed_part = (position % 2 == 0) ? c : -c;
        r.accumulate(mask & ~(IndexMask(1) << bit), component * signed_part);
      }
      ++position;
    }
  }
  return r;
}

/// Matrix of a 2-form in the shared convention w(X,Y) = X^T M Y, with
/// M[i][j] the coefficient of e^i ^ e^j for i < j.
template <class T>
SkewMatrix<T> form_matrix(const KForm<T>& f) {
  if (f.degree() != 2) throw Error("form_matrix requires a 2-form");
  const std::size_t n = f.dimension();
  Matrix<T> m(n, n);
  for (const auto& [mask, c] : f.terms()) {
    const auto t = mask_to_tuple(mask);
    m(t[0] - 1, t[1] - 1) = c;
    m(t[1] - 1, t[0] - 1) = -c;
  }
  return SkewMatrix<T>(std::move(m));
}

template <class T>
KForm<T> matrix_form(const SkewMatrix<T>& sk) {
  const Matrix<T>& m = sk.get();
  KForm<T> f(m.rows(), 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == T(0)))
        f.add_term({static_cast<int>(i) + 1, static_cast<int>(j) + 1}, m(i, j));
  return f;
}

/// Matrix rank of a 2-form; always even.
template <class T>
std::size_t rank_2form(const KForm<T>& f) {
  return rank(form_matrix(f).get());
}

inline std::string format_scalar(const Rational& v) { return format_rational(v); }
inline std::string format_scalar(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <class T>
std::string format_kform(const KForm<T>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [tuple, c] : f.sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    os << format_scalar(c) << "*";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) os << "^";
      os << "e" << tuple[i];
    }
  }
  return os.str();
}

using RForm = KForm<Rational>;

}  // namespace recop
