#pragma once

#include "recop/rational.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace recop {

/// Dense row-major matrix over an exact field (Rational) or over double.
/// Pivoting adapts to the scalar: exact mode takes the first nonzero pivot
/// so results are deterministic, float mode takes the largest magnitude.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const = default;

  Matrix operator+(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Matrix operator*(const T& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (!(v == T(0))) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
  }
  bool is_symmetric() const { return rows_ == cols_ && *this == transpose(); }
  bool is_skew() const { return rows_ == cols_ && *this == -transpose(); }

  /// Glue matrices along the diagonal, zero elsewhere.
  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
  }

  /// Columns listed in `cols` gathered into a new matrix.
  Matrix select_columns(const std::vector<std::size_t>& cols) const {
    Matrix r(rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, cols[j]);
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

namespace detail {

template <class T>
bool pivot_better(const T& candidate, const T& incumbent) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::abs(candidate) > std::abs(incumbent);
  } else {
    (void)candidate;
    (void)incumbent;
    return false;  // exact mode: keep the first nonzero pivot
  }
}

}  // namespace detail

/// In-place reduced row echelon form. Returns the pivot columns; the rank is
/// their count. Exact over Rational; used with double only where the caller
/// accepts float pivoting.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t i = row; i < m.rows(); ++i) {
      if (m(i, col) == T(0)) continue;
      if (best == m.rows() || detail::pivot_better(m(i, col), m(best, col))) best = i;
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
    const T inv_pivot = T(1) / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv_pivot;
    m(row, col) = T(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == T(0)) continue;
      const T factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
      m(i, col) = T(0);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref_in_place(m).size();
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const auto pivots = rref_in_place(aug);
  // the identity block keeps [M|I] at full row rank; M is invertible only
  // when every pivot lands in the left block
  if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    for (std::size_t i = col; i < n; ++i) {
      if (m(i, col) == T(0)) continue;
      if (best == n || detail::pivot_better(m(i, col), m(best, col))) best = i;
    }
    if (best == n) return T(0);
    if (best != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(best, j));
      det = -det;
    }
    det = det * m(col, col);
    const T inv_pivot = T(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == T(0)) continue;
      const T factor = m(i, col) * inv_pivot;
      for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - factor * m(col, j);
    }
  }
  return det;
}

/// Null-space basis in the deterministic reduced-echelon parameterization:
/// one vector per free column, unit entry at the free index.
template <class T>
std::vector<std::vector<T>> null_space(Matrix<T> m) {
  const std::size_t n = m.cols();
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(n, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Pfaffian by skew-symmetric elimination: congruence updates M -> E M E^T
/// preserve the Pfaffian, row/column swaps flip its sign.
template <class T>
T pfaffian(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (n % 2 != 0) throw Error("pfaffian requires even dimension");
  if (!m.is_skew()) throw Error("pfaffian requires a skew-symmetric matrix");
  T result(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t best = n;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (m(k, j) == T(0)) continue;
      if (best == n || detail::pivot_better(m(k, j), m(k, best))) best = j;
    }
    if (best == n) return T(0);
    if (best != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k + 1, j), m(best, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, best));
      result = -result;
    }
    const T pivot = m(k, k + 1);
    result = result * pivot;
    for (std::size_t i = k + 2; i < n; ++i) {
      if (m(k, i) == T(0)) continue;
      const T factor = m(k, i) / pivot;
      for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j) - factor * m(k + 1, j);
      for (std::size_t j = 0; j < n; ++j) m(j, i) = m(j, i) - factor * m(j, k + 1);
    }
  }
  return result;
}

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
  bool neutral() const { return positive == negative; }
  bool definite() const { return zero == 0 && (positive == 0 || negative == 0); }
};

/// Inertia of a symmetric rational matrix by symmetric pivoting (Sylvester's
/// law of inertia). Exact; never forms square roots.
inline Signature signature(Matrix<Rational> s) {
  if (!s.is_symmetric()) throw Error("signature requires a symmetric matrix");
  const std::size_t n = s.rows();
  std::vector<bool> done(n, false);
  Signature sig;
  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && s(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // no diagonal pivot left; look for an off-diagonal hyperbolic entry
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (done[j]) continue;
          if (s(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
        }
      }
      if (a == n) break;  // remaining block is zero
      // congruence e_a -> e_a + e_b makes s(a,a) = 2 s(a,b) != 0
      for (std::size_t j = 0; j < n; ++j) s(a, j) += s(b, j);
      for (std::size_t i = 0; i < n; ++i) s(i, a) += s(i, b);
      continue;
    }
    const Rational d = s(pivot, pivot);
    if (d > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot || done[i] || s(i, pivot) == 0) continue;
      const Rational factor = s(i, pivot) / d;
      for (std::size_t j = 0; j < n; ++j) s(i, j) -= factor * s(pivot, j);
      for (std::size_t j = 0; j < n; ++j) s(j, i) -= factor * s(j, pivot);
    }
    done[pivot] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!done[i]) ++sig.zero;
  return sig;
}

/// Validated skew wrapper; rejects anything with M != -M^T on construction.
template <class T>
class SkewMatrix {
 public:
  explicit SkewMatrix(Matrix<T> m) : m_(std::move(m)) {
    if (!m_.is_skew()) throw Error("matrix is not skew-symmetric");
  }
  const Matrix<T>& get() const { return m_; }

 private:
  Matrix<T> m_;
};

/// Validated symmetric wrapper.
template <class T>
class SymMatrix {
 public:
  explicit SymMatrix(Matrix<T> m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw Error("matrix is not symmetric");
  }
  const Matrix<T>& get() const { return m_; }

 private:
  Matrix<T> m_;
};

using RMatrix = Matrix<Rational>;
using RVector = std::vector<Rational>;

/// Frame vector e_index (1-based).
inline RVector unit_vector(std::size_t n, int index) {
  RVector v(n, Rational(0));
  v[index - 1] = Rational(1);
  return v;
}

}  // namespace recop
