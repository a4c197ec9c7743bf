#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace recop::flow {

/// Real trigonometric polynomial on the torus R^n / Z^n:
///   sum over integer frequency vectors k of
///   cos_k * cos(2 pi k.x) + sin_k * sin(2 pi k.x).
/// Integral frequencies make every value 1-periodic in each coordinate.
/// Canonical form: the first nonzero frequency component is positive and the
/// zero frequency carries no sine part.
class TrigPoly {
 public:
  explicit TrigPoly(std::size_t dim) : dim_(dim) {}

  static TrigPoly constant(std::size_t dim, double value);

  std::size_t dimension() const { return dim_; }

  void add_term(std::vector<int> freq, double cos_coeff, double sin_coeff);

  double evaluate(const std::vector<double>& x) const;

  /// Analytic partial derivative in coordinate j (0-based).
  TrigPoly derivative(std::size_t j) const;

  TrigPoly operator+(const TrigPoly& o) const;
  TrigPoly operator-(const TrigPoly& o) const;
  TrigPoly operator*(double s) const;

  bool is_zero() const { return terms_.empty(); }
  double max_coefficient() const;
  int max_frequency() const;

  const std::map<std::vector<int>, std::pair<double, double>>& terms() const { return terms_; }

 private:
  std::size_t dim_;
  std::map<std::vector<int>, std::pair<double, double>> terms_;  // freq -> (cos, sin)
};

/// Polynomial in the deformation time t with TrigPoly coefficients.
class TimePoly {
 public:
  explicit TimePoly(std::size_t dim) : dim_(dim) {}

  std::size_t dimension() const { return dim_; }

  /// Coefficient of t^power (extends with zero polynomials as needed).
  void add(std::size_t power, const TrigPoly& p);

  double evaluate(const std::vector<double>& x, double t) const;

  TimePoly derivative_x(std::size_t j) const;

  /// Antiderivative in t vanishing at t = 0: t^m -> t^{m+1}/(m+1).
  TimePoly integrate_t() const;

  TimePoly operator+(const TimePoly& o) const;
  TimePoly operator-(const TimePoly& o) const;
  TimePoly operator*(double s) const;

  bool is_zero() const;
  double max_coefficient() const;
  int max_frequency() const;

  const std::vector<TrigPoly>& coefficients() const { return coeffs_; }

 private:
  std::size_t dim_;
  std::vector<TrigPoly> coeffs_;  // index = power of t
};

}  // namespace recop::flow
