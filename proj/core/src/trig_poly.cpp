#include "recop/trig_poly.hpp"

#include "recop/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace recop::flow {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TrigPoly TrigPoly::constant(std::size_t dim, double value) {
  TrigPoly p(dim);
  p.add_term(std::vector<int>(dim, 0), value, 0.0);
  return p;
}

void TrigPoly::add_term(std::vector<int> freq, double cos_coeff, double sin_coeff) {
  if (freq.size() != dim_) throw Error("trig term frequency has wrong dimension");
  // canonicalize: flip sign so the first nonzero frequency entry is positive
  for (int f : freq) {
    if (f > 0) break;
    if (f < 0) {
      for (int& g : freq) g = -g;
      sin_coeff = -sin_coeff;
      break;
    }
  }
  const bool zero_freq = std::all_of(freq.begin(), freq.end(), [](int f) { return f == 0; });
  if (zero_freq) sin_coeff = 0.0;
  if (cos_coeff == 0.0 && sin_coeff == 0.0) return;
  auto [it, inserted] = terms_.emplace(std::move(freq), std::make_pair(cos_coeff, sin_coeff));
  if (!inserted) {
    it->second.first += cos_coeff;
    it->second.second += sin_coeff;
    if (it->second.first == 0.0 && it->second.second == 0.0) terms_.erase(it);
  }
}

double TrigPoly::evaluate(const std::vector<double>& x) const {
  double value = 0.0;
  for (const auto& [freq, cs] : terms_) {
    double phase = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) phase += freq[j] * x[j];
    phase *= kTwoPi;
    value += cs.first * std::cos(phase) + cs.second * std::sin(phase);
  }
  return value;
}

TrigPoly TrigPoly::derivative(std::size_t j) const {
  TrigPoly d(dim_);
  for (const auto& [freq, cs] : terms_) {
    if (freq[j] == 0) continue;
    const double factor = kTwoPi * freq[j];
    d.add_term(freq, factor * cs.second, -factor * cs.first);
  }
  return d;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
  TrigPoly r = *this;
  for (const auto& [freq, cs] : o.terms_) r.add_term(freq, cs.first, cs.second);
  return r;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const {
  TrigPoly r = *this;
  for (const auto& [freq, cs] : o.terms_) r.add_term(freq, -cs.first, -cs.second);
  return r;
}

TrigPoly TrigPoly::operator*(double s) const {
  TrigPoly r(dim_);
  if (s == 0.0) return r;
  for (const auto& [freq, cs] : terms_) r.add_term(freq, cs.first * s, cs.second * s);
  return r;
}

double TrigPoly::max_coefficient() const {
  double m = 0.0;
  for (const auto& [freq, cs] : terms_)
    m = std::max({m, std::abs(cs.first), std::abs(cs.second)});
  return m;
}

int TrigPoly::max_frequency() const {
  int m = 0;
  for (const auto& [freq, cs] : terms_)
    for (int f : freq) m = std::max(m, std::abs(f));
  return m;
}

void TimePoly::add(std::size_t power, const TrigPoly& p) {
  while (coeffs_.size() <= power) coeffs_.emplace_back(dim_);
  coeffs_[power] = coeffs_[power] + p;
}

double TimePoly::evaluate(const std::vector<double>& x, double t) const {
  double value = 0.0;
  double tp = 1.0;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) value += tp * c.evaluate(x);
    tp *= t;
  }
  return value;
}

TimePoly TimePoly::derivative_x(std::size_t j) const {
  TimePoly d(dim_);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) d.add(m, coeffs_[m].derivative(j));
  return d;
}

TimePoly TimePoly::integrate_t() const {
  TimePoly r(dim_);
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    r.add(m + 1, coeffs_[m] * (1.0 / static_cast<double>(m + 1)));
  return r;
}

TimePoly TimePoly::operator+(const TimePoly& o) const {
  TimePoly r = *this;
  for (std::size_t m = 0; m < o.coeffs_.size(); ++m) r.add(m, o.coeffs_[m]);
  return r;
}

TimePoly TimePoly::operator-(const TimePoly& o) const {
  TimePoly r = *this;
  for (std::size_t m = 0; m < o.coeffs_.size(); ++m) r.add(m, o.coeffs_[m] * -1.0);
  return r;
}

TimePoly TimePoly::operator*(double s) const {
  TimePoly r(dim_);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) r.add(m, coeffs_[m] * s);
  return r;
}

bool TimePoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

double TimePoly::max_coefficient() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, c.max_coefficient());
  return m;
}

int TimePoly::max_frequency() const {
  int m = 0;
  for (const auto& c : coeffs_) m = std::max(m, c.max_frequency());
  return m;
}

}  // namespace recop::flow
