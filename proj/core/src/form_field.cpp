#include "recop/form_field.hpp"

#include <algorithm>
#include <cmath>

namespace recop::flow {

std::vector<double> OneFormField::evaluate(const std::vector<double>& x, double t) const {
  std::vector<double> v(n_);
  for (std::size_t j = 0; j < n_; ++j) v[j] = components_[j].evaluate(x, t);
  return v;
}

std::vector<double> OneFormField::evaluate_dx(std::size_t k, const std::vector<double>& x,
                                              double t) const {
  std::vector<double> v(n_);
  for (std::size_t j = 0; j < n_; ++j) v[j] = components_[j].derivative_x(k).evaluate(x, t);
  return v;
}

OneFormField OneFormField::derivative_x(std::size_t k) const {
  OneFormField r(n_);
  for (std::size_t j = 0; j < n_; ++j) r.components_[j] = components_[j].derivative_x(k);
  return r;
}

OneFormField OneFormField::integrate_t() const {
  OneFormField r(n_);
  for (std::size_t j = 0; j < n_; ++j) r.components_[j] = components_[j].integrate_t();
  return r;
}

bool OneFormField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const TimePoly& p) { return p.is_zero(); });
}

int OneFormField::max_frequency() const {
  int m = 0;
  for (const auto& c : components_) m = std::max(m, c.max_frequency());
  return m;
}

TwoFormField TwoFormField::from_constant(const KForm<double>& base) {
  if (base.degree() != 2) throw Error("TwoFormField base must be a 2-form");
  TwoFormField f(base.dimension());
  for (const auto& [tuple, c] : base.sorted_terms()) {
    TimePoly p(base.dimension());
    p.add(0, TrigPoly::constant(base.dimension(), c));
    f.add(tuple[0] - 1, tuple[1] - 1, p);
  }
  return f;
}

void TwoFormField::add(std::size_t i, std::size_t j, const TimePoly& p) {
  if (i >= j) throw Error("TwoFormField indices must be increasing");
  auto [it, inserted] = coeffs_.emplace(std::make_pair(i, j), p);
  if (!inserted) it->second = it->second + p;
}

const TimePoly* TwoFormField::coefficient(std::size_t i, std::size_t j) const {
  const auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? nullptr : &it->second;
}

Matrix<double> TwoFormField::matrix_at(const std::vector<double>& x, double t) const {
  Matrix<double> m(n_, n_);
  for (const auto& [ij, p] : coeffs_) {
    const double v = p.evaluate(x, t);
    m(ij.first, ij.second) = v;
    m(ij.second, ij.first) = -v;
  }
  return m;
}

Matrix<double> TwoFormField::matrix_dx_at(std::size_t k, const std::vector<double>& x,
                                          double t) const {
  Matrix<double> m(n_, n_);
  for (const auto& [ij, p] : coeffs_) {
    const double v = p.derivative_x(k).evaluate(x, t);
    m(ij.first, ij.second) = v;
    m(ij.second, ij.first) = -v;
  }
  return m;
}

TwoFormField TwoFormField::derivative_x(std::size_t k) const {
  TwoFormField r(n_);
  for (const auto& [ij, p] : coeffs_) {
    TimePoly d = p.derivative_x(k);
    if (!d.is_zero()) r.add(ij.first, ij.second, d);
  }
  return r;
}

TwoFormField TwoFormField::operator+(const TwoFormField& o) const {
  TwoFormField r = *this;
  for (const auto& [ij, p] : o.coeffs_) r.add(ij.first, ij.second, p);
  return r;
}

int TwoFormField::max_frequency() const {
  int m = 0;
  for (const auto& [ij, p] : coeffs_) m = std::max(m, p.max_frequency());
  return m;
}

TwoFormField exterior_derivative_field(const OneFormField& a) {
  const std::size_t n = a.dimension();
  TwoFormField d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const TimePoly coeff = a.component(j).derivative_x(i) - a.component(i).derivative_x(j);
      if (!coeff.is_zero()) d.add(i, j, coeff);
    }
  return d;
}

double closedness_residual(const TwoFormField& w) {
  const std::size_t n = w.dimension();
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // (dw)_{ijk} = d_i w_{jk} - d_j w_{ik} + d_k w_{ij}
        TimePoly total(n);
        if (const TimePoly* p = w.coefficient(j, k)) total = total + p->derivative_x(i);
        if (const TimePoly* p = w.coefficient(i, k)) total = total - p->derivative_x(j);
        if (const TimePoly* p = w.coefficient(i, j)) total = total + p->derivative_x(k);
        residual = std::max(residual, total.max_coefficient());
      }
  return residual;
}

FormFamily::FormFamily(KForm<double> base, OneFormField primitive)
    : base_(std::move(base)), alpha_(std::move(primitive)),
      omega_(TwoFormField::from_constant(base_) +
             exterior_derivative_field(alpha_.integrate_t())) {
  if (base_.dimension() != alpha_.dimension())
    throw Error("FormFamily: base and primitive dimensions differ");
}

Matrix<double> FormFamily::average_matrix(double t, std::size_t grid_per_axis) const {
  const std::size_t n = dimension();
  if (static_cast<int>(grid_per_axis) <= omega_.max_frequency())
    throw Error("cohomology grid does not resolve the family's frequencies");
  Matrix<double> avg(n, n);
  std::vector<double> x(n, 0.0);
  std::vector<std::size_t> idx(n, 0);
  const double h = 1.0 / static_cast<double>(grid_per_axis);
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= grid_per_axis;
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rem = p;
    for (std::size_t j = 0; j < n; ++j) {
      idx[j] = rem % grid_per_axis;
      rem /= grid_per_axis;
      x[j] = static_cast<double>(idx[j]) * h;
    }
    avg = avg + omega_.matrix_at(x, t);
  }
  return avg * (1.0 / static_cast<double>(total));
}

int FormFamily::max_frequency() const {
  return std::max(omega_.max_frequency(), alpha_.max_frequency());
}

}  // namespace recop::flow
