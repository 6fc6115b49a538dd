#include "partlab/power_series.hpp"

namespace partlab {

PowerSeries::PowerSeries(std::vector<Rat> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != order + 1)
    throw std::invalid_argument("PowerSeries: need exactly order+1 coefficients");
}

PowerSeries PowerSeries::one(std::size_t order) {
  std::vector<Rat> v(order + 1, Rat(0));
  v[0] = 1;
  return PowerSeries(std::move(v), order);
}

PowerSeries PowerSeries::reciprocal() const {
  if (sgn(coeffs_[0]) == 0)
    throw std::domain_error("PowerSeries::reciprocal: constant term is zero");
  std::vector<Rat> r(coeffs_.size(), Rat(0));
  r[0] = Rat(1) / coeffs_[0];
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    Rat acc(0);
    for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * r[n - i];
    r[n] = -acc / coeffs_[0];
  }
  return PowerSeries(std::move(r), order());
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("PowerSeries: mismatched truncation orders");
  std::vector<Rat> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  return PowerSeries(std::move(v), a.order());
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("PowerSeries: mismatched truncation orders");
  std::vector<Rat> v(a.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PowerSeries(std::move(v), a.order());
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.coeffs_ == b.coeffs_;
}

}  // namespace partlab
