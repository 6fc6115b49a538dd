#include "partlab/polynomial.hpp"

namespace partlab {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rat& c) {
  return Polynomial(std::vector<Rat>{c});
}

Polynomial Polynomial::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Rat Polynomial::coeff(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : Rat(0);
}

Rat Polynomial::operator()(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

Rat Polynomial::operator()(const Int& x) const { return (*this)(Rat(x)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return Polynomial();
  std::vector<Rat> v(coeffs_.size() + 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[i + 1] = coeffs_[i] / Rat(i + 1);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::truncated_below(std::size_t d) const {
  std::vector<Rat> v = coeffs_;
  for (std::size_t i = 0; i < v.size() && i < d; ++i) v[i] = 0;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial acc = Polynomial::constant(Rat(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Rat& s) {
  std::vector<Rat> v = a.coeffs_;
  for (Rat& c : v) c *= s;
  return Polynomial(std::move(v));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.coeffs_ == b.coeffs_;
}

}  // namespace partlab
