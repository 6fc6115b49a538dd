#ifndef PARTLAB_POLYNOMIAL_HPP
#define PARTLAB_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

#include "partlab/numeric.hpp"

namespace partlab {

// Dense univariate polynomial with exact rational coefficients, index =
// degree.  Normal form strips trailing zero coefficients; the zero
// polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs);
  static Polynomial constant(const Rat& c);
  static Polynomial monomial(const Rat& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t d) const;
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  Rat operator()(const Rat& x) const;
  Rat operator()(const Int& x) const;

  Polynomial derivative() const;
  Polynomial antiderivative() const;  // constant of integration 0
  // Coefficients below degree d zeroed; the rest kept.
  Polynomial truncated_below(std::size_t d) const;
  Polynomial pow(unsigned long e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rat& s);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Rat> coeffs_;
  void normalize();
};

}  // namespace partlab

#endif
