#ifndef PARTLAB_ASYMPTOTICS_HPP
#define PARTLAB_ASYMPTOTICS_HPP

#include <cstddef>
#include <vector>

#include "partlab/part_system.hpp"
#include "partlab/polynomial.hpp"

namespace partlab {

// Coefficients sigma_0..sigma_M of prod_i (a_i t/2) / sinh(a_i t/2).
// Odd entries vanish; sigma_0 = 1.
struct SigmaTable {
  PartSystem system;
  std::vector<Rat> coeffs;

  const Rat& at(std::size_t m) const { return coeffs.at(m); }
  std::size_t order() const { return coeffs.size() - 1; }
};

SigmaTable sigma_table(const PartSystem& system, std::size_t order);

// Coefficient of n^(k-1) in p_A(n, k): 1 / ((k-1)! prod a_i).  Needs k >= 2
// and gcd of all parts 1.
Rat leading_term_coefficient(const PartSystem& system);

// Truncated polynomial expansion
//   (1/prod a_i) sum_{i=0}^{k-j} sigma_i (n + sigma/2)^(k-1-i) / (k-1-i)!
// whose coefficients of degree >= j-1 are the residue-independent
// quasi-polynomial coefficients.  Requires every j-multisubset of the parts
// to have gcd 1.
Polynomial polynomial_part(const PartSystem& system, std::size_t j);

// Bernoulli numbers B_0..B_order in the B_1 = +1/2 convention.
struct BernoulliTable {
  std::vector<Rat> values;
  const Rat& at(std::size_t m) const { return values.at(m); }
};

BernoulliTable bernoulli_table(std::size_t order);

struct EulerMaclaurinResult {
  Rat value;            // integral + boundary + Bernoulli correction terms
  Rat remainder_bound;  // rational majorant of |sum - value|; 0 when p > deg f
};

// Euler-Maclaurin evaluation of sum_{i=u}^{v} f(i) for a polynomial f with
// 0 <= u < v and p >= 1.  When p exceeds deg f the value is the exact sum.
// Otherwise the remainder is bounded by (2 zeta(p)/(2 pi)^p) int |f^(p)|,
// majorized rationally via zeta(p) <= 33/20 and (2 pi)^p >= 6^p, with the
// integral upper-bounded piecewise between isolated root intervals.
EulerMaclaurinResult euler_maclaurin_poly_sum(const Polynomial& f, const Int& u,
                                              const Int& v, unsigned p);

// Rational upper bound for int_u^v |g|; exposed for the remainder tests.
Rat upper_abs_integral(const Polynomial& g, const Int& u, const Int& v);

}  // namespace partlab

#endif
