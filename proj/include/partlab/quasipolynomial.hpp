#ifndef PARTLAB_QUASIPOLYNOMIAL_HPP
#define PARTLAB_QUASIPOLYNOMIAL_HPP

#include <cstddef>
#include <vector>

#include "partlab/part_system.hpp"
#include "partlab/polynomial.hpp"

namespace partlab {

// Unsigned Stirling numbers of the first kind: x(x+1)...(x+n-1) =
// sum_i stirling1_unsigned(n, i) x^i.
Int stirling1_unsigned(unsigned long n, unsigned long i);

// Coefficient vector of the rising factorial x(x+1)...(x+n-1).
Polynomial rising_factorial(unsigned long n);

struct StableCoefficients {
  // Smallest degree d such that the coefficients of every degree >= d agree
  // across all residue classes.  k means nothing agrees (possible when the
  // leading coefficient itself is residue-dependent, e.g. gcd > 1 systems).
  std::size_t min_degree;
  // The shared coefficients, as a polynomial with zeros below min_degree.
  Polynomial tail;
};

// p_A(n, k) as one exact rational polynomial per residue class mod
// D = lcm(parts).  Evaluation picks the class of n and certifies the result
// is a non-negative integer.
class QuasiPolynomial {
 public:
  QuasiPolynomial(PartSystem system, std::vector<Polynomial> residue_polys);

  const PartSystem& system() const { return system_; }
  std::size_t period() const { return polys_.size(); }
  const Polynomial& residue_polynomial(std::size_t r) const { return polys_.at(r); }

  Int evaluate(const Int& n) const;
  StableCoefficients stable_coefficients() const;

  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b);

 private:
  PartSystem system_;
  std::vector<Polynomial> polys_;  // index = residue mod D
};

// Direct construction from the explicit finite sum over part-multiplicity
// tuples (j_1..j_k), 0 <= j_i <= D/a_i - 1: each tuple with weighted sum T
// congruent to n contributes sum_i s1(k, i+1) ((n-T)/D)^i / (k-1)!.  The
// conceptual tuple count prod_i D/a_i must stay within tuple_budget.
QuasiPolynomial quasipolynomial_by_formula(const PartSystem& system,
                                           unsigned long tuple_budget = 10000000);

// Production route: exact rational interpolation through k table values per
// residue class, then verified against k further table values.
QuasiPolynomial quasipolynomial_by_interpolation(const PartSystem& system);

}  // namespace partlab

#endif
