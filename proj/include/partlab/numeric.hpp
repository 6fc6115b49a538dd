#ifndef PARTLAB_NUMERIC_HPP
#define PARTLAB_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace partlab {

// All integer quantities live in arbitrary precision; all non-integer
// quantities are exact rationals.  No floating point anywhere in the
// computation paths.
using Int = mpz_class;
using Rat = mpq_class;

// Raised when a construction would exceed a configured work budget and a
// cheaper route exists.  The message names the alternative.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// num/den in canonical form: gcd 1, positive denominator.  den == 0 throws.
Rat make_rat(const Int& num, const Int& den);

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);
Int factorial(unsigned long n);
Int binomial(const Int& n, unsigned long k);
Int int_pow(const Int& base, unsigned long e);

// Integer exponent, negative allowed (base must be nonzero then).
Rat rat_pow(const Rat& base, long e);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
bool is_integer(const Rat& q);

// Nearest integer, halves rounded away from zero.
Int round_nearest(const Rat& q);

// Rational R with e^(1/m) < R and R - e^(1/m) < eps, from a Taylor prefix
// of e^(1/m) plus a geometric tail majorant.  m >= 1, eps > 0.
Rat exp_inv_upper_bound(const Int& m, const Rat& eps);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);  // always "num/den", e.g. "5/1"

}  // namespace partlab

#endif
