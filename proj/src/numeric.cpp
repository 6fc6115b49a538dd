#include "partlab/numeric.hpp"

namespace partlab {

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0 && sgn(base) == 0)
    throw std::invalid_argument("rat_pow: zero base with negative exponent");
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  Int num = int_pow(Int(base.get_num()), mag);
  Int den = int_pow(Int(base.get_den()), mag);
  return e < 0 ? make_rat(den, num) : make_rat(num, den);
}

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int round_nearest(const Rat& q) {
  // floor((2 num + den) / (2 den)) rounds halves up; for negative q halves
  // must go down (away from zero), so mirror.
  if (sgn(q) < 0) return -round_nearest(Rat(-q));
  Int num2 = 2 * q.get_num() + q.get_den();
  Int den2 = 2 * q.get_den();
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
  return r;
}

Rat exp_inv_upper_bound(const Int& m, const Rat& eps) {
  if (m < 1) throw std::invalid_argument("exp_inv_upper_bound: m must be >= 1");
  if (sgn(eps) <= 0) throw std::invalid_argument("exp_inv_upper_bound: eps must be > 0");
  // Partial sums of sum_j 1/(j! m^j).  After the term j = N the tail is
  // bounded by term(N+1) * 1/(1 - 1/((N+2)m)) <= 2*term(N+1).
  Rat sum(1);
  Rat term(1);
  unsigned long n_terms = 1;
  if (m.fits_ulong_p()) n_terms += m.get_ui();  // start at 1 + a_k terms
  unsigned long j = 0;
  Rat tail;
  for (;;) {
    while (j < n_terms) {
      ++j;
      term /= Rat(j) * Rat(m);
      sum += term;
    }
    Rat next = term / (Rat(j + 1) * Rat(m));
    tail = next * 2;  // geometric majorant, ratio <= 1/((j+2)m) <= 1/2
    if (tail < eps) break;
    n_terms += 4;
  }
  return sum + tail;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace partlab
