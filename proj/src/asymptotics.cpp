#include "partlab/asymptotics.hpp"

#include "partlab/power_series.hpp"

namespace partlab {

SigmaTable sigma_table(const PartSystem& system, std::size_t order) {
  PowerSeries prod = PowerSeries::one(order);
  for (const Int& a : system.parts()) {
    // sinh(a t / 2) / (a t / 2) = sum_j (a/2)^(2j) t^(2j) / (2j+1)!
    std::vector<Rat> f(order + 1, Rat(0));
    const Rat half_a = make_rat(a, Int(2));
    Rat term(1);
    f[0] = 1;
    for (std::size_t j = 1; 2 * j <= order; ++j) {
      term *= half_a * half_a;
      term /= Rat(2 * j) * Rat(2 * j + 1);
      f[2 * j] = term;
    }
    prod = prod * PowerSeries(std::move(f), order).reciprocal();
  }
  return SigmaTable{system, prod.coefficients()};
}

Rat leading_term_coefficient(const PartSystem& system) {
  if (system.k() < 2)
    throw std::domain_error("leading_term_coefficient: needs k >= 2");
  if (system.gcd_all() != 1)
    throw std::domain_error("leading_term_coefficient: parts must have gcd 1");
  return make_rat(Int(1), factorial(system.k() - 1) * system.product());
}

Polynomial polynomial_part(const PartSystem& system, std::size_t j) {
  const std::size_t k = system.k();
  if (j < 1 || j > k) throw std::invalid_argument("polynomial_part: j out of range");
  if (!gcd_all_multisubsets(system, j))
    throw std::domain_error("polynomial_part: some j-multisubset has gcd > 1");

  const SigmaTable sig = sigma_table(system, k - j);
  const Rat half_sigma = make_rat(system.sum(), Int(2));
  const Polynomial shifted(std::vector<Rat>{half_sigma, Rat(1)});  // n + sigma/2

  Polynomial acc;
  for (std::size_t i = 0; i <= k - j; ++i) {
    if (sgn(sig.at(i)) == 0) continue;
    const std::size_t d = k - 1 - i;
    Rat c = sig.at(i) / Rat(factorial(d));
    acc += shifted.pow(d) * c;
  }
  return acc * make_rat(Int(1), system.product());
}

BernoulliTable bernoulli_table(std::size_t order) {
  std::vector<Rat> b(order + 1, Rat(0));
  b[0] = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    Rat acc(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(b[i]) == 0) continue;
      acc += Rat(binomial(Int(m + 1), i)) * b[i];
    }
    b[m] = -acc / Rat(m + 1);
  }
  if (order >= 1) b[1] = make_rat(Int(1), Int(2));  // the +1/2 convention
  return BernoulliTable{std::move(b)};
}

namespace {

// --- exact upper bound for int |g| ------------------------------------
//
// Pieces free of roots integrate exactly as |G(b) - G(a)|.  Pieces that may
// contain a root (detected with a Sturm chain, so sign-preserving dips are
// caught too) are bisected; below the width floor they are capped by
// width * sup|g|.

Polynomial poly_remainder(Polynomial a, const Polynomial& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rat f = a.coefficients().back() / b.coefficients().back();
    a -= Polynomial::monomial(f, a.degree() - b.degree()) * b;
  }
  return a;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Polynomial poly_divide_exact(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
  Polynomial rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    std::size_t d = rem.degree() - b.degree();
    Rat f = rem.coefficients().back() / b.coefficients().back();
    q[d] = f;
    rem -= Polynomial::monomial(f, d) * b;
  }
  if (!rem.is_zero()) throw std::logic_error("poly_divide_exact: not divisible");
  return Polynomial(std::move(q));
}

std::vector<Polynomial> sturm_chain(const Polynomial& g) {
  Polynomial squarefree = g;
  Polynomial d = g.derivative();
  if (!d.is_zero()) {
    Polynomial common = poly_gcd(g, d);
    if (common.degree() > 0) squarefree = poly_divide_exact(g, common);
  }
  std::vector<Polynomial> chain{squarefree, squarefree.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Polynomial r = poly_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(r * Rat(-1));
  }
  return chain;
}

int sturm_sign_changes(const std::vector<Polynomial>& chain, const Rat& x) {
  int changes = 0, prev = 0;
  for (const Polynomial& s : chain) {
    int sg = sgn(s(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++changes;
    prev = sg;
  }
  return changes;
}

struct AbsIntegralCtx {
  std::vector<Polynomial> chain;
  Polynomial antiderivative;
  Rat sup_bound;  // >= sup |g| on [u, v]
};

bool may_have_root(const AbsIntegralCtx& ctx, const Rat& a, const Rat& b) {
  if (sgn(ctx.chain.front()(a)) == 0 || sgn(ctx.chain.front()(b)) == 0) return true;
  return sturm_sign_changes(ctx.chain, a) > sturm_sign_changes(ctx.chain, b);
}

Rat abs_integral_piece(const AbsIntegralCtx& ctx, const Rat& a, const Rat& b, int depth) {
  if (!may_have_root(ctx, a, b)) {
    Rat exact = ctx.antiderivative(b) - ctx.antiderivative(a);
    return Rat(abs(exact));
  }
  if (depth == 0) return (b - a) * ctx.sup_bound;
  Rat mid = (a + b) / 2;
  return abs_integral_piece(ctx, a, mid, depth - 1) +
         abs_integral_piece(ctx, mid, b, depth - 1);
}

}  // namespace

Rat upper_abs_integral(const Polynomial& g, const Int& u, const Int& v) {
  if (g.is_zero()) return Rat(0);
  AbsIntegralCtx ctx;
  ctx.chain = sturm_chain(g);
  ctx.antiderivative = g.antiderivative();
  Int au(abs(u)), av(abs(v));
  Int x_sup = au > av ? au : av;
  Rat bound(0);
  Rat xp(1);
  for (const Rat& c : g.coefficients()) {
    bound += abs(c) * xp;
    xp *= Rat(x_sup);
  }
  ctx.sup_bound = bound;

  Rat total(0);
  for (Int t = u; t < v; ++t)
    total += abs_integral_piece(ctx, Rat(t), Rat(t + 1), 40);
  return total;
}

EulerMaclaurinResult euler_maclaurin_poly_sum(const Polynomial& f, const Int& u,
                                              const Int& v, unsigned p) {
  if (sgn(u) < 0 || u >= v)
    throw std::invalid_argument("euler_maclaurin_poly_sum: need 0 <= u < v");
  if (p < 1) throw std::invalid_argument("euler_maclaurin_poly_sum: need p >= 1");

  const Polynomial big_f = f.antiderivative();
  Rat value = big_f(v) - big_f(u) + (f(u) + f(v)) / 2;

  const BernoulliTable bern = bernoulli_table(2 * (p / 2));
  Polynomial deriv = f;
  for (unsigned jj = 1; jj <= p / 2; ++jj) {
    deriv = deriv.derivative();                       // order 2j-1 after this pass
    value += bern.at(2 * jj) / Rat(factorial(2 * jj)) * (deriv(v) - deriv(u));
    deriv = deriv.derivative();                       // order 2j, ready for next pass
  }

  Polynomial g = f;
  for (unsigned i = 0; i < p; ++i) g = g.derivative();
  if (g.is_zero()) return EulerMaclaurinResult{value, Rat(0)};

  // 2 zeta(p) / (2 pi)^p <= (33/10) / 6^p for every p >= 1.
  Rat coeff = make_rat(Int(33), Int(10) * int_pow(Int(6), p));
  return EulerMaclaurinResult{value, coeff * upper_abs_integral(g, u, v)};
}

}  // namespace partlab
