#include "partlab/bounds.hpp"

#include "partlab/asymptotics.hpp"

namespace partlab {

const char* to_string(EnvelopeKind kind) {
  switch (kind) {
    case EnvelopeKind::LeadingTerm: return "leading-term";
    case EnvelopeKind::CubicConstant: return "cubic-constant";
    case EnvelopeKind::TopThree: return "top-three";
    case EnvelopeKind::StableTail: return "stable-tail";
  }
  return "?";
}

namespace {

bool pairwise_coprime_prefix(const PartSystem& s, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (int_gcd(s.part(i), s.part(j)) != 1) return false;
  return true;
}

// alpha, beta, gamma of the three leading quasi-polynomial terms:
// alpha = 1/((k-1)! prod), beta = sigma/(2 (k-2)! prod),
// gamma = (3 sigma^2 - s_2) / (24 (k-3)! prod).
void top_three_coeffs(const PartSystem& s, Rat& alpha, Rat& beta, Rat& gamma) {
  const std::size_t k = s.k();
  const Int& prod = s.product();
  alpha = make_rat(Int(1), factorial(k - 1) * prod);
  beta = make_rat(s.sum(), 2 * factorial(k - 2) * prod);
  Int g_num = 3 * s.sum() * s.sum() - s.power_sum(2);
  gamma = make_rat(g_num, 24 * factorial(k - 3) * prod);
}

}  // namespace

BoundEnvelope leading_term_envelope(const PartSystem& system) {
  const std::size_t k = system.k();
  if (k < 3) throw std::domain_error("leading_term_envelope: needs k >= 3");
  if (!system.strictly_increasing())
    throw std::domain_error("leading_term_envelope: parts must be strictly increasing");
  if (int_gcd(system.part(0), system.part(1)) != 1)
    throw std::domain_error("leading_term_envelope: gcd(a1, a2) must be 1");
  Rat lead = make_rat(Int(1), factorial(k - 1) * system.product());
  return BoundEnvelope{system, EnvelopeKind::LeadingTerm,
                       Polynomial::monomial(lead, k - 1), Rat(1),
                       static_cast<long>(k) - 2, Int(1)};
}

BoundEnvelope cubic_constant_envelope(const PartSystem& system) {
  if (system.k() != 4) throw std::domain_error("cubic_constant_envelope: needs k = 4");
  if (!system.strictly_increasing())
    throw std::domain_error("cubic_constant_envelope: parts must be strictly increasing");
  if (!pairwise_coprime_prefix(system, 4))
    throw std::domain_error("cubic_constant_envelope: parts must be pairwise coprime");
  Rat alpha, beta, gamma;
  top_three_coeffs(system, alpha, beta, gamma);
  Polynomial main(std::vector<Rat>{Rat(0), gamma, beta, alpha});
  Int err_i = 16 * int_pow(system.product(), 3);
  Rat err(err_i);
  return BoundEnvelope{system, EnvelopeKind::CubicConstant, main, err, 0, Int(1)};
}

Rat top_three_error_coefficient(const PartSystem& system) {
  const std::size_t k = system.k();
  if (k < 4) throw std::domain_error("top_three_error_coefficient: needs k >= 4");
  if (!system.strictly_increasing())
    throw std::domain_error("top_three_error_coefficient: parts must be strictly increasing");
  if (!pairwise_coprime_prefix(system, 4))
    throw std::domain_error(
        "top_three_error_coefficient: first four parts must be pairwise coprime");
  const Int& ak = system.parts().back();
  Int cube = int_pow(system.part(0) * system.part(1) * system.part(2), 3);
  Rat rational_part =
      make_rat(Int(k) * Int(k) * cube * int_pow(ak, k + 3), system.product());
  Rat e_up = exp_inv_upper_bound(ak, make_rat(Int(1), Int(1000000)));
  return rational_part * e_up;
}

BoundEnvelope top_three_envelope(const PartSystem& system) {
  Rat err = top_three_error_coefficient(system);  // also validates hypotheses
  const std::size_t k = system.k();
  Rat alpha, beta, gamma;
  top_three_coeffs(system, alpha, beta, gamma);
  Polynomial quad(std::vector<Rat>{gamma, beta, alpha});
  Polynomial main = quad * Polynomial::monomial(Rat(1), k - 3);
  return BoundEnvelope{system, EnvelopeKind::TopThree, main, err,
                       static_cast<long>(k) - 4, system.parts().back()};
}

Rat stable_tail_error_coefficient(const PartSystem& system) {
  const std::size_t k = system.k();
  if (k < 2) throw std::domain_error("stable_tail_error_coefficient: needs k >= 2");
  Int num(1);
  const Int dk = system.lcm() * Int(k);
  for (std::size_t i = 1; i <= k; ++i) num *= 1 + Int(i) * dk;
  return make_rat(num, factorial(k) * system.product());
}

BoundEnvelope stable_tail_envelope(const PartSystem& system, std::size_t j) {
  Rat err = stable_tail_error_coefficient(system);
  Polynomial main = polynomial_part(system, j);  // validates j and gcd condition
  main = main.truncated_below(j - 1);
  return BoundEnvelope{system, EnvelopeKind::StableTail, main, err,
                       static_cast<long>(j) - 2, Int(1)};
}

namespace {

bool is_powers_of_two(const PartSystem& s) {
  Int want(1);
  for (const Int& a : s.parts()) {
    if (a != want) return false;
    want *= 2;
  }
  return s.k() >= 2;
}

bool is_consecutive_from_one(const PartSystem& s) {
  for (std::size_t i = 0; i < s.k(); ++i)
    if (s.part(i) != static_cast<unsigned long>(i + 1)) return false;
  return true;
}

bool has_one_to_five_prefix(const PartSystem& s) {
  if (s.k() < 5) return false;
  for (std::size_t i = 0; i < 5; ++i)
    if (s.part(i) != static_cast<unsigned long>(i + 1)) return false;
  return true;
}

// floor(prefactor * R) + 1 where R is an upper bound on e^(1/m) tight enough
// that the result overshoots the true strict bound by at most 1.
Int strict_exp_threshold(const Rat& prefactor, const Int& m) {
  Rat eps = make_rat(Int(1), Int(1000000));
  Rat half_over = Rat(1) / (2 * prefactor);
  if (half_over < eps) eps = half_over;
  Rat bound = prefactor * exp_inv_upper_bound(m, eps);
  return rat_floor(bound) + 1;
}

Int ceil_2pk(const PartSystem& s, unsigned long factor) {
  // ceil(factor * prod(1 + i D k) / k)
  Int num(factor);
  const Int dk = s.lcm() * Int(s.k());
  for (std::size_t i = 1; i <= s.k(); ++i) num *= 1 + Int(i) * dk;
  Int q;
  mpz_cdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), s.k());
  return q;
}

}  // namespace

Threshold bessenrodt_ono_threshold(const PartSystem& system) {
  const std::size_t k = system.k();
  if (k < 2)
    throw std::domain_error(
        "bessenrodt_ono_threshold: k = 1 never satisfies the product inequality");
  if (system.gcd_all() != 1)
    throw std::domain_error(
        "bessenrodt_ono_threshold: gcd(parts) > 1, the inequality fails infinitely often");

  Threshold t;
  if (k == 2 && system.strictly_increasing()) {
    Int q = 4 * system.product();
    t.theorem = "two-part-coprime";
    t.value = q + 1;
    t.condition = "k = 2, a1 < a2 coprime; p(a)p(b) > p(a+b) for all a,b > " + to_string(q);
    return t;
  }
  if (k >= 3 && system.strictly_increasing() &&
      int_gcd(system.part(0), system.part(1)) == 1) {
    Int dk = factorial(k - 1) * system.product();
    t.theorem = "factorial-product";
    t.value = 2 * dk + 2;
    t.condition =
        "strictly increasing, gcd(a1,a2) = 1; holds for all a,b >= " + to_string(t.value);
    if (is_powers_of_two(system)) {
      Int variant = int_pow(Int(2), k * (k - 1) / 2 + 1) * factorial(k - 1) + 1;
      t.variants.emplace_back("powers-of-two", variant);
    }
    return t;
  }
  t.theorem = "multiset-general";
  t.value = ceil_2pk(system, 2) + 2;
  t.condition = "gcd(parts) = 1; holds for all a,b >= " + to_string(t.value);
  return t;
}

Threshold log_concavity_threshold(const PartSystem& system) {
  const Classification cls = classify(system);
  if (!cls.logconcave_eventually)
    throw std::domain_error("log_concavity_threshold: " + cls.logconcave_reason);

  const std::size_t k = system.k();
  Threshold t;

  if (system.all_ones()) {
    t.theorem = "all-ones";
    if (k == 2) {
      t.value = 1;
      t.condition = "binomial column, log-concave for every n >= 1";
    } else {
      Int q;
      mpz_cdiv_q_ui(q.get_mpz_t(), Int(k).get_mpz_t(), k - 2);
      t.value = q;  // ceil(k / (k-2)), strengthened form
      t.condition = "binomial column; strengthened log-concavity from n >= " + to_string(q);
      t.variants.emplace_back("plain", Int(1));
    }
    return t;
  }

  if (is_consecutive_from_one(system) && k >= 5) {
    Int pre_i = 432 * factorial(k - 1) * int_pow(Int(k), k + 5);
    Rat pre(pre_i);
    t.theorem = "consecutive-integers";
    t.value = strict_exp_threshold(pre, Int(k));
    t.condition = "parts 1..k; log-concave for all n >= " + to_string(t.value);
    if (k > 5) t.variants.emplace_back("one-to-five-prefix", t.value);
    return t;
  }

  if (has_one_to_five_prefix(system) && k > 5 && system.strictly_increasing()) {
    const Int& ak = system.parts().back();
    Int pre_i = 432 * Int(k) * Int(k) * factorial(k - 1) * int_pow(ak, k + 3);
    Rat pre(pre_i);
    t.theorem = "one-to-five-prefix";
    t.value = strict_exp_threshold(pre, ak);
    t.condition = "parts begin 1,2,3,4,5; log-concave for all n >= " + to_string(t.value);
    return t;
  }

  if (k == 4 && system.strictly_increasing() && pairwise_coprime_prefix(system, 4)) {
    Int p4 = int_pow(system.product(), 4);
    t.theorem = "four-part-pairwise-coprime";
    t.value = 192 * p4;
    t.condition = "k = 4 pairwise coprime; plain log-concavity from n >= " + to_string(t.value);
    t.variants.emplace_back("strengthened", 288 * p4);
    return t;
  }

  if (k > 4 && system.strictly_increasing() && pairwise_coprime_prefix(system, 4)) {
    const Int& ak = system.parts().back();
    Int cube = int_pow(system.part(0) * system.part(1) * system.part(2), 3);
    Int pre_i = 2 * Int(k) * Int(k) * factorial(k - 1) * cube * int_pow(ak, k + 3);
    Rat pre(pre_i);
    t.theorem = "first-four-coprime";
    t.value = strict_exp_threshold(pre, ak);
    t.condition =
        "first four parts pairwise coprime; log-concave for all n >= " + to_string(t.value);
    return t;
  }

  t.theorem = "multiset-general";
  t.value = ceil_2pk(system, 2);
  t.condition = "every (k-2)-multisubset coprime; plain log-concavity from n >= " +
                to_string(t.value);
  t.variants.emplace_back("strengthened", k == 4 ? ceil_2pk(system, 3) : t.value);
  return t;
}

namespace {

bool find_bad_multisubset(const std::vector<Int>& parts, std::size_t j, std::size_t start,
                          std::vector<Int>& chosen, Int g, std::vector<Int>& out_set,
                          Int& out_gcd) {
  if (g == 1) return false;
  if (j == 0) {
    out_set = chosen;
    out_gcd = g;
    return true;
  }
  for (std::size_t i = start; i + j <= parts.size(); ++i) {
    chosen.push_back(parts[i]);
    if (find_bad_multisubset(parts, j - 1, i + 1, chosen, int_gcd(g, parts[i]), out_set,
                             out_gcd))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Classification classify(const PartSystem& system) {
  Classification c;
  const std::size_t k = system.k();
  const Int g = system.gcd_all();

  if (k < 2) {
    c.bo_reason = "k = 1: the product inequality compares 0/1 counts and fails";
  } else if (g != 1) {
    c.common_divisor = g;
    c.bo_reason = "gcd(parts) = " + to_string(g) + " > 1: p vanishes off multiples";
  } else {
    c.bo_holds_eventually = true;
    c.bo_reason = "k >= 2 and gcd(parts) = 1";
  }

  if (k >= 2 && system.all_ones()) {
    c.logconcave_eventually = true;
    c.logconcave_reason = "all parts 1: binomial column";
  } else if (k < 4) {
    c.logconcave_reason = "k < 4 with parts not all 1";
  } else {
    std::vector<Int> chosen, witness;
    Int wgcd;
    if (find_bad_multisubset(system.parts(), k - 2, 0, chosen, Int(0), witness, wgcd)) {
      c.bad_multisubset = witness;
      c.bad_multisubset_gcd = wgcd;
      c.logconcave_reason =
          "a (k-2)-multisubset has gcd " + to_string(wgcd) + " > 1";
    } else {
      c.logconcave_eventually = true;
      c.logconcave_reason = "k >= 4 and every (k-2)-multisubset has gcd 1";
    }
  }
  return c;
}

}  // namespace partlab
