#include "partlab/partition_count.hpp"

namespace partlab {

PartitionTable count_table(const PartSystem& system, std::size_t n_max) {
  std::vector<Int> v(n_max + 1, Int(0));
  v[0] = 1;
  for (const Int& part : system.parts()) {
    if (part > static_cast<unsigned long>(n_max)) continue;  // no reachable index
    const std::size_t a = part.get_ui();
    for (std::size_t n = a; n <= n_max; ++n) v[n] += v[n - a];
  }
  return PartitionTable{system, std::move(v)};
}

TelescopeCounter::TelescopeCounter(PartSystem system) : system_(std::move(system)) {}

Int TelescopeCounter::count(const Int& n) { return count_slots(system_.k(), n); }

Int TelescopeCounter::count_slots(std::size_t slots, const Int& n) {
  if (sgn(n) < 0) return 0;
  if (slots == 1) return count_single_part(system_.part(0), n);
  auto key = std::make_pair(slots, n);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const Int& a = system_.part(slots - 1);
  Int total(0);
  for (Int rem = n; sgn(rem) >= 0; rem -= a) total += count_slots(slots - 1, rem);
  memo_.emplace(std::move(key), total);
  return total;
}

Int count_one(const PartSystem& system, const Int& n) {
  return TelescopeCounter(system).count(n);
}

Int count_single_part(const Int& a1, const Int& n) {
  if (a1 < 1) throw std::invalid_argument("count_single_part: part must be positive");
  if (sgn(n) < 0) return 0;
  return mpz_divisible_p(n.get_mpz_t(), a1.get_mpz_t()) ? 1 : 0;
}

namespace {

// Unique x in 1..m with x*a == -n (mod m); gcd(a, m) must be 1.
Int modular_partner(const Int& a, const Int& m, const Int& n) {
  if (m == 1) return 1;
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("popoviciu: parts are not coprime");
  Int x = (-n * inv) % m;
  if (sgn(x) < 0) x += m;  // representative in 0..m-1
  return x == 0 ? m : x;
}

}  // namespace

Int popoviciu(const PartSystem& system, const Int& n) {
  if (system.k() != 2) throw std::domain_error("popoviciu: needs exactly two parts");
  const Int& a1 = system.part(0);
  const Int& a2 = system.part(1);
  if (int_gcd(a1, a2) != 1) throw std::domain_error("popoviciu: parts must be coprime");
  if (n < 1) throw std::invalid_argument("popoviciu: n must be >= 1");
  Int p1 = modular_partner(a1, a2, n);
  Int p2 = modular_partner(a2, a1, n);
  Int numer = n + a1 * p1 + a2 * p2;
  Int den = a1 * a2;
  if (!mpz_divisible_p(numer.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("popoviciu: closed form did not come out integral");
  return numer / den - 1;
}

Int nearest_integer_closed_form(int k, const Int& n) {
  if (sgn(n) < 0) throw std::invalid_argument("nearest_integer_closed_form: n must be >= 0");
  Int half;  // floor(n / 2)
  mpz_fdiv_q_ui(half.get_mpz_t(), n.get_mpz_t(), 2);
  Rat arg;
  switch (k) {
    case 3:
      arg = make_rat((n + 3) * (n + 3), Int(12));
      break;
    case 4:
      arg = make_rat((n + 5) * (n * n + n + 22 + 18 * half), Int(144));
      break;
    case 5:
      arg = make_rat((n + 8) * (n * n * n + 22 * n * n + 44 * n + 248 + 180 * half),
                     Int(2880));
      break;
    default:
      throw std::invalid_argument("nearest_integer_closed_form: k must be 3, 4 or 5");
  }
  // The formulas never land on x.5 exactly; a half here means the formula
  // was transcribed wrong, not an input problem.
  if (arg.get_den() == 2)
    throw std::logic_error("nearest_integer_closed_form: argument is a half-integer");
  return round_nearest(arg);
}

Int binomial_all_ones(unsigned long k, const Int& n) {
  if (k < 1) throw std::invalid_argument("binomial_all_ones: k must be >= 1");
  if (sgn(n) < 0) return 0;
  return binomial(n + Int(k) - 1, k - 1);
}

Int delta(const PartSystem& system, const Int& n) {
  if (n < 1) throw std::invalid_argument("delta: n must be >= 1");
  if (!n.fits_ulong_p()) throw std::invalid_argument("delta: n too large for a table");
  const std::size_t nn = n.get_ui();
  PartitionTable t = count_table(system, nn + 1);
  return delta_from(t, nn);
}

Int delta_from(const PartitionTable& table, std::size_t n) {
  if (n < 1 || n + 1 > table.n_max())
    throw std::invalid_argument("delta_from: n out of table range");
  return table.values[n] * table.values[n] - table.values[n + 1] * table.values[n - 1];
}

}  // namespace partlab
