#include "partlab/quasipolynomial.hpp"

#include <utility>

#include "partlab/partition_count.hpp"

namespace partlab {

Int stirling1_unsigned(unsigned long n, unsigned long i) {
  if (i > n) return 0;
  // Triangle recurrence s(n+1, i) = n*s(n, i) + s(n, i-1), row by row.
  std::vector<Int> row(n + 1, Int(0));
  row[0] = 1;  // s(0, 0)
  for (unsigned long m = 0; m < n; ++m) {
    for (unsigned long t = m + 1; t-- > 0;) {
      Int next = row[t] * Int(m);
      if (t > 0) next += row[t - 1];
      row[t] = std::move(next);
    }
    row[m + 1] = 1;  // s(m+1, m+1)
  }
  return row[i];
}

Polynomial rising_factorial(unsigned long n) {
  Polynomial acc = Polynomial::constant(Rat(1));
  for (unsigned long t = 0; t < n; ++t)
    acc = acc * Polynomial(std::vector<Rat>{Rat(t), Rat(1)});
  return acc;
}

QuasiPolynomial::QuasiPolynomial(PartSystem system, std::vector<Polynomial> residue_polys)
    : system_(std::move(system)), polys_(std::move(residue_polys)) {
  if (polys_.empty() || system_.lcm() != static_cast<unsigned long>(polys_.size()))
    throw std::logic_error("QuasiPolynomial: residue count must equal lcm(parts)");
}

Int QuasiPolynomial::evaluate(const Int& n) const {
  if (sgn(n) < 0) throw std::invalid_argument("QuasiPolynomial::evaluate: n must be >= 0");
  Int r = n % static_cast<unsigned long>(polys_.size());
  Rat val = polys_[r.get_ui()](n);
  if (!is_integer(val) || sgn(val) < 0)
    throw std::logic_error("QuasiPolynomial::evaluate: value is not a non-negative integer");
  return Int(val.get_num());
}

StableCoefficients QuasiPolynomial::stable_coefficients() const {
  const std::size_t k = system_.k();
  std::size_t min_degree = 0;
  for (std::size_t d = k; d-- > 0;) {
    const Rat c0 = polys_[0].coeff(d);
    bool same = true;
    for (std::size_t r = 1; r < polys_.size() && same; ++r)
      same = polys_[r].coeff(d) == c0;
    if (!same) {
      min_degree = d + 1;
      break;
    }
  }
  return StableCoefficients{min_degree, polys_[0].truncated_below(min_degree)};
}

bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  return a.system_.parts() == b.system_.parts() && a.polys_ == b.polys_;
}

namespace {

std::size_t lcm_as_index(const PartSystem& system) {
  if (!system.lcm().fits_ulong_p())
    throw capacity_error("quasipolynomial: lcm(parts) too large to index residues");
  return system.lcm().get_ui();
}

}  // namespace

QuasiPolynomial quasipolynomial_by_formula(const PartSystem& system,
                                           unsigned long tuple_budget) {
  const std::size_t k = system.k();
  const std::size_t D = lcm_as_index(system);

  Int tuples(1);
  for (const Int& a : system.parts()) tuples *= Int(D) / a;
  if (tuples > tuple_budget)
    throw capacity_error(
        "quasipolynomial_by_formula: tuple count " + to_string(tuples) +
        " exceeds budget " + std::to_string(tuple_budget) +
        "; use quasipolynomial_by_interpolation instead");

  // Group tuples by their weighted sum T = sum a_i j_i: bounded-occurrence
  // counting DP, then one polynomial contribution per distinct T.
  const Int t_max_z = Int(k) * Int(D) - system.sum();
  const std::size_t t_max = t_max_z.get_ui();
  std::vector<Int> count(t_max + 1, Int(0));
  count[0] = 1;
  std::size_t reach = 0;  // highest index with a nonzero count so far
  for (const Int& part : system.parts()) {
    const std::size_t a = part.get_ui();
    const std::size_t top = D - a;  // j <= D/a - 1, so max contribution D - a
    std::vector<Int> next(std::min(reach + top, t_max) + 1, Int(0));
    for (std::size_t t = 0; t <= reach; ++t) {
      if (sgn(count[t]) == 0) continue;
      for (std::size_t add = 0; add <= top; add += a) next[t + add] += count[t];
    }
    reach = next.size() - 1;
    count.swap(next);
  }
  count.resize(t_max + 1, Int(0));

  // Per tuple the contribution is sum_{i<k} s1(k, i+1) x^i / (k-1)! at
  // x = (n - T)/D, i.e. the rising factorial with its x^k head removed.
  std::vector<Rat> q_coeffs(k, Rat(0));
  {
    const Polynomial rf = rising_factorial(k);
    const Rat inv_fact = make_rat(Int(1), factorial(k - 1));
    for (std::size_t i = 0; i < k; ++i) q_coeffs[i] = rf.coeff(i + 1) * inv_fact;
  }

  std::vector<Polynomial> polys(D);
  const Rat invD = make_rat(Int(1), Int(D));
  for (std::size_t T = 0; T <= t_max; ++T) {
    if (sgn(count[T]) == 0) continue;
    Rat shift = Rat(Int(T)) * invD;
    const Polynomial base(std::vector<Rat>{Rat(-shift), invD});  // (n-T)/D
    Polynomial contrib = Polynomial::constant(q_coeffs[k - 1]);
    for (std::size_t i = k - 1; i-- > 0;)
      contrib = contrib * base + Polynomial::constant(q_coeffs[i]);
    polys[T % D] += contrib * Rat(count[T]);
  }
  return QuasiPolynomial(system, std::move(polys));
}

namespace {

// Exact rational Gaussian elimination with partial (first nonzero) pivoting.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw std::logic_error("solve_linear: singular system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      Rat f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t row = n; row-- > 0;) {
    Rat acc = rhs[row];
    for (std::size_t j = row + 1; j < n; ++j) acc -= m[row][j] * x[j];
    x[row] = acc / m[row][row];
  }
  return x;
}

}  // namespace

QuasiPolynomial quasipolynomial_by_interpolation(const PartSystem& system) {
  const std::size_t k = system.k();
  const std::size_t D = lcm_as_index(system);
  // k points to fit per residue plus k more to verify: abscissae r + t*D for
  // t < 2k, so the table needs to reach (D - 1) + (2k - 1) D < 2 k D.
  const PartitionTable table = count_table(system, 2 * k * D);

  std::vector<Polynomial> polys;
  polys.reserve(D);
  for (std::size_t r = 0; r < D; ++r) {
    std::vector<std::vector<Rat>> vandermonde(k, std::vector<Rat>(k));
    std::vector<Rat> rhs(k);
    for (std::size_t t = 0; t < k; ++t) {
      const Int x(r + t * D);
      Rat pw(1);
      for (std::size_t j = 0; j < k; ++j) {
        vandermonde[t][j] = pw;
        pw *= Rat(x);
      }
      rhs[t] = Rat(table.at(r + t * D));
    }
    Polynomial poly(solve_linear(std::move(vandermonde), std::move(rhs)));
    for (std::size_t t = k; t < 2 * k; ++t) {
      if (poly(Int(r + t * D)) != Rat(table.at(r + t * D)))
        throw std::logic_error(
            "quasipolynomial_by_interpolation: fitted polynomial fails verification");
    }
    polys.push_back(std::move(poly));
  }
  return QuasiPolynomial(system, std::move(polys));
}

}  // namespace partlab
