#ifndef PARTLAB_BOUNDS_HPP
#define PARTLAB_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partlab/part_system.hpp"
#include "partlab/polynomial.hpp"

namespace partlab {

enum class EnvelopeKind {
  LeadingTerm,    // main = leading monomial, error n^(k-2), all n >= 1
  CubicConstant,  // k = 4: main = full cubic, constant error 16 (prod a)^3
  TopThree,       // main = top three quasi-poly terms, error E n^(k-4), n >= a_k
  StableTail,     // main = stable coefficients >= j-1, error F n^(j-2), n >= 1
};

const char* to_string(EnvelopeKind kind);

// Strict two-sided bound main(n) - err*n^d < p_A(n,k) < main(n) + err*n^d
// valid for all n >= valid_from.
struct BoundEnvelope {
  PartSystem system;
  EnvelopeKind kind;
  Polynomial main;
  Rat err_coeff;
  long err_degree;  // may be negative (stable-tail with j = 1)
  Int valid_from;
};

// k >= 3, strictly increasing, gcd(a1, a2) = 1:
// main = n^(k-1) / ((k-1)! prod a_i), error coefficient 1.
BoundEnvelope leading_term_envelope(const PartSystem& system);

// k = 4, strictly increasing, pairwise coprime:
// main = alpha n^3 + beta n^2 + gamma n, error 16 (prod a)^3.
BoundEnvelope cubic_constant_envelope(const PartSystem& system);

// k >= 4, strictly increasing, first four parts pairwise coprime:
// main = (alpha n^2 + beta n + gamma) n^(k-3), error E n^(k-4), n >= a_k.
BoundEnvelope top_three_envelope(const PartSystem& system);

// k >= 2, every j-multisubset with gcd 1:
// main = polynomial part truncated to degrees >= j-1, error F n^(j-2).
BoundEnvelope stable_tail_envelope(const PartSystem& system, std::size_t j);

// Rational majorant of k^2 (a1 a2 a3)^3 a_k^(k+3) e^(1/a_k) / prod a_i; the
// e^(1/a_k) factor is replaced by an upper bound within 1e-6.
Rat top_three_error_coefficient(const PartSystem& system);

// F = prod_{i=1}^{k} (1 + i D k) / (k! prod a_i), exact.
Rat stable_tail_error_coefficient(const PartSystem& system);

// A sufficient starting point for an eventually-true inequality.  `value` is
// inclusive: the property is guaranteed for all arguments >= value, so the
// equivalent strict statement is "for all n > value - 1".  `variants` carries
// named companion constants (specializations, strengthened versions).
struct Threshold {
  std::string theorem;  // role name of the regime whose hypotheses fired
  Int value;
  std::string condition;
  bool hypotheses_hold = true;
  std::vector<std::pair<std::string, Int>> variants;
};

// Smallest guaranteed start for p(a)p(b) > p(a+b), selecting the sharpest
// applicable regime.  Errors when k < 2 or gcd(parts) > 1 (the inequality
// then fails infinitely often).
Threshold bessenrodt_ono_threshold(const PartSystem& system);

// Smallest guaranteed start for p(n)^2 > p(n+1)p(n-1) by regime; errors when
// the system is not eventually log-concave.
Threshold log_concavity_threshold(const PartSystem& system);

struct Classification {
  bool bo_holds_eventually = false;
  bool logconcave_eventually = false;
  // Witnesses for the failing direction, when applicable.
  std::optional<Int> common_divisor;            // gcd(parts) when > 1
  std::optional<std::vector<Int>> bad_multisubset;  // some (k-2)-multisubset
  std::optional<Int> bad_multisubset_gcd;
  std::string bo_reason;
  std::string logconcave_reason;
};

Classification classify(const PartSystem& system);

}  // namespace partlab

#endif
