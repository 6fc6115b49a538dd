#ifndef PARTLAB_SCANNER_HPP
#define PARTLAB_SCANNER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "partlab/bounds.hpp"
#include "partlab/partition_count.hpp"
#include "partlab/quasipolynomial.hpp"

namespace partlab {

// What a report was scanning for.  u/e are set for the strengthened
// log-concavity factor (1 + 1/(u n^2))^e, envelope for envelope checks.
struct ScanProperty {
  enum class Kind {
    Bo,
    LogConcave,
    LogConcaveStrengthened,
    Envelope,
    QuasiPolynomialMatch,
  };
  Kind kind;
  std::optional<Rat> u;
  std::optional<long> e;
  std::optional<EnvelopeKind> envelope;
};

const char* to_string(ScanProperty::Kind kind);

// One failed pair comparison: p(a) p(b) > p(a+b) did not hold.
// lhs = p(a) p(b), rhs = p(a+b).
struct PairViolation {
  Int a;
  Int b;
  Int lhs;
  Int rhs;
};

// One failed point comparison.  For log-concavity, lhs > rhs failed (the
// sides are cleared of denominators in the strengthened case).  For
// envelopes, lhs < p(n) < rhs failed.  For quasi-polynomial matching,
// lhs == rhs failed.
struct PointViolation {
  Int n;
  Rat lhs;
  Rat rhs;
};

struct ScanReport {
  PartSystem system;
  ScanProperty property;
  Int lo;
  Int hi;
  std::vector<PairViolation> pair_violations;
  std::vector<PointViolation> point_violations;
  // Smallest N in [lo, hi] such that no violation touches [N, hi]; absent
  // when even N = hi fails.  Horizon-bounded by construction: says nothing
  // about n > hi.
  std::optional<Int> minimal_start;
};

// Bessenrodt-Ono sweep over all pairs 1 <= b <= a <= max (so a+b <= 2 max),
// flagging every pair with p(a) p(b) <= p(a+b).  The table overload expects
// a table built at least up to 2*max.
ScanReport scan_bo(const PartSystem& system, std::size_t max);
ScanReport scan_bo(const PartitionTable& table, std::size_t max);

// Log-concavity sweep over lo <= n <= hi.  Plain check when u and e are
// absent: p(n)^2 > p(n+1) p(n-1).  Otherwise the strengthened check
// p(n)^2 > (1 + 1/(u n^2))^e p(n+1) p(n-1), compared after clearing
// denominators (missing side of u/e defaults to 1).  The table overload
// expects a table up to hi+1.
ScanReport scan_logconcavity(const PartSystem& system, std::size_t lo, std::size_t hi,
                             std::optional<Rat> u = std::nullopt,
                             std::optional<long> e = std::nullopt);
ScanReport scan_logconcavity(const PartitionTable& table, std::size_t lo, std::size_t hi,
                             std::optional<Rat> u = std::nullopt,
                             std::optional<long> e = std::nullopt);

// Strict sandwich main(n) - err n^d < p(n) < main(n) + err n^d over
// [lo, hi]; requires lo >= env.valid_from.
ScanReport verify_envelope(const BoundEnvelope& env, std::size_t lo, std::size_t hi);

// evaluate(qp, n) == table count over [lo, hi].
ScanReport verify_quasipolynomial(const QuasiPolynomial& qp, std::size_t lo,
                                  std::size_t hi);

// Smallest N >= 2 with delta(n) > 0 for every N <= n <= horizon; absent if
// the defect is still non-positive at the horizon itself.  Horizon-bounded.
std::optional<Int> minimal_logconcave_start(const PartSystem& system,
                                            std::size_t horizon);

}  // namespace partlab

#endif
