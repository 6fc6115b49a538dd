#ifndef PARTLAB_PARTITION_COUNT_HPP
#define PARTLAB_PARTITION_COUNT_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "partlab/part_system.hpp"

namespace partlab {

// Dense table of p_A(n, k) for 0 <= n <= n_max, built bottom-up part by
// part.  Repeated parts are folded in separately, which is exactly the
// multicolor count.
struct PartitionTable {
  PartSystem system;
  std::vector<Int> values;  // values[n] = p_A(n, k)

  std::size_t n_max() const { return values.size() - 1; }
  const Int& at(std::size_t n) const { return values.at(n); }
};

PartitionTable count_table(const PartSystem& system, std::size_t n_max);

// Second, structurally independent evaluator: top-down over the telescoped
// sum p(n, s) = sum_i p(n - i*a_s, s - 1), memoized per instance.  Used to
// cross-check the table and to re-verify scan witnesses.
class TelescopeCounter {
 public:
  explicit TelescopeCounter(PartSystem system);
  Int count(const Int& n);

 private:
  Int count_slots(std::size_t slots, const Int& n);
  PartSystem system_;
  std::map<std::pair<std::size_t, Int>, Int> memo_;
};

Int count_one(const PartSystem& system, const Int& n);

// k = 1 base case: 1 when a1 divides n (n >= 0), else 0.
Int count_single_part(const Int& a1, const Int& n);

// Two coprime parts a1 < a2 in closed form: p(n) =
// (n + a1*a1'(n) + a2*a2'(n)) / (a1*a2) - 1, where ai'(n) is the unique
// solution of ai'(n)*ai == -n (mod a_other) in 1..a_other.
Int popoviciu(const PartSystem& system, const Int& n);

// Nearest-integer closed forms for parts (1,...,k), k in {3,4,5}.  The
// rounded argument is provably never a half-integer; that is asserted.
Int nearest_integer_closed_form(int k, const Int& n);

// All parts equal to 1: p(n, k) = C(n + k - 1, k - 1).
Int binomial_all_ones(unsigned long k, const Int& n);

// Log-concavity defect p(n)^2 - p(n+1) p(n-1), n >= 1.
Int delta(const PartSystem& system, const Int& n);
Int delta_from(const PartitionTable& table, std::size_t n);

}  // namespace partlab

#endif
