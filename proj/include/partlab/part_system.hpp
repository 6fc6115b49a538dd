#ifndef PARTLAB_PART_SYSTEM_HPP
#define PARTLAB_PART_SYSTEM_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "partlab/numeric.hpp"

namespace partlab {

// A non-decreasing multiset of positive integer parts together with cached
// aggregates.  Equal values count as distinct colors, so (1,2,2) has k = 3.
// Immutable after construction and safe to share across threads; copies
// share the power-sum memo.
class PartSystem {
 public:
  explicit PartSystem(std::vector<Int> parts);

  const std::vector<Int>& parts() const { return parts_; }
  const Int& part(std::size_t i) const { return parts_.at(i); }
  std::size_t k() const { return parts_.size(); }
  const Int& lcm() const { return lcm_; }
  const Int& sum() const { return sum_; }
  const Int& product() const { return product_; }

  // m-th power sum of the parts.  Lazily memoized; the fill is idempotent
  // and guarded, so concurrent callers are fine.
  Int power_sum(unsigned long m) const;

  Int gcd_all() const;
  bool all_ones() const;
  bool strictly_increasing() const;

 private:
  std::vector<Int> parts_;
  Int lcm_;
  Int sum_;
  Int product_;
  struct Memo {
    std::mutex mutex;
    std::map<unsigned long, Int> sums;
  };
  std::shared_ptr<Memo> memo_;
};

PartSystem make_part_system(const std::vector<long>& parts);

// True iff every size-j sub-multiset of the parts has gcd 1.  Repeated part
// values occupy distinct indices, so the check ranges over index choices.
// Requires 1 <= j <= k.
bool gcd_all_multisubsets(const PartSystem& system, std::size_t j);

}  // namespace partlab

#endif
