#ifndef PARTLAB_TEST_HELPERS_HPP
#define PARTLAB_TEST_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "partlab/part_system.hpp"

namespace partlab::testing {

// Systems exercised across the suite: k <= 5, parts <= 8, with repeats and
// non-coprime entries mixed in.
inline const std::vector<std::vector<long>>& corpus() {
  static const std::vector<std::vector<long>> systems = {
      {1},          {2},          {1, 1},          {1, 2},
      {2, 3},       {2, 4},       {3, 5},          {5, 7},
      {1, 1, 1},    {1, 2, 3},    {1, 2, 4},       {2, 3, 5},
      {2, 4, 6},    {2, 2, 3},    {4, 6, 7},       {1, 1, 2, 2},
      {1, 2, 3, 4}, {2, 3, 4, 5}, {1, 2, 2, 3, 3}, {1, 2, 3, 4, 5},
  };
  return systems;
}

inline PartSystem sys(std::initializer_list<long> parts) {
  return make_part_system(std::vector<long>(parts));
}

// Deliberately naive third evaluator: enumerate how much of n each part
// slot absorbs, depth-first, no memo, no table.  Small n only.
inline Int brute_force_count(const std::vector<long>& parts, long n) {
  if (n < 0) return 0;
  struct Rec {
    const std::vector<long>& a;
    Int go(std::size_t idx, long rem) {
      if (idx == a.size()) return rem == 0 ? 1 : 0;
      Int total = 0;
      for (long used = 0; used <= rem; used += a[idx]) total += go(idx + 1, rem - used);
      return total;
    }
  } rec{parts};
  return rec.go(0, n);
}

}  // namespace partlab::testing

#endif
