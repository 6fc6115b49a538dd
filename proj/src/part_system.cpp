#include "partlab/part_system.hpp"

#include <algorithm>

namespace partlab {

PartSystem::PartSystem(std::vector<Int> parts)
    : parts_(std::move(parts)), lcm_(1), sum_(0), product_(1),
      memo_(std::make_shared<Memo>()) {
  if (parts_.empty()) throw std::invalid_argument("PartSystem: no parts given");
  for (const Int& a : parts_) {
    if (a < 1) throw std::invalid_argument("PartSystem: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end());
  for (const Int& a : parts_) {
    lcm_ = int_lcm(lcm_, a);
    sum_ += a;
    product_ *= a;
  }
}

Int PartSystem::power_sum(unsigned long m) const {
  std::lock_guard<std::mutex> lock(memo_->mutex);
  auto it = memo_->sums.find(m);
  if (it != memo_->sums.end()) return it->second;
  Int s(0);
  for (const Int& a : parts_) s += int_pow(a, m);
  memo_->sums.emplace(m, s);
  return s;
}

Int PartSystem::gcd_all() const {
  Int g(0);
  for (const Int& a : parts_) g = int_gcd(g, a);
  return g;
}

bool PartSystem::all_ones() const {
  return parts_.back() == 1;  // sorted, so max == 1 means all equal 1
}

bool PartSystem::strictly_increasing() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i - 1] >= parts_[i]) return false;
  return true;
}

PartSystem make_part_system(const std::vector<long>& parts) {
  std::vector<Int> v;
  v.reserve(parts.size());
  for (long p : parts) v.emplace_back(p);
  return PartSystem(std::move(v));
}

namespace {

// Walk index combinations of size j; stop early on a witness with gcd > 1.
bool combos_all_gcd_one(const std::vector<Int>& parts, std::size_t j,
                        std::size_t start, const Int& g) {
  if (g == 1) return true;  // no extension can raise the gcd back above 1
  if (j == 0) return false; // a complete choice with gcd > 1 is a witness
  for (std::size_t i = start; i + j <= parts.size(); ++i) {
    Int g2 = int_gcd(g, parts[i]);
    if (!combos_all_gcd_one(parts, j - 1, i + 1, g2)) return false;
  }
  return true;
}

}  // namespace

bool gcd_all_multisubsets(const PartSystem& system, std::size_t j) {
  if (j < 1 || j > system.k())
    throw std::invalid_argument("gcd_all_multisubsets: j out of range");
  return combos_all_gcd_one(system.parts(), j, 0, Int(0));
}

}  // namespace partlab
