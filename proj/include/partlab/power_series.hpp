#ifndef PARTLAB_POWER_SERIES_HPP
#define PARTLAB_POWER_SERIES_HPP

#include <cstddef>
#include <vector>

#include "partlab/numeric.hpp"

namespace partlab {

// Power series truncated at a fixed order M: coefficients 0..M are exact,
// everything above is discarded.  Operands of a binary op must share M.
class PowerSeries {
 public:
  PowerSeries(std::vector<Rat> coeffs, std::size_t order);
  static PowerSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rat& coeff(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  // Multiplicative inverse up to the truncation order; the constant term
  // must be nonzero.
  PowerSeries reciprocal() const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<Rat> coeffs_;  // size order + 1
};

}  // namespace partlab

#endif
