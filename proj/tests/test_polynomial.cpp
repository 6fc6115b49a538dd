#include "doctest.h"
#include "partlab/polynomial.hpp"
#include "partlab/power_series.hpp"

using namespace partlab;

namespace {
Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}
}  // namespace

TEST_CASE("normal form and degree") {
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial().is_zero());
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(poly({0}).is_zero());
  CHECK(Polynomial::constant(Rat(5)).degree() == 0);
  CHECK(Polynomial::monomial(Rat(3), 4).degree() == 4);
  CHECK(Polynomial::monomial(Rat(0), 4).is_zero());
  CHECK(poly({7, 0, 3}).coeff(0) == 7);
  CHECK(poly({7, 0, 3}).coeff(1) == 0);
  CHECK(poly({7, 0, 3}).coeff(9) == 0);  // beyond the degree reads as zero
}

TEST_CASE("arithmetic") {
  Polynomial a = poly({1, 2, 3});       // 3x^2 + 2x + 1
  Polynomial b = poly({0, -2, -3, 4});  // 4x^3 - 3x^2 - 2x
  CHECK((a + b) == poly({1, 0, 0, 4}));
  CHECK((a - a).is_zero());
  CHECK((a * poly({0, 1})) == poly({0, 1, 2, 3}));
  CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
  CHECK((a * Rat(2)) == poly({2, 4, 6}));
  CHECK(poly({1, 1}).pow(3) == poly({1, 3, 3, 1}));
  CHECK(poly({2}).pow(0) == poly({1}));
}

TEST_CASE("evaluation is exact Horner") {
  Polynomial a = poly({1, -2, 3});  // 3x^2 - 2x + 1
  CHECK(a(Int(5)) == Rat(66));
  CHECK(a(Int(-1)) == Rat(6));
  CHECK(a(make_rat(Int(1), Int(2))) == make_rat(Int(3), Int(4)));
  CHECK(Polynomial()(Int(9)) == Rat(0));
}

TEST_CASE("derivative and antiderivative") {
  Polynomial a = poly({5, 0, 3});  // 3x^2 + 5
  CHECK(a.derivative() == poly({0, 6}));
  CHECK(poly({7}).derivative().is_zero());
  // d/dx of the antiderivative gives the original back.
  CHECK(a.antiderivative().derivative() == a);
  CHECK(a.antiderivative().coeff(0) == 0);
}

TEST_CASE("truncated_below zeroes the low end") {
  Polynomial a = poly({4, 3, 2, 1});
  CHECK(a.truncated_below(2) == poly({0, 0, 2, 1}));
  CHECK(a.truncated_below(0) == a);
  CHECK(a.truncated_below(4).is_zero());
}

namespace {
PowerSeries series(std::initializer_list<Rat> coeffs, std::size_t order) {
  return PowerSeries(std::vector<Rat>(coeffs), order);
}
}  // namespace

TEST_CASE("power series reciprocal: sinh kernel prefix") {
  // (sinh(t/2)/(t/2)) = 1 + t^2/24 + t^4/1920 + ...; its reciprocal's
  // low-order terms are 1 - t^2/24 + 7 t^4/5760.
  PowerSeries s = series({Rat(1), Rat(0), make_rat(Int(1), Int(24)), Rat(0),
                          make_rat(Int(1), Int(1920))},
                         4);
  PowerSeries r = s.reciprocal();
  CHECK(r.coeff(0) == 1);
  CHECK(r.coeff(1) == 0);
  CHECK(r.coeff(2) == make_rat(Int(-1), Int(24)));
  CHECK(r.coeff(3) == 0);
  CHECK(r.coeff(4) == make_rat(Int(7), Int(5760)));
  CHECK((s * r) == PowerSeries::one(4));
}

TEST_CASE("power series guards") {
  PowerSeries zero_const = series({Rat(0), Rat(1)}, 1);
  CHECK_THROWS_AS(zero_const.reciprocal(), std::domain_error);
  PowerSeries a = PowerSeries::one(2);
  PowerSeries b = PowerSeries::one(3);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("truncating product") {
  // (1 + t)^2 at order 1 keeps only 1 + 2t.
  PowerSeries t = series({Rat(1), Rat(1)}, 1);
  PowerSeries sq = t * t;
  CHECK(sq.order() == 1);
  CHECK(sq.coeff(0) == 1);
  CHECK(sq.coeff(1) == 2);
}
