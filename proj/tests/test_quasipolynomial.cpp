#include "doctest.h"
#include "partlab/partition_count.hpp"
#include "partlab/quasipolynomial.hpp"
#include "test_helpers.hpp"

using namespace partlab;
using partlab::testing::sys;

TEST_CASE("unsigned Stirling numbers, first kind") {
  CHECK(stirling1_unsigned(0, 0) == 1);
  CHECK(stirling1_unsigned(1, 1) == 1);
  CHECK(stirling1_unsigned(4, 1) == 6);
  CHECK(stirling1_unsigned(4, 2) == 11);
  CHECK(stirling1_unsigned(4, 3) == 6);
  CHECK(stirling1_unsigned(4, 4) == 1);
  CHECK(stirling1_unsigned(4, 0) == 0);
  CHECK(stirling1_unsigned(5, 7) == 0);

  // Row sums are n!.
  for (unsigned long n = 1; n <= 12; ++n) {
    Int row(0);
    for (unsigned long i = 0; i <= n; ++i) row += stirling1_unsigned(n, i);
    CHECK(row == factorial(n));
  }
}

TEST_CASE("rising factorial expansion") {
  Polynomial r4 = rising_factorial(4);  // x(x+1)(x+2)(x+3)
  CHECK(r4.degree() == 4);
  CHECK(r4.coeff(0) == 0);
  CHECK(r4.coeff(1) == 6);
  CHECK(r4.coeff(2) == 11);
  CHECK(r4.coeff(3) == 6);
  CHECK(r4.coeff(4) == 1);
  CHECK(rising_factorial(0) == Polynomial::constant(Rat(1)));
  CHECK(r4(Int(1)) == Rat(24));
}

TEST_CASE("direct-formula quasi-polynomial on small systems") {
  QuasiPolynomial qp = quasipolynomial_by_formula(sys({2, 3}));
  CHECK(qp.period() == 6);
  long expected[] = {1, 0, 1, 1, 1, 1, 2};
  for (long n = 0; n <= 6; ++n) CHECK(qp.evaluate(Int(n)) == expected[n]);

  // Two unit parts: the single residue class must read n + 1.
  QuasiPolynomial ones = quasipolynomial_by_formula(sys({1, 1}));
  CHECK(ones.period() == 1);
  CHECK(ones.residue_polynomial(0).coeff(0) == 1);
  CHECK(ones.residue_polynomial(0).coeff(1) == 1);
}

TEST_CASE("formula and interpolation construct the same object") {
  for (auto parts : {std::vector<long>{2, 3}, {1, 2}, {1, 1}, {2, 2, 3}, {1, 2, 3, 4}}) {
    PartSystem s = make_part_system(parts);
    CHECK(quasipolynomial_by_formula(s) == quasipolynomial_by_interpolation(s));
  }
}

TEST_CASE("interpolated quasi-polynomial matches the table everywhere sampled") {
  for (const auto& parts : partlab::testing::corpus()) {
    PartSystem s = make_part_system(parts);
    QuasiPolynomial qp = quasipolynomial_by_interpolation(s);
    std::size_t hi = 150;
    PartitionTable t = count_table(s, hi);
    for (std::size_t n = 0; n <= hi; ++n) CHECK(qp.evaluate(Int(n)) == t.at(n));
  }
}

TEST_CASE("tuple budget is enforced and names the fallback") {
  // (2,3) has conceptual tuple count (6/2)*(6/3) = 6 > 5.
  try {
    quasipolynomial_by_formula(sys({2, 3}), 5);
    FAIL("expected capacity_error");
  } catch (const capacity_error& e) {
    CHECK(std::string(e.what()).find("quasipolynomial_by_interpolation") !=
          std::string::npos);
  }
}

TEST_CASE("stable coefficients") {
  // (2,3): residue polynomials share the slope 1/6; constants differ.
  StableCoefficients s23 = quasipolynomial_by_interpolation(sys({2, 3})).stable_coefficients();
  CHECK(s23.min_degree == 1);
  CHECK(s23.tail.coeff(1) == make_rat(Int(1), Int(6)));
  CHECK(s23.tail.coeff(0) == 0);

  // (1,2,3,4): the pair {2,4} blocks degree 1, triples are fine, so the
  // shared range starts at degree 2.
  StableCoefficients s1234 =
      quasipolynomial_by_interpolation(sys({1, 2, 3, 4})).stable_coefficients();
  CHECK(s1234.min_degree == 2);

  // All parts 1: one residue class, everything is stable.
  StableCoefficients ones =
      quasipolynomial_by_interpolation(sys({1, 1, 1})).stable_coefficients();
  CHECK(ones.min_degree == 0);
}

TEST_CASE("evaluate guards") {
  QuasiPolynomial qp = quasipolynomial_by_interpolation(sys({2, 3}));
  CHECK_THROWS_AS(qp.evaluate(Int(-1)), std::invalid_argument);
}
