#include "doctest.h"
#include "partlab/partition_count.hpp"
#include "test_helpers.hpp"

using namespace partlab;
using partlab::testing::brute_force_count;
using partlab::testing::sys;

TEST_CASE("table point values") {
  PartitionTable t = count_table(sys({1, 2, 4}), 10);
  CHECK(t.at(0) == 1);
  CHECK(t.at(6) == 6);
  CHECK(count_table(sys({1, 2, 3, 4}), 6).at(4) == 5);
  CHECK(count_table(sys({1, 2, 2, 3, 3}), 6).at(4) == 8);
  CHECK(count_table(sys({7}), 14).at(13) == 0);
  CHECK(count_table(sys({7}), 14).at(14) == 1);

  PartitionTable ones = count_table(sys({1, 1}), 100);
  for (std::size_t n = 0; n <= 100; ++n) CHECK(ones.at(n) == n + 1);
}

TEST_CASE("repeated parts are colors") {
  // (2, 2): 4 = 2+2 with two colors for each 2 -> multiplicities (2,0),
  // (1,1), (0,2).
  CHECK(count_table(sys({2, 2}), 8).at(4) == 3);
  CHECK(count_one(sys({2, 2}), Int(4)) == 3);
}

TEST_CASE("table and telescope evaluator agree with the naive oracle") {
  for (const auto& parts : partlab::testing::corpus()) {
    PartSystem s = make_part_system(parts);
    PartitionTable t = count_table(s, 40);
    TelescopeCounter telescope(s);
    for (long n = 0; n <= 40; ++n) {
      Int expected = brute_force_count(parts, n);
      CAPTURE(n);
      CHECK(t.at(static_cast<std::size_t>(n)) == expected);
      CHECK(telescope.count(Int(n)) == expected);
    }
  }
}

TEST_CASE("count_one handles negatives and zero") {
  CHECK(count_one(sys({2, 3}), Int(-5)) == 0);
  CHECK(count_one(sys({2, 3}), Int(0)) == 1);
  CHECK(count_single_part(Int(7), Int(-7)) == 0);
  CHECK(count_single_part(Int(7), Int(0)) == 1);
  CHECK(count_single_part(Int(7), Int(21)) == 1);
  CHECK(count_single_part(Int(7), Int(20)) == 0);
}

TEST_CASE("popoviciu closed form") {
  SUBCASE("matches the table on coprime pairs") {
    for (auto parts : {std::vector<long>{2, 3}, {3, 5}, {4, 7}, {5, 9}}) {
      PartSystem s = make_part_system(parts);
      PartitionTable t = count_table(s, 300);
      for (long n = 1; n <= 300; ++n)
        CHECK(popoviciu(s, Int(n)) == t.at(static_cast<std::size_t>(n)));
    }
  }
  SUBCASE("frozen spot checks") {
    CHECK(popoviciu(sys({1, 2}), Int(9)) == 5);
    CHECK(popoviciu(sys({3, 5}), Int(8)) == 1);
    CHECK(popoviciu(sys({3, 5}), Int(7)) == 0);
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(popoviciu(sys({2, 4}), Int(6)), std::domain_error);
    CHECK_THROWS_AS(popoviciu(sys({2, 3, 5}), Int(6)), std::domain_error);
    CHECK_THROWS_AS(popoviciu(sys({2, 3}), Int(0)), std::invalid_argument);
  }
}

TEST_CASE("nearest-integer closed forms for consecutive parts") {
  for (int k = 3; k <= 5; ++k) {
    std::vector<long> parts;
    for (long a = 1; a <= k; ++a) parts.push_back(a);
    PartitionTable t = count_table(make_part_system(parts), 200);
    for (long n = 0; n <= 200; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(nearest_integer_closed_form(k, Int(n)) ==
            t.at(static_cast<std::size_t>(n)));
    }
  }
  CHECK(nearest_integer_closed_form(3, Int(4)) == 4);
  CHECK_THROWS_AS(nearest_integer_closed_form(6, Int(4)), std::invalid_argument);
  CHECK_THROWS_AS(nearest_integer_closed_form(3, Int(-1)), std::invalid_argument);
}

TEST_CASE("all-ones binomial form") {
  CHECK(binomial_all_ones(2, Int(5)) == 6);
  CHECK(binomial_all_ones(1, Int(9)) == 1);
  PartitionTable t = count_table(sys({1, 1, 1, 1}), 50);
  for (long n = 0; n <= 50; ++n)
    CHECK(binomial_all_ones(4, Int(n)) == t.at(static_cast<std::size_t>(n)));
}

TEST_CASE("log-concavity defect") {
  // (1,1): p = n+1, so the defect is identically 1.
  for (long n = 1; n <= 30; ++n) CHECK(delta(sys({1, 1}), Int(n)) == 1);
  // (1,2,3) dips negative exactly at n = +-1 mod 6: both neighbours of every
  // multiple of 6 fail, everything else holds.
  PartitionTable t = count_table(sys({1, 2, 3}), 13);
  for (std::size_t n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK((delta_from(t, n) < 0) == (n % 6 == 1 || n % 6 == 5));
  }
  CHECK(delta_from(t, 5) == delta(sys({1, 2, 3}), Int(5)));
  CHECK_THROWS_AS(delta_from(t, 13), std::invalid_argument);  // needs n+1 in range
}
