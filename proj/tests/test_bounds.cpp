#include "doctest.h"
#include "partlab/bounds.hpp"
#include "test_helpers.hpp"

using namespace partlab;
using partlab::testing::sys;

TEST_CASE("leading-term envelope") {
  BoundEnvelope env = leading_term_envelope(sys({1, 2, 3}));
  CHECK(env.kind == EnvelopeKind::LeadingTerm);
  CHECK(env.main == Polynomial::monomial(make_rat(Int(1), Int(12)), 2));
  CHECK(env.err_coeff == 1);
  CHECK(env.err_degree == 1);
  CHECK(env.valid_from == 1);

  CHECK_THROWS_AS(leading_term_envelope(sys({2, 3})), std::domain_error);
  CHECK_THROWS_AS(leading_term_envelope(sys({2, 4, 5})), std::domain_error);
  CHECK_THROWS_AS(leading_term_envelope(sys({1, 2, 2})), std::domain_error);
}

TEST_CASE("cubic-constant envelope frozen instance (1,2,3,5)") {
  BoundEnvelope env = cubic_constant_envelope(sys({1, 2, 3, 5}));
  CHECK(env.main.coeff(3) == make_rat(Int(1), Int(180)));
  CHECK(env.main.coeff(2) == make_rat(Int(11), Int(120)));
  CHECK(env.main.coeff(1) == make_rat(Int(9), Int(20)));
  CHECK(env.main.coeff(0) == 0);
  CHECK(env.err_coeff == Rat(432000));  // 16 (prod a)^3
  CHECK(env.err_degree == 0);
  CHECK(env.valid_from == 1);

  CHECK_THROWS_AS(cubic_constant_envelope(sys({1, 2, 3})), std::domain_error);
  CHECK_THROWS_AS(cubic_constant_envelope(sys({1, 2, 3, 4})), std::domain_error);
  CHECK_THROWS_AS(cubic_constant_envelope(sys({1, 2, 2, 3})), std::domain_error);
}

TEST_CASE("top-three envelope and its error constant") {
  // k = 4 instance: rational part of E_4 is 4^2 (1*2*3)^3 5^7 / 30 = 9e6.
  Rat e4 = top_three_error_coefficient(sys({1, 2, 3, 5}));
  Rat ratio = e4 / Rat(9000000);
  CHECK(ratio > make_rat(Int(12214027), Int(10000000)));  // > e^(1/5)
  CHECK(ratio < make_rat(Int(12214029), Int(10000000)));

  BoundEnvelope env = top_three_envelope(sys({1, 2, 3, 5}));
  CHECK(env.kind == EnvelopeKind::TopThree);
  // Same three coefficients as the cubic envelope when k = 4.
  CHECK(env.main == cubic_constant_envelope(sys({1, 2, 3, 5})).main);
  CHECK(env.err_coeff == e4);
  CHECK(env.err_degree == 0);
  CHECK(env.valid_from == 5);

  // k = 5 with pairwise-coprime first four.
  BoundEnvelope big = top_three_envelope(sys({1, 2, 3, 5, 7}));
  CHECK(big.main.degree() == 4);
  CHECK(big.main.coeff(4) == make_rat(Int(1), Int(24 * 210)));
  CHECK(big.main.coeff(1) == 0);  // (alpha n^2 + beta n + gamma) n^(k-3)
  CHECK(big.err_degree == 1);
  CHECK(big.valid_from == 7);

  // The fourth part must stay coprime to the first three.
  CHECK_THROWS_AS(top_three_envelope(sys({1, 2, 3, 4, 5})), std::domain_error);
  CHECK_THROWS_AS(top_three_error_coefficient(sys({1, 2, 3})), std::domain_error);
}

TEST_CASE("stable-tail envelope and F") {
  CHECK(stable_tail_error_coefficient(sys({2, 3})) == make_rat(Int(325), Int(12)));
  CHECK(stable_tail_error_coefficient(sys({1, 1, 1})) == make_rat(Int(140), Int(3)));
  CHECK_THROWS_AS(stable_tail_error_coefficient(sys({5})), std::domain_error);

  BoundEnvelope env = stable_tail_envelope(sys({2, 3}), 2);
  CHECK(env.kind == EnvelopeKind::StableTail);
  CHECK(env.main.coeff(1) == make_rat(Int(1), Int(6)));
  CHECK(env.main.coeff(0) == 0);  // truncated below degree j-1
  CHECK(env.err_coeff == make_rat(Int(325), Int(12)));
  CHECK(env.err_degree == 0);
  CHECK(env.valid_from == 1);

  // j = 1 pushes the error term to n^(-1).
  BoundEnvelope ones = stable_tail_envelope(sys({1, 1, 1}), 1);
  CHECK(ones.err_degree == -1);
  CHECK(ones.main.coeff(0) == 1);

  CHECK_THROWS_AS(stable_tail_envelope(sys({2, 3}), 1), std::domain_error);
}

TEST_CASE("Bessenrodt-Ono thresholds") {
  SUBCASE("two coprime parts") {
    Threshold t = bessenrodt_ono_threshold(sys({1, 2}));
    CHECK(t.theorem == "two-part-coprime");
    CHECK(t.value == 9);  // strict form: holds for all a + b > 8
  }
  SUBCASE("increasing with coprime first pair") {
    Threshold t = bessenrodt_ono_threshold(sys({1, 2, 3}));
    CHECK(t.theorem == "factorial-product");
    CHECK(t.value == 26);
    CHECK(t.variants.empty());
  }
  SUBCASE("powers of two carry the closed-form variant") {
    Threshold t = bessenrodt_ono_threshold(sys({1, 2, 4}));
    CHECK(t.value == 34);  // 2 * 2! * 8 + 2
    REQUIRE(t.variants.size() == 1);
    CHECK(t.variants[0].first == "powers-of-two");
    CHECK(t.variants[0].second == 33);  // 2^4 * 2! + 1

    Threshold t8 = bessenrodt_ono_threshold(sys({1, 2, 4, 8}));
    REQUIRE(t8.variants.size() == 1);
    CHECK(t8.variants[0].second == 769);  // 2^7 * 3! + 1
  }
  SUBCASE("multiset route") {
    Threshold t = bessenrodt_ono_threshold(sys({1, 2, 2}));
    CHECK(t.theorem == "multiset-general");
    // D = 2, Dk = 6: ceil(2 * 7*13*19 / 3) + 2 = 1153 + 2.
    CHECK(t.value == 1155);
  }
  SUBCASE("inapplicable systems") {
    CHECK_THROWS_AS(bessenrodt_ono_threshold(sys({7})), std::domain_error);
    CHECK_THROWS_AS(bessenrodt_ono_threshold(sys({2, 4, 6})), std::domain_error);
  }
}

TEST_CASE("log-concavity thresholds") {
  SUBCASE("all ones") {
    Threshold two = log_concavity_threshold(sys({1, 1}));
    CHECK(two.theorem == "all-ones");
    CHECK(two.value == 1);

    Threshold three = log_concavity_threshold(sys({1, 1, 1}));
    CHECK(three.value == 3);  // ceil(3/1)
    REQUIRE(three.variants.size() == 1);
    CHECK(three.variants[0].first == "plain");
    CHECK(three.variants[0].second == 1);

    CHECK(log_concavity_threshold(sys({1, 1, 1, 1})).value == 2);  // ceil(4/2)
  }
  SUBCASE("four pairwise-coprime parts") {
    Threshold t = log_concavity_threshold(sys({1, 2, 3, 5}));
    CHECK(t.theorem == "four-part-pairwise-coprime");
    CHECK(t.value == 155520000);  // 192 * 30^4
    REQUIRE(t.variants.size() == 1);
    CHECK(t.variants[0].first == "strengthened");
    CHECK(t.variants[0].second == 233280000);  // 288 * 30^4

    CHECK(log_concavity_threshold(sys({2, 3, 5, 7})).value ==
          Int("373403520000"));  // 192 * 210^4
  }
  SUBCASE("consecutive integers reproduce the known k = 6 figure") {
    Threshold t = log_concavity_threshold(sys({1, 2, 3, 4, 5, 6}));
    CHECK(t.theorem == "consecutive-integers");
    Int strict = t.value - 1;
    // e-majorant may overshoot the true floor by at most one.
    bool close = strict == Int("22218317100077") || strict == Int("22218317100078");
    CHECK(close);
  }
  SUBCASE("one-to-five prefix") {
    Threshold t = log_concavity_threshold(sys({1, 2, 3, 4, 5, 7}));
    CHECK(t.theorem == "one-to-five-prefix");
    CHECK(t.value > Int("1000000"));
  }
  SUBCASE("multiset route") {
    Threshold t = log_concavity_threshold(sys({1, 2, 2, 3, 3}));
    CHECK(t.theorem == "multiset-general");
    // D = 6, Dk = 30: ceil(2 * 31*61*91*121*151 / 5).
    CHECK(t.value == Int("1257636781"));
    REQUIRE(t.variants.size() == 1);
    CHECK(t.variants[0].second == t.value);  // strengthened qualifier, k != 4
  }
  SUBCASE("inapplicable systems") {
    CHECK_THROWS_AS(log_concavity_threshold(sys({1, 2, 3})), std::domain_error);
    CHECK_THROWS_AS(log_concavity_threshold(sys({1, 2, 3, 4})), std::domain_error);
    CHECK_THROWS_AS(log_concavity_threshold(sys({2})), std::domain_error);
  }
}

TEST_CASE("classification") {
  Classification ok = classify(sys({1, 2, 3}));
  CHECK(ok.bo_holds_eventually);
  CHECK_FALSE(ok.common_divisor.has_value());
  CHECK_FALSE(ok.logconcave_eventually);  // k = 3, not all ones

  Classification even = classify(sys({2, 4, 6}));
  CHECK_FALSE(even.bo_holds_eventually);
  REQUIRE(even.common_divisor.has_value());
  CHECK(*even.common_divisor == 2);

  Classification single = classify(sys({1}));
  CHECK_FALSE(single.bo_holds_eventually);

  Classification ones = classify(sys({1, 1}));
  CHECK(ones.logconcave_eventually);

  Classification blocked = classify(sys({1, 2, 3, 4}));
  CHECK(blocked.bo_holds_eventually);
  CHECK_FALSE(blocked.logconcave_eventually);
  REQUIRE(blocked.bad_multisubset.has_value());
  CHECK(*blocked.bad_multisubset == std::vector<Int>{Int(2), Int(4)});
  CHECK(*blocked.bad_multisubset_gcd == 2);

  Classification multi = classify(sys({1, 2, 2, 3, 3}));
  CHECK(multi.bo_holds_eventually);
  CHECK(multi.logconcave_eventually);

  Classification primes = classify(sys({2, 3, 5, 7}));
  CHECK(primes.logconcave_eventually);
}
