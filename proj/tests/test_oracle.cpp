#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockmoments/closedform.hpp"
#include "blockmoments/oracle.hpp"

using namespace blockmoments;

TEST_CASE("dp oracle frozen values") {
  const BigInt free_expected[] = {1, 0, 2, 0, 6, 0, 20};
  for (unsigned m = 0; m <= 6; ++m) {
    CHECK(exact_moment_dp(m, Order::infinite()) == free_expected[m]);
  }
  CHECK(exact_moment_dp(30, Order::infinite()) == 155117520);
  CHECK(exact_moment_dp(3, Order::finite(2)) == 0);
  CHECK(exact_moment_dp(4, Order::finite(3)) == 6);
  CHECK(exact_moment_dp(5, Order::finite(3)) == 10);
  CHECK(exact_moment_dp(6, Order::finite(3)) == 22);
  CHECK(exact_moment_dp(8, Order::finite(4)) == 128);
  for (unsigned m = 0; m <= 12; ++m) {
    CHECK(exact_moment_dp(m, Order::finite(1)) == BigInt(1) << m);
  }
}

TEST_CASE("odd moments vanish when no odd multiple of n is reachable") {
  for (unsigned m = 1; m <= 15; m += 2) {
    CHECK(exact_moment_dp(m, Order::infinite()) == 0);
    for (unsigned n = 2; n <= 16; n += 2) {
      CHECK(exact_moment_dp(m, Order::finite(n)) == 0);
    }
  }
}

TEST_CASE("binomial oracle equals dp") {
  for (unsigned m = 0; m <= 60; ++m) {
    CHECK(exact_moment_binomial(m, Order::infinite()) ==
          exact_moment_dp(m, Order::infinite()));
    for (unsigned n = 1; n <= 10; ++n) {
      CHECK(exact_moment_binomial(m, Order::finite(n)) ==
            exact_moment_dp(m, Order::finite(n)));
    }
  }
}

TEST_CASE("enumeration oracle equals dp") {
  for (unsigned m = 0; m <= 16; ++m) {
    CHECK(exact_moment_enum(m, Order::infinite()) ==
          exact_moment_dp(m, Order::infinite()));
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 8u}) {
      CHECK(exact_moment_enum(m, Order::finite(n)) ==
            exact_moment_dp(m, Order::finite(n)));
    }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(exact_moment_enum(kEnumerationCap + 1, Order::infinite()),
                  EnumerationCapExceeded);
  try {
    exact_moment_enum(30, Order::finite(3));
    FAIL("expected EnumerationCapExceeded");
  } catch (const EnumerationCapExceeded& e) {
    CHECK(e.m() == 30);
  }
}

TEST_CASE("moments are bounded by the sequence count") {
  // Equality holds exactly when every sign sequence reduces to the identity:
  // n = 1, the empty product m = 0, or n = 2 with m even.
  for (unsigned m = 0; m <= 14; ++m) {
    for (unsigned n = 1; n <= 8; ++n) {
      const BigInt count = exact_moment_dp(m, Order::finite(n));
      CHECK(count <= BigInt(1) << m);
      const bool saturated =
          (n == 1) || (m == 0) || (n == 2 && m % 2 == 0);
      CHECK((count == BigInt(1) << m) == saturated);
    }
    CHECK(exact_moment_dp(m, Order::infinite()) <= BigInt(1) << m);
  }
}

TEST_CASE("finite-order moments dominate the free ones") {
  for (unsigned m = 0; m <= 20; ++m) {
    const BigInt free_count = exact_moment_dp(m, Order::infinite());
    for (unsigned n = 1; n <= 9; ++n) {
      CHECK(exact_moment_dp(m, Order::finite(n)) >= free_count);
    }
  }
}

TEST_CASE("below the order the relator is invisible") {
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned m = 0; m < n; ++m) {
      CHECK(exact_moment_dp(m, Order::finite(n)) ==
            exact_moment_dp(m, Order::infinite()));
    }
  }
}

TEST_CASE("classification golden counts") {
  SUBCASE("m=6 n=3") {
    const SequenceClassification c = classify_sequences(6, 3);
    CHECK(c.m == 6);
    CHECK(c.n == 3);
    REQUIRE(c.k.has_value());
    CHECK(*c.k == 2);
    CHECK(c.count_S0 == 20);
    CHECK(*c.count_Wj == 4);
    CHECK(*c.count_Wj_prime == 2);
    CHECK(*c.count_Wj_minus_prime == 2);
    CHECK(*c.count_Wj_cap_S0 == 2);
  }
  SUBCASE("m=12 n=3") {
    const SequenceClassification c = classify_sequences(12, 3);
    REQUIRE(c.k.has_value());
    CHECK(*c.k == 4);
    CHECK(c.count_S0 == 924);
    CHECK(*c.count_Wj == 16);
    CHECK(*c.count_Wj_prime == 6);
    CHECK(*c.count_Wj_minus_prime == 10);
    CHECK(*c.count_Wj_cap_S0 == 6);
  }
  SUBCASE("odd block count: m=6 n=2") {
    const SequenceClassification c = classify_sequences(6, 2);
    REQUIRE(c.k.has_value());
    CHECK(*c.k == 3);
    CHECK(c.count_S0 == 20);
    CHECK(*c.count_Wj == 8);
    CHECK(*c.count_Wj_prime == 0);
    CHECK(*c.count_Wj_minus_prime == 8);
    CHECK(*c.count_Wj_cap_S0 == 0);
  }
}

TEST_CASE("classification when n does not divide m") {
  const SequenceClassification c = classify_sequences(5, 3);
  CHECK_FALSE(c.k.has_value());
  CHECK_FALSE(c.count_Wj.has_value());
  CHECK_FALSE(c.count_Wj_prime.has_value());
  CHECK_FALSE(c.count_Wj_minus_prime.has_value());
  CHECK_FALSE(c.count_Wj_cap_S0.has_value());
  CHECK(c.count_S0 == 0);  // odd length
}

TEST_CASE("classification invariants across the small range") {
  for (unsigned m = 1; m <= 14; ++m) {
    for (unsigned n = 1; n <= 6; ++n) {
      const SequenceClassification c = classify_sequences(m, n);
      CHECK(BigInt(c.count_S0) == exact_moment_dp(m, Order::infinite()));
      if (m % n != 0) {
        CHECK_FALSE(c.k.has_value());
        continue;
      }
      REQUIRE(c.k.has_value());
      const unsigned k = *c.k;
      CHECK(k == m / n);
      CHECK(BigInt(*c.count_Wj) == BigInt(1) << k);
      CHECK(BigInt(*c.count_Wj_prime) == central_bracket(k));
      CHECK(*c.count_Wj == *c.count_Wj_prime + *c.count_Wj_minus_prime);
      if (n >= 2) {
        // A block sequence sums to zero exactly when its blocks balance.
        CHECK(*c.count_Wj_cap_S0 == *c.count_Wj_prime);
      }
      CHECK(*c.count_Wj_cap_S0 <= c.count_S0);
    }
  }
}

TEST_CASE("classification argument validation") {
  CHECK_THROWS_AS(classify_sequences(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(classify_sequences(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(classify_sequences(kEnumerationCap + 1, 1),
                  EnumerationCapExceeded);
}
