#include "doctest.h"

#include "gpcodes/construct.hpp"
#include "gpcodes/verify.hpp"

using namespace gpcodes;

TEST_CASE("perfect code existence condition") {
  CHECK(perfect_code_exists(8, 1));
  CHECK_FALSE(perfect_code_exists(8, 2));
  CHECK_FALSE(perfect_code_exists(10, 3));
  CHECK(perfect_code_exists(12, 7));
  CHECK_THROWS_AS(perfect_code_exists(6, 3), degenerate_inner_structure);
  CHECK_THROWS_AS(perfect_code_exists(2, 1), invalid_parameters);
}

TEST_CASE("perfect code formula") {
  CHECK(make_perfect_code(8, 0) == code_set::parse(8, "u0,u4,v2,v6"));
  CHECK(make_perfect_code(8, 2) == code_set::parse(8, "u2,u6,v4,v0"));
  CHECK(make_perfect_code(12, 1) == code_set::parse(12, "u1,u5,u9,v3,v7,v11"));
  CHECK(make_perfect_code(8, 0).size() == 4);  // n/2
  CHECK_THROWS_AS(make_perfect_code(10, 0), invalid_parameters);
  CHECK_THROWS_AS(make_perfect_code(8, 4), invalid_parameters);
  CHECK_THROWS_AS(make_perfect_code(8, -1), invalid_parameters);
}

TEST_CASE("total code formulas") {
  CHECK(make_total_code_a(6, 0) == code_set::parse(6, "u0,u3,v0,v3"));
  CHECK(make_total_code_a(6, 2) == code_set::parse(6, "u2,u5,v2,v5"));
  CHECK(make_total_code_a(9, 1) == code_set::parse(9, "u1,u4,u7,v1,v4,v7"));
  CHECK_THROWS_AS(make_total_code_a(7, 0), invalid_parameters);
  CHECK_THROWS_AS(make_total_code_a(6, 3), invalid_parameters);

  CHECK(make_total_code_b(6, 0) == code_set::parse(6, "u0,u1,v3,v4"));
  CHECK(make_total_code_b(6, 5) == code_set::parse(6, "u5,u0,v2,v3"));
  CHECK(make_total_code_b(12, 2) == code_set::parse(12, "u2,u3,u8,u9,v5,v6,v11,v0"));
  CHECK_THROWS_AS(make_total_code_b(9, 0), invalid_parameters);
  CHECK_THROWS_AS(make_total_code_b(12, 6), invalid_parameters);
}

TEST_CASE("total codes have cardinality 2n/3") {
  for (int n : {6, 9, 12, 18}) {
    for (int j = 0; j < 3; ++j) CHECK(make_total_code_a(n, j).size() == 2 * n / 3);
  }
  for (int n : {6, 12, 18}) {
    for (int j = 0; j < 6; ++j) CHECK(make_total_code_b(n, j).size() == 2 * n / 3);
  }
}

TEST_CASE("predicted perfect family") {
  CHECK(predicted_perfect_family(8, 1).members.size() == 4);
  CHECK(predicted_perfect_family(8, 2).members.empty());
  CHECK(predicted_perfect_family(12, 3).members.size() == 4);
  CHECK(family_codes(predicted_perfect_family(8, 1)).size() == 4);
}

TEST_CASE("predicted total family") {
  CHECK(family_codes(predicted_total_family(6, 1)).size() == 9);   // A + B
  CHECK(family_codes(predicted_total_family(6, 2)).size() == 3);   // A only
  CHECK(family_codes(predicted_total_family(5, 2)).empty());       // 5 % 3 != 0
  CHECK(family_codes(predicted_total_family(9, 3)).empty());       // k divisible by 3
  CHECK(family_codes(predicted_total_family(12, 5)).size() == 9);  // 5 == -1 (mod 6)
  CHECK(family_codes(predicted_total_family(12, 4)).size() == 3);
}

TEST_CASE("every predicted perfect code verifies") {
  for (int n = 4; n <= 24; n += 4) {
    for (int k : valid_steps(n)) {
      if (!perfect_code_exists(n, k)) continue;
      const graph g(n, k);
      for (const auto& [j, c] : predicted_perfect_family(n, k).members) {
        CHECK(is_perfect_code(g, c));
        CHECK(is_efficient_dominating_set(g, c));
        CHECK(is_ab_regular(g, c, 0, 1));
      }
    }
  }
}

TEST_CASE("every predicted total code verifies") {
  for (int n = 3; n <= 24; n += 3) {
    for (int k : valid_steps(n)) {
      const graph g(n, k);
      for (const auto& family : predicted_total_family(n, k)) {
        for (const auto& [j, c] : family.members) {
          CHECK(is_total_perfect_code(g, c));
          CHECK(is_ab_regular(g, c, 1, 1));
        }
      }
    }
  }
}

TEST_CASE("families are rotation orbits: shift covariance") {
  for (int j = 0; j < 4; ++j)
    CHECK(make_perfect_code(16, j) == make_perfect_code(16, 0).rotated(j));
  for (int j = 0; j < 3; ++j)
    CHECK(make_total_code_a(9, j) == make_total_code_a(9, 0).rotated(j));
  for (int j = 0; j < 6; ++j)
    CHECK(make_total_code_b(12, j) == make_total_code_b(12, 0).rotated(j));
}

TEST_CASE("type A and type B members never coincide") {
  const graph g(6, 1);
  const auto families = predicted_total_family(6, 1);
  REQUIRE(families.size() == 2);
  for (const auto& [ja, a] : families[0].members) {
    CHECK(count_code_edges(g, a).spoke > 0);
    for (const auto& [jb, b] : families[1].members) {
      CHECK(count_code_edges(g, b).spoke == 0);
      CHECK_FALSE(a == b);
    }
  }
}
