#include "doctest.h"

#include "gpcodes/classify.hpp"

using namespace gpcodes;

TEST_CASE("classify_instance examples") {
  const auto perfect = classify_instance(8, 1, code_kind::perfect);
  CHECK(perfect.match);
  CHECK(perfect.enumerated.size() == 4);
  CHECK(perfect.predicted.size() == 4);
  CHECK(perfect.all_invariants_pass());

  const auto total = classify_instance(12, 7, code_kind::total);
  CHECK(total.match);
  CHECK(total.enumerated.size() == 9);
  CHECK(total.all_invariants_pass());

  const auto none = classify_instance(9, 3, code_kind::total);
  CHECK(none.match);
  CHECK(none.enumerated.empty());
  CHECK(none.all_invariants_pass());
}

TEST_CASE("classify_instance rejects invalid parameters") {
  CHECK_THROWS_AS(classify_instance(6, 3, code_kind::perfect), degenerate_inner_structure);
  CHECK_THROWS_AS(classify_instance(2, 1, code_kind::total), invalid_parameters);
}

TEST_CASE("sweep over n=4 perfect instances") {
  sweep_options options{4, 4, true, false};
  const auto result = sweep(options);
  REQUIRE(result.reports.size() == 2);  // k = 2 is degenerate
  CHECK(result.reports[0].k == 1);
  CHECK(result.reports[1].k == 3);
  for (const auto& rep : result.reports) CHECK(rep.match);
  CHECK(result.summary.clean());
}

TEST_CASE("sweep over n=6 total instances reproduces the headline counts") {
  sweep_options options{6, 6, false, true};
  const auto result = sweep(options);
  REQUIRE(result.reports.size() == 4);
  auto count_for = [&](int k) -> std::size_t {
    for (const auto& rep : result.reports)
      if (rep.k == k) return rep.enumerated.size();
    return static_cast<std::size_t>(-1);
  };
  CHECK(count_for(1) == 9);
  CHECK(count_for(2) == 3);
  CHECK(count_for(4) == 3);
  CHECK(count_for(5) == 9);
  CHECK(result.summary.clean());
}

TEST_CASE("reports for k and n-k carry identical code lists") {
  for (int n : {8, 9, 12}) {
    for (int k : valid_steps(n)) {
      if (k >= n - k) continue;
      for (auto kind : {code_kind::perfect, code_kind::total}) {
        const auto a = classify_instance(n, k, kind);
        const auto b = classify_instance(n, n - k, kind);
        CHECK(a.enumerated == b.enumerated);
        CHECK(a.predicted == b.predicted);
      }
    }
  }
}

TEST_CASE("small full sweep is clean") {
  const auto result = sweep({3, 12, true, true});
  CHECK(result.summary.clean());
  CHECK(result.summary.instances == static_cast<int>(result.reports.size()));
  for (const auto& rep : result.reports) {
    CHECK(rep.match);
    CHECK(rep.all_invariants_pass());
  }
}

TEST_CASE("sweep validates its range") {
  CHECK_THROWS_AS(sweep({2, 5, true, true}), invalid_parameters);
  CHECK_THROWS_AS(sweep({8, 5, true, true}), invalid_parameters);
}
