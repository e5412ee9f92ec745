#include "gpcodes/classify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "gpcodes/construct.hpp"
#include "gpcodes/enumerate.hpp"
#include "gpcodes/verify.hpp"

namespace gpcodes {

namespace {

bool all_of_codes(const std::vector<code_set>& codes,
                  const std::function<bool(const code_set&)>& pred) {
  return std::all_of(codes.begin(), codes.end(), pred);
}

std::vector<invariant_check> perfect_invariants(const graph& g,
                                                const classification_report& rep) {
  const int n = g.n();
  std::vector<invariant_check> checks;
  checks.push_back({"enumerated_sets_verify",
                    all_of_codes(rep.enumerated, [&](const code_set& c) {
                      return is_perfect_code(g, c) && is_efficient_dominating_set(g, c);
                    })});
  checks.push_back({"predicted_sets_verify",
                    all_of_codes(rep.predicted, [&](const code_set& c) {
                      return is_perfect_code(g, c);
                    })});
  // |C ∩ U| = |C ∩ V| = n/4 for every perfect code.
  checks.push_back({"outer_inner_split",
                    all_of_codes(rep.enumerated, [&](const code_set& c) {
                      return n % 4 == 0 && c.outer_count() == n / 4 &&
                             c.inner_count() == n / 4;
                    })});
  checks.push_back({"cardinality", all_of_codes(rep.enumerated, [&](const code_set& c) {
                      return 2 * c.size() == n;
                    })});
  return checks;
}

std::vector<invariant_check> total_invariants(const graph& g,
                                              const classification_report& rep) {
  const int n = g.n();
  std::vector<invariant_check> checks;
  checks.push_back({"enumerated_sets_verify",
                    all_of_codes(rep.enumerated, [&](const code_set& c) {
                      return is_total_perfect_code(g, c) && is_ab_regular(g, c, 1, 1);
                    })});
  checks.push_back({"predicted_sets_verify",
                    all_of_codes(rep.predicted, [&](const code_set& c) {
                      return is_total_perfect_code(g, c);
                    })});
  checks.push_back({"order_divisibility", rep.enumerated.empty() || n % 3 == 0});
  // outer == inner and 2*outer + spoke == n/3 for every total perfect code.
  checks.push_back({"edge_count_identities",
                    all_of_codes(rep.enumerated, [&](const code_set& c) {
                      return check_counting_identities(g, c, 1);
                    })});
  // A code with an outer-rim edge has no spoke edges.
  checks.push_back({"spoke_exclusion",
                    all_of_codes(rep.enumerated, [&](const code_set& c) {
                      const edge_counts counts = count_code_edges(g, c);
                      return counts.outer == 0 || counts.spoke == 0;
                    })});
  checks.push_back({"cardinality", all_of_codes(rep.enumerated, [&](const code_set& c) {
                      return 3 * c.size() == 2 * n && c.size() % 2 == 0;
                    })});
  return checks;
}

}  // namespace

std::string to_string(code_kind kind) {
  return kind == code_kind::perfect ? "perfect" : "total";
}

bool classification_report::all_invariants_pass() const {
  return std::all_of(invariants.begin(), invariants.end(),
                     [](const invariant_check& c) { return c.pass; });
}

classification_report classify_instance(int n, int k, code_kind kind) {
  const graph g(n, k);
  classification_report rep;
  rep.n = n;
  rep.k = k;
  rep.kind = kind;
  if (kind == code_kind::perfect) {
    rep.enumerated = enumerate_codes(g, domination_mode::closed);
    rep.predicted = family_codes(predicted_perfect_family(n, k));
  } else {
    rep.enumerated = enumerate_codes(g, domination_mode::open);
    rep.predicted = family_codes(predicted_total_family(n, k));
  }
  rep.match = rep.enumerated == rep.predicted;
  rep.invariants = kind == code_kind::perfect ? perfect_invariants(g, rep)
                                              : total_invariants(g, rep);
  return rep;
}

sweep_result sweep(const sweep_options& options) {
  if (options.n_min < 3 || options.n_min > options.n_max)
    throw invalid_parameters("sweep range requires 3 <= n_min <= n_max");
  const auto start = std::chrono::steady_clock::now();
  sweep_result result;
  result.summary.options = options;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    for (int k : valid_steps(n)) {
      if (options.perfect)
        result.reports.push_back(classify_instance(n, k, code_kind::perfect));
      if (options.total)
        result.reports.push_back(classify_instance(n, k, code_kind::total));
    }
  }
  for (const auto& rep : result.reports) {
    if (!rep.match)
      result.summary.mismatches.emplace_back(rep.n, rep.k, rep.kind);
    for (const auto& check : rep.invariants)
      if (!check.pass) ++result.summary.invariant_failures;
  }
  result.summary.instances = static_cast<int>(result.reports.size());
  result.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace gpcodes
