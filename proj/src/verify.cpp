#include "gpcodes/verify.hpp"

#include <algorithm>
#include <string>

namespace gpcodes {

std::vector<int> domination_profile(const graph& g, const code_set& c,
                                    domination_mode mode) {
  require_same_width(g, c);
  std::vector<int> counts(static_cast<std::size_t>(g.vertex_count()));
  for (int p = 0; p < g.vertex_count(); ++p) {
    int count = static_cast<int>((g.adjacency_row(p) & c.bits()).count());
    if (mode == domination_mode::closed && c.test(p)) ++count;
    counts[static_cast<std::size_t>(p)] = count;
  }
  return counts;
}

bool is_independent(const graph& g, const code_set& c) {
  require_same_width(g, c);
  for (std::size_t p = c.bits().find_first(); p != bit_row::npos;
       p = c.bits().find_next(p)) {
    if ((g.adjacency_row(static_cast<int>(p)) & c.bits()).any()) return false;
  }
  return true;
}

bool is_perfect_code(const graph& g, const code_set& c) {
  const auto profile = domination_profile(g, c, domination_mode::closed);
  return std::all_of(profile.begin(), profile.end(), [](int x) { return x == 1; });
}

bool is_efficient_dominating_set(const graph& g, const code_set& c) {
  if (!is_independent(g, c)) return false;
  for (int p = 0; p < g.vertex_count(); ++p) {
    if (c.test(p)) continue;
    if ((g.adjacency_row(p) & c.bits()).count() != 1) return false;
  }
  return true;
}

bool is_total_perfect_code(const graph& g, const code_set& c) {
  const auto profile = domination_profile(g, c, domination_mode::open);
  return std::all_of(profile.begin(), profile.end(), [](int x) { return x == 1; });
}

bool is_ab_regular(const graph& g, const code_set& c, int a, int b) {
  if (a < 0 || b < 0)
    throw precondition_violation("regularity targets must be nonnegative");
  const auto profile = domination_profile(g, c, domination_mode::open);
  for (int p = 0; p < g.vertex_count(); ++p) {
    if (profile[static_cast<std::size_t>(p)] != (c.test(p) ? a : b)) return false;
  }
  return true;
}

edge_counts count_code_edges(const graph& g, const code_set& c) {
  require_same_width(g, c);
  edge_counts counts;
  for (const auto& [a, b] : g.edges()) {
    if (!c.contains(a) || !c.contains(b)) continue;
    switch (g.classify_edge(a, b)) {
      case edge_class::outer: ++counts.outer; break;
      case edge_class::spoke: ++counts.spoke; break;
      case edge_class::inner: ++counts.inner; break;
    }
  }
  return counts;
}

bool check_counting_identities(const graph& g, const code_set& c, int b) {
  if (b < 1 || b > 3)
    throw precondition_violation("b must be 1, 2 or 3, got " + std::to_string(b));
  if (!is_ab_regular(g, c, 1, b))
    throw precondition_violation("set is not (1," + std::to_string(b) +
                                 ")-regular; identities do not apply");
  const edge_counts counts = count_code_edges(g, c);
  const bool balanced = counts.outer == counts.inner;
  // Integer-exact form of 2*outer + spoke == b*n/(2+b).
  const bool quota = (2 * counts.outer + counts.spoke) * (2 + b) == b * g.n();
  return balanced && quota;
}

}  // namespace gpcodes
