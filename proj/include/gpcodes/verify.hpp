#pragma once

// Membership predicates for code sets: independence, perfect codes, total
// perfect codes, (a,b)-regular sets, and the edge-count statistics their
// classification rests on. All functions are pure in (graph, code_set).

#include <vector>

#include "gpcodes/code_set.hpp"
#include "gpcodes/graph.hpp"

namespace gpcodes {

enum class domination_mode { closed, open };

// Per-vertex counts in canonical order: |N[w] ∩ C| (closed) or |N(w) ∩ C|
// (open), where N[w] = N(w) ∪ {w}.
std::vector<int> domination_profile(const graph& g, const code_set& c,
                                    domination_mode mode);

bool is_independent(const graph& g, const code_set& c);

// Closed-profile route: every closed neighbourhood meets C exactly once.
bool is_perfect_code(const graph& g, const code_set& c);

// Independence route to the same predicate (the usual synonym): C independent
// and every vertex outside C adjacent to exactly one member. Deliberately a
// separate derivation from is_perfect_code so the two can be cross-checked.
bool is_efficient_dominating_set(const graph& g, const code_set& c);

// Every vertex (members included) has exactly one neighbour in C.
bool is_total_perfect_code(const graph& g, const code_set& c);

// Every member has exactly a neighbours in C, every non-member exactly b.
// (0,1)-regular = perfect code, (1,1)-regular = total perfect code.
bool is_ab_regular(const graph& g, const code_set& c, int a, int b);

// Code-internal edges split by class.
struct edge_counts {
  int outer = 0;  // both ends on the outer rim
  int spoke = 0;  // one end on each rim
  int inner = 0;  // both ends on the inner rim

  int total() const { return outer + spoke + inner; }

  bool operator==(const edge_counts&) const = default;
};

edge_counts count_code_edges(const graph& g, const code_set& c);

// For a (1,b)-regular set, b in {1,2,3}: the counts must satisfy
// outer == inner and 2*outer + spoke == b*n/(2+b). Returns whether they do;
// a false return signals an implementation bug, not a property of the input.
// Throws precondition_violation unless is_ab_regular(g, c, 1, b).
bool check_counting_identities(const graph& g, const code_set& c, int b);

}  // namespace gpcodes
