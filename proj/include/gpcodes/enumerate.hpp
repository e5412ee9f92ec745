#pragma once

// Exhaustive enumeration of perfect codes, total perfect codes and
// (a,b)-regular sets by backtracking with exact-count constraint propagation.
// Output is complete, self-checked against the verify predicates, and sorted
// in canonical order, so runs are reproducible byte for byte.

#include <cstdint>
#include <vector>

#include "gpcodes/code_set.hpp"
#include "gpcodes/verify.hpp"

namespace gpcodes {

// All sets whose domination profile in the given mode is all-ones:
// closed -> perfect codes, open -> total perfect codes.
std::vector<code_set> enumerate_codes(const graph& g, domination_mode mode);

// All (a,b)-regular sets, a in {0,1}, b in {1,2,3}. (0,1) coincides with
// enumerate_codes(g, closed) and (1,1) with enumerate_codes(g, open).
std::vector<code_set> enumerate_ab_regular(const graph& g, int a, int b);

// |enumerate_codes(g, mode)| without keeping the list.
std::uint64_t count_codes(const graph& g, domination_mode mode);

}  // namespace gpcodes
