#pragma once

// Explicit code families in GP(n,k) and the existence conditions that decide
// when they are the complete answer:
//   perfect:  {u_{4i+j}, v_{4i+j+2}}, j in 0..3, when 4 | n and k odd;
//   total A:  {u_{3i+j}, v_{3i+j}},   j in 0..2, when 3 | n and 3 ∤ k;
//   total B:  {u_{6i+j}, u_{6i+j+1}, v_{6i+j+3}, v_{6i+j+4}}, j in 0..5,
//             when 6 | n and k == ±1 (mod 6).
// The set formulas do not involve k; only existence does.

#include <vector>

#include "gpcodes/code_set.hpp"

namespace gpcodes {

enum class family_kind { perfect, total_a, total_b };

struct code_family {
  family_kind kind{family_kind::perfect};
  std::vector<std::pair<int, code_set>> members;  // (j, set), j ascending
};

// Existence test for perfect codes; validates (n,k) like graph construction.
bool perfect_code_exists(int n, int k);

code_set make_perfect_code(int n, int j);  // requires 4 | n, j in 0..3
code_set make_total_code_a(int n, int j);  // requires 3 | n, j in 0..2
code_set make_total_code_b(int n, int j);  // requires 6 | n, j in 0..5

// Empty family when the existence condition fails, else all four members.
code_family predicted_perfect_family(int n, int k);

// The families whose conditions hold for (n,k): type A and/or type B.
std::vector<code_family> predicted_total_family(int n, int k);

// Member sets flattened, deduplicated, in canonical order.
std::vector<code_set> family_codes(const code_family& family);
std::vector<code_set> family_codes(const std::vector<code_family>& families);

}  // namespace gpcodes
