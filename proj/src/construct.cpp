#include "gpcodes/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpcodes {

namespace {

void require_multiple(int n, int m) {
  if (n < 3 || n % m != 0)
    throw invalid_parameters("n must be a multiple of " + std::to_string(m) +
                             " (and at least 3), got " + std::to_string(n));
}

void require_shift(int j, int limit) {
  if (j < 0 || j >= limit)
    throw invalid_parameters("j must lie in [0, " + std::to_string(limit - 1) +
                             "], got " + std::to_string(j));
}

std::vector<code_set> sorted_unique(std::vector<code_set> codes) {
  std::sort(codes.begin(), codes.end());
  const auto last = std::unique(codes.begin(), codes.end());
  if (last != codes.end())
    throw std::logic_error("family members are expected to be pairwise distinct");
  return codes;
}

}  // namespace

bool perfect_code_exists(int n, int k) {
  validate_parameters(n, k);
  return n % 4 == 0 && k % 2 == 1;
}

code_set make_perfect_code(int n, int j) {
  require_multiple(n, 4);
  require_shift(j, 4);
  code_set c(n);
  for (int i = 0; i < n / 4; ++i) {
    c.insert(vertex_id::outer(4 * i + j, n));
    c.insert(vertex_id::inner(4 * i + j + 2, n));
  }
  return c;
}

code_set make_total_code_a(int n, int j) {
  require_multiple(n, 3);
  require_shift(j, 3);
  code_set c(n);
  for (int i = 0; i < n / 3; ++i) {
    c.insert(vertex_id::outer(3 * i + j, n));
    c.insert(vertex_id::inner(3 * i + j, n));
  }
  return c;
}

code_set make_total_code_b(int n, int j) {
  require_multiple(n, 6);
  require_shift(j, 6);
  code_set c(n);
  for (int i = 0; i < n / 6; ++i) {
    c.insert(vertex_id::outer(6 * i + j, n));
    c.insert(vertex_id::outer(6 * i + j + 1, n));
    c.insert(vertex_id::inner(6 * i + j + 3, n));
    c.insert(vertex_id::inner(6 * i + j + 4, n));
  }
  return c;
}

code_family predicted_perfect_family(int n, int k) {
  validate_parameters(n, k);
  code_family family{family_kind::perfect, {}};
  if (!perfect_code_exists(n, k)) return family;
  for (int j = 0; j < 4; ++j) family.members.emplace_back(j, make_perfect_code(n, j));
  return family;
}

std::vector<code_family> predicted_total_family(int n, int k) {
  validate_parameters(n, k);
  std::vector<code_family> families;
  if (n % 3 == 0 && k % 3 != 0) {
    code_family a{family_kind::total_a, {}};
    for (int j = 0; j < 3; ++j) a.members.emplace_back(j, make_total_code_a(n, j));
    families.push_back(std::move(a));
  }
  if (n % 6 == 0 && (k % 6 == 1 || k % 6 == 5)) {
    code_family b{family_kind::total_b, {}};
    for (int j = 0; j < 6; ++j) b.members.emplace_back(j, make_total_code_b(n, j));
    families.push_back(std::move(b));
  }
  return families;
}

std::vector<code_set> family_codes(const code_family& family) {
  std::vector<code_set> codes;
  codes.reserve(family.members.size());
  for (const auto& [j, set] : family.members) codes.push_back(set);
  return sorted_unique(std::move(codes));
}

std::vector<code_set> family_codes(const std::vector<code_family>& families) {
  std::vector<code_set> codes;
  for (const auto& family : families)
    for (const auto& [j, set] : family.members) codes.push_back(set);
  return sorted_unique(std::move(codes));
}

}  // namespace gpcodes
