#include "gpcodes/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace gpcodes {

namespace {

int reduce_mod(int i, int n) {
  int r = i % n;
  return r < 0 ? r + n : r;
}

}  // namespace

vertex_id vertex_id::outer(int i, int n) {
  return {vertex_side::outer, reduce_mod(i, n)};
}

vertex_id vertex_id::inner(int i, int n) {
  return {vertex_side::inner, reduce_mod(i, n)};
}

std::string to_string(vertex_id v) {
  return (v.side == vertex_side::outer ? "u" : "v") + std::to_string(v.index);
}

vertex_id parse_vertex(std::string_view text, int n) {
  if (text.empty() || (text[0] != 'u' && text[0] != 'v'))
    throw parse_error("vertex name must look like u<i> or v<i>, got '" +
                      std::string(text) + "'");
  const std::string_view digits = text.substr(1);
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw parse_error("bad vertex index in '" + std::string(text) + "'");
  const int index = reduce_mod(static_cast<int>(value % n), n);
  return {text[0] == 'u' ? vertex_side::outer : vertex_side::inner, index};
}

void validate_parameters(int n, int k) {
  if (n < 3)
    throw invalid_parameters("n must be at least 3, got " + std::to_string(n));
  if (k % n == 0)
    throw invalid_parameters("k must be nonzero mod n, got k=" + std::to_string(k));
  if (k < 1 || k > n - 1)
    throw invalid_parameters("k must lie in [1, n-1], got k=" + std::to_string(k) +
                             " for n=" + std::to_string(n));
  if ((2 * k) % n == 0)
    throw degenerate_inner_structure(
        "degenerate inner structure: 2k == 0 (mod n) for n=" + std::to_string(n) +
        ", k=" + std::to_string(k));
}

std::vector<int> valid_steps(int n) {
  if (n < 3)
    throw invalid_parameters("n must be at least 3, got " + std::to_string(n));
  std::vector<int> steps;
  for (int k = 1; k <= n - 1; ++k)
    if ((2 * k) % n != 0) steps.push_back(k);
  return steps;
}

cycle_structure inner_cycle_structure(int n, int k) {
  validate_parameters(n, k);
  const int g = std::gcd(n, k);
  return {g, n / g};
}

graph::graph(int n, int k) : n_(n), k_(k) {
  validate_parameters(n, k);
  adj_.assign(2 * n, bit_row(static_cast<std::size_t>(2 * n)));
  auto link = [this](int p, int q) {
    adj_[p].set(q);
    adj_[q].set(p);
  };
  for (int i = 0; i < n; ++i) {
    link(i, (i + 1) % n);          // outer rim
    link(i, n + i);                // spoke
    link(n + i, n + (i + k) % n);  // inner rim
  }
}

int graph::position(vertex_id v) const {
  if (v.index < 0 || v.index >= n_)
    throw precondition_violation("vertex index " + std::to_string(v.index) +
                                 " out of range for n=" + std::to_string(n_));
  return v.side == vertex_side::outer ? v.index : n_ + v.index;
}

vertex_id graph::vertex_at(int position) const {
  if (position < 0 || position >= 2 * n_)
    throw precondition_violation("vertex position " + std::to_string(position) +
                                 " out of range for n=" + std::to_string(n_));
  return position < n_ ? vertex_id{vertex_side::outer, position}
                       : vertex_id{vertex_side::inner, position - n_};
}

bool graph::adjacent(vertex_id a, vertex_id b) const {
  return adj_[position(a)].test(static_cast<std::size_t>(position(b)));
}

std::array<vertex_id, 3> graph::neighbors(vertex_id v) const {
  position(v);  // range check
  std::array<vertex_id, 3> result;
  if (v.side == vertex_side::outer) {
    result = {vertex_id::outer(v.index - 1, n_), vertex_id::outer(v.index + 1, n_),
              vertex_id::inner(v.index, n_)};
  } else {
    result = {vertex_id::outer(v.index, n_), vertex_id::inner(v.index - k_, n_),
              vertex_id::inner(v.index + k_, n_)};
  }
  std::sort(result.begin(), result.end());
  return result;
}

edge_class graph::classify_edge(vertex_id a, vertex_id b) const {
  if (!adjacent(a, b))
    throw precondition_violation("{" + to_string(a) + ", " + to_string(b) +
                                 "} is not an edge");
  if (a.side == vertex_side::outer && b.side == vertex_side::outer)
    return edge_class::outer;
  if (a.side == vertex_side::inner && b.side == vertex_side::inner)
    return edge_class::inner;
  return edge_class::spoke;
}

std::vector<std::pair<vertex_id, vertex_id>> graph::edges() const {
  std::vector<std::pair<vertex_id, vertex_id>> result;
  result.reserve(static_cast<std::size_t>(3 * n_));
  for (int i = 0; i < n_; ++i)
    result.emplace_back(vertex_id::outer(i, n_), vertex_id::outer(i + 1, n_));
  for (int i = 0; i < n_; ++i)
    result.emplace_back(vertex_id::outer(i, n_), vertex_id::inner(i, n_));
  for (int i = 0; i < n_; ++i)
    result.emplace_back(vertex_id::inner(i, n_), vertex_id::inner(i + k_, n_));
  return result;
}

}  // namespace gpcodes
