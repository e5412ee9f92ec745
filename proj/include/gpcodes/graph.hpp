#pragma once

// Generalized Petersen graph GP(n,k): outer rim u_0..u_{n-1}, inner rim
// v_0..v_{n-1}, edges u_i ~ u_{i+1}, u_i ~ v_i, v_i ~ v_{i+k} (indices mod n).
// Adjacency is stored as dense 2n-bit rows so neighbourhood intersections are
// popcounts.

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gpcodes/errors.hpp"

namespace gpcodes {

using bit_row = boost::dynamic_bitset<>;

enum class vertex_side { outer, inner };

// One vertex of GP(n,k): u_i (outer) or v_i (inner), index reduced mod n.
// Canonical order: all outer vertices by index, then all inner vertices.
struct vertex_id {
  vertex_side side{vertex_side::outer};
  int index{0};

  static vertex_id outer(int i, int n);
  static vertex_id inner(int i, int n);

  auto operator<=>(const vertex_id&) const = default;
};

// Text form "u<i>" / "v<i>", e.g. "u0", "v11".
std::string to_string(vertex_id v);
vertex_id parse_vertex(std::string_view text, int n);

enum class edge_class { outer, spoke, inner };

struct cycle_structure {
  int count = 0;   // number of disjoint inner cycles, gcd(n,k)
  int length = 0;  // length of each, n / gcd(n,k)

  bool operator==(const cycle_structure&) const = default;
};

// Throws invalid_parameters unless n >= 3 and 1 <= k <= n-1, and
// degenerate_inner_structure when 2k == 0 (mod n).
void validate_parameters(int n, int k);

// All k for which GP(n,k) is accepted, ascending.
std::vector<int> valid_steps(int n);

cycle_structure inner_cycle_structure(int n, int k);

class graph {
 public:
  // Builds GP(n,k). Throws as validate_parameters does.
  graph(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int vertex_count() const { return 2 * n_; }
  int edge_count() const { return 3 * n_; }

  // Canonical bit position of a vertex: u_i -> i, v_i -> n + i.
  int position(vertex_id v) const;
  vertex_id vertex_at(int position) const;

  const bit_row& adjacency_row(int position) const { return adj_[position]; }
  const bit_row& adjacency_row(vertex_id v) const { return adj_[position(v)]; }

  bool adjacent(vertex_id a, vertex_id b) const;

  // The three neighbours of v, in canonical order.
  std::array<vertex_id, 3> neighbors(vertex_id v) const;

  // Throws precondition_violation if {a, b} is not an edge.
  edge_class classify_edge(vertex_id a, vertex_id b) const;

  // Every edge exactly once: outer rim, then spokes, then inner rim.
  std::vector<std::pair<vertex_id, vertex_id>> edges() const;

 private:
  int n_;
  int k_;
  std::vector<bit_row> adj_;
};

}  // namespace gpcodes
