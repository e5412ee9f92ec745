#pragma once

// A subset of V(GP(n,k)) held as a 2n-bit vector in canonical vertex order.
// The width is a witness of the graph order: operations that pair a code set
// with a graph of a different order throw width_mismatch.

#include <string>
#include <string_view>
#include <vector>

#include "gpcodes/graph.hpp"

namespace gpcodes {

class code_set {
 public:
  explicit code_set(int n);

  // Comma-separated vertex names, order-insensitive and whitespace-tolerant:
  // "u0, v2,u4". Duplicates collapse (set semantics).
  static code_set parse(int n, std::string_view names);

  int n() const { return n_; }
  int width() const { return 2 * n_; }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }

  bool contains(vertex_id v) const { return bits_.test(position(v)); }
  void insert(vertex_id v) { bits_.set(position(v)); }
  void erase(vertex_id v) { bits_.reset(position(v)); }

  bool test(int position) const;
  void set(int position, bool value = true);

  const bit_row& bits() const { return bits_; }

  // Members in canonical order; to_names() joins them with commas.
  std::vector<vertex_id> members() const;
  std::string to_names() const;

  int outer_count() const;  // |C ∩ U|
  int inner_count() const;  // |C ∩ V|

  // Image under the rotation u_i -> u_{i+shift}, v_i -> v_{i+shift}.
  code_set rotated(int shift) const;

  bool operator==(const code_set&) const = default;
  // Order as 2n-bit unsigned integers (bit p has weight 2^p).
  bool operator<(const code_set& other) const { return bits_ < other.bits_; }

 private:
  int position(vertex_id v) const;

  int n_;
  bit_row bits_;
};

// Throws width_mismatch unless c was built for a graph of g's order.
void require_same_width(const graph& g, const code_set& c);

}  // namespace gpcodes
