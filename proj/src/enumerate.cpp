#include "gpcodes/enumerate.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gpcodes {

namespace {

enum : unsigned char { kUndecided = 0, kOut = 1, kIn = 2 };

// Depth-first search over vertex assignments. A finished assignment must give
// every vertex w exactly `in_target` code neighbours if w is in the code and
// `out_target` otherwise. Running invariants, maintained incrementally:
//   code_nbr[w] = decided in-code neighbours of w,
//   free_nbr[w] = undecided neighbours of w,
// so w's final count lies in [code_nbr[w], code_nbr[w] + free_nbr[w]]. A
// branch is cut exactly when that interval misses every target still open
// to w, which keeps the pruning sound.
class search_engine {
 public:
  search_engine(const graph& g, int a, int b,
                std::function<void(const code_set&)> emit)
      : g_(g), in_target_(a), out_target_(b), total_(g.vertex_count()),
        emit_(std::move(emit)) {
    nbr_.resize(total_);
    for (int p = 0; p < total_; ++p) {
      const auto ns = g.neighbors(g.vertex_at(p));
      for (int j = 0; j < 3; ++j) nbr_[p][j] = g.position(ns[j]);
    }
    state_.assign(total_, kUndecided);
    code_nbr_.assign(total_, 0);
    free_nbr_.assign(total_, 3);
    // Interleaved order u_0, v_0, u_1, v_1, ... keeps the constraint frontier
    // a local window of the rims.
    order_.reserve(total_);
    for (int i = 0; i < g.n(); ++i) {
      order_.push_back(i);
      order_.push_back(g.n() + i);
    }
    trail_.reserve(total_);
  }

  void run() { dfs(0); }

 private:
  void dfs(int order_index) {
    while (order_index < total_ && state_[order_[order_index]] != kUndecided)
      ++order_index;
    if (order_index == total_) {
      emit_solution();
      return;
    }
    const int x = order_[order_index];
    for (unsigned char value : {kIn, kOut}) {
      const size_t mark = trail_.size();
      if (propagate(x, value)) dfs(order_index + 1);
      undo_to(mark);
    }
  }

  bool propagate(int x, unsigned char value) {
    pending_.clear();
    dirty_.clear();
    pending_.emplace_back(x, value);
    size_t next_pending = 0, next_dirty = 0;
    while (next_pending < pending_.size() || next_dirty < dirty_.size()) {
      if (next_pending < pending_.size()) {
        const auto [v, want] = pending_[next_pending++];
        if (state_[v] != kUndecided) {
          if (state_[v] != want) return false;
          continue;
        }
        apply(v, want);
        dirty_.push_back(v);
        for (int w : nbr_[v]) dirty_.push_back(w);
        continue;
      }
      if (!recheck(dirty_[next_dirty++])) return false;
    }
    return true;
  }

  // Re-examine w's exact-count constraint; may queue forced assignments.
  bool recheck(int w) {
    const int count = code_nbr_[w];
    const int free = free_nbr_[w];
    if (state_[w] == kUndecided) {
      const bool can_in = count <= in_target_ && in_target_ <= count + free;
      const bool can_out = count <= out_target_ && out_target_ <= count + free;
      if (!can_in && !can_out) return false;
      if (!can_in) pending_.emplace_back(w, kOut);
      else if (!can_out) pending_.emplace_back(w, kIn);
      return true;
    }
    const int target = state_[w] == kIn ? in_target_ : out_target_;
    if (count > target || count + free < target) return false;
    if (free > 0 && count == target) {
      for (int z : nbr_[w])
        if (state_[z] == kUndecided) pending_.emplace_back(z, kOut);
    } else if (free > 0 && count + free == target) {
      for (int z : nbr_[w])
        if (state_[z] == kUndecided) pending_.emplace_back(z, kIn);
    }
    return true;
  }

  void apply(int v, unsigned char value) {
    state_[v] = value;
    trail_.push_back(v);
    for (int w : nbr_[v]) {
      --free_nbr_[w];
      if (value == kIn) ++code_nbr_[w];
    }
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      const int v = trail_.back();
      trail_.pop_back();
      const bool was_in = state_[v] == kIn;
      state_[v] = kUndecided;
      for (int w : nbr_[v]) {
        ++free_nbr_[w];
        if (was_in) --code_nbr_[w];
      }
    }
  }

  void emit_solution() {
    code_set c(g_.n());
    for (int p = 0; p < total_; ++p)
      if (state_[p] == kIn) c.set(p);
    emit_(c);
  }

  const graph& g_;
  int in_target_;
  int out_target_;
  int total_;
  std::function<void(const code_set&)> emit_;
  std::vector<std::array<int, 3>> nbr_;
  std::vector<unsigned char> state_;
  std::vector<int> code_nbr_;
  std::vector<int> free_nbr_;
  std::vector<int> order_;
  std::vector<int> trail_;
  std::vector<std::pair<int, unsigned char>> pending_;
  std::vector<int> dirty_;
};

void require_ab_domain(int a, int b) {
  if (a != 0 && a != 1)
    throw precondition_violation("a must be 0 or 1, got " + std::to_string(a));
  if (b < 1 || b > 3)
    throw precondition_violation("b must be 1, 2 or 3, got " + std::to_string(b));
}

}  // namespace

std::vector<code_set> enumerate_codes(const graph& g, domination_mode mode) {
  const int a = mode == domination_mode::closed ? 0 : 1;
  std::vector<code_set> result;
  search_engine engine(g, a, 1, [&](const code_set& c) {
    const bool ok = mode == domination_mode::closed ? is_perfect_code(g, c)
                                                    : is_total_perfect_code(g, c);
    if (!ok) throw std::logic_error("enumerator emitted a set failing verification");
    result.push_back(c);
  });
  engine.run();
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<code_set> enumerate_ab_regular(const graph& g, int a, int b) {
  require_ab_domain(a, b);
  std::vector<code_set> result;
  search_engine engine(g, a, b, [&](const code_set& c) {
    if (!is_ab_regular(g, c, a, b))
      throw std::logic_error("enumerator emitted a set failing verification");
    result.push_back(c);
  });
  engine.run();
  std::sort(result.begin(), result.end());
  return result;
}

std::uint64_t count_codes(const graph& g, domination_mode mode) {
  const int a = mode == domination_mode::closed ? 0 : 1;
  std::uint64_t count = 0;
  search_engine engine(g, a, 1, [&](const code_set& c) {
    const bool ok = mode == domination_mode::closed ? is_perfect_code(g, c)
                                                    : is_total_perfect_code(g, c);
    if (!ok) throw std::logic_error("enumerator emitted a set failing verification");
    ++count;
  });
  engine.run();
  return count;
}

}  // namespace gpcodes
