#include "gpcodes/code_set.hpp"

#include <algorithm>

namespace gpcodes {

code_set::code_set(int n) : n_(n), bits_(static_cast<std::size_t>(2 * n)) {
  if (n < 3)
    throw invalid_parameters("code set width requires n >= 3, got " + std::to_string(n));
}

namespace {

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  return text;
}

}  // namespace

code_set code_set::parse(int n, std::string_view names) {
  code_set result(n);
  if (trimmed(names).empty()) return result;
  std::size_t start = 0;
  while (start <= names.size()) {
    std::size_t end = names.find(',', start);
    if (end == std::string_view::npos) end = names.size();
    const std::string_view token = trimmed(names.substr(start, end - start));
    if (token.empty()) throw parse_error("empty vertex name in code list");
    result.insert(parse_vertex(token, n));
    if (end == names.size()) break;
    start = end + 1;
  }
  return result;
}

int code_set::position(vertex_id v) const {
  if (v.index < 0 || v.index >= n_)
    throw precondition_violation("vertex index " + std::to_string(v.index) +
                                 " out of range for n=" + std::to_string(n_));
  return v.side == vertex_side::outer ? v.index : n_ + v.index;
}

bool code_set::test(int position) const {
  return bits_.test(static_cast<std::size_t>(position));
}

void code_set::set(int position, bool value) {
  bits_.set(static_cast<std::size_t>(position), value);
}

std::vector<vertex_id> code_set::members() const {
  std::vector<vertex_id> result;
  result.reserve(bits_.count());
  for (std::size_t p = bits_.find_first(); p != bit_row::npos; p = bits_.find_next(p)) {
    const int pos = static_cast<int>(p);
    result.push_back(pos < n_ ? vertex_id{vertex_side::outer, pos}
                              : vertex_id{vertex_side::inner, pos - n_});
  }
  return result;
}

std::string code_set::to_names() const {
  std::string result;
  for (vertex_id v : members()) {
    if (!result.empty()) result += ',';
    result += to_string(v);
  }
  return result;
}

int code_set::outer_count() const {
  int count = 0;
  for (std::size_t p = bits_.find_first(); p != bit_row::npos && p < static_cast<std::size_t>(n_);
       p = bits_.find_next(p))
    ++count;
  return count;
}

int code_set::inner_count() const { return size() - outer_count(); }

code_set code_set::rotated(int shift) const {
  code_set result(n_);
  const int s = ((shift % n_) + n_) % n_;
  for (std::size_t p = bits_.find_first(); p != bit_row::npos; p = bits_.find_next(p)) {
    const int pos = static_cast<int>(p);
    const int base = pos < n_ ? 0 : n_;
    result.set(base + (pos - base + s) % n_);
  }
  return result;
}

void require_same_width(const graph& g, const code_set& c) {
  if (c.width() != g.vertex_count())
    throw width_mismatch("code set width " + std::to_string(c.width()) +
                         " does not match graph on " +
                         std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace gpcodes
