#include "gpcodes/dot.hpp"

#include <ostream>
#include <sstream>

namespace gpcodes {

void write_dot(std::ostream& out, const graph& g, const code_set* code) {
  if (code) require_same_width(g, *code);
  out << "graph \"GP(" << g.n() << "," << g.k() << ")\" {\n";
  for (int p = 0; p < g.vertex_count(); ++p) {
    const bool marked = code && code->test(p);
    out << "  " << to_string(g.vertex_at(p))
        << (marked ? " [style=filled fillcolor=black fontcolor=white];\n"
                   : " [style=filled fillcolor=white];\n");
  }
  for (const auto& [a, b] : g.edges())
    out << "  " << to_string(a) << " -- " << to_string(b) << ";\n";
  out << "}\n";
}

std::string to_dot(const graph& g, const code_set* code) {
  std::ostringstream out;
  write_dot(out, g, code);
  return out.str();
}

}  // namespace gpcodes
