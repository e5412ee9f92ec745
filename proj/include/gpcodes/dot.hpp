#pragma once

#include <iosfwd>
#include <string>

#include "gpcodes/code_set.hpp"
#include "gpcodes/graph.hpp"

namespace gpcodes {

// DOT text for g: one node statement per vertex, one edge statement per edge.
// Vertices in `code` are filled black, the rest white.
void write_dot(std::ostream& out, const graph& g, const code_set* code = nullptr);
std::string to_dot(const graph& g, const code_set* code = nullptr);

}  // namespace gpcodes
