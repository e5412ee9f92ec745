#pragma once

#include <stdexcept>

namespace gpcodes {

// Rejected (n, k, j, ...) parameters: outside the domain the library accepts.
struct invalid_parameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// 2k == 0 (mod n): the inner rim collapses and vertices fall below degree 3.
// Kept distinct from plain invalid_parameters so callers can tell the two apart.
struct degenerate_inner_structure : invalid_parameters {
  using invalid_parameters::invalid_parameters;
};

// A code set was checked against a graph of a different order.
struct width_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input (vertex names, code lists).
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition was violated by the caller. Distinct from a
// check that ran and came back negative.
struct precondition_violation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gpcodes
