#pragma once

// Per-instance comparison of the enumerated code lists against the predicted
// families, plus the counting invariants every code must satisfy. A mismatch
// is recorded in the report, never thrown: the harness exists to surface
// counterexamples legibly.

#include <string>
#include <tuple>
#include <vector>

#include "gpcodes/code_set.hpp"

namespace gpcodes {

enum class code_kind { perfect, total };

std::string to_string(code_kind kind);

struct invariant_check {
  std::string name;
  bool pass = false;
};

struct classification_report {
  int n = 0;
  int k = 0;
  code_kind kind = code_kind::perfect;
  std::vector<code_set> enumerated;  // canonical order
  std::vector<code_set> predicted;   // canonical order
  bool match = false;                // equal as sets of sets
  std::vector<invariant_check> invariants;

  bool all_invariants_pass() const;
};

classification_report classify_instance(int n, int k, code_kind kind);

struct sweep_options {
  int n_min = 3;
  int n_max = 3;
  bool perfect = true;
  bool total = true;
};

struct sweep_summary {
  sweep_options options;
  int instances = 0;
  std::vector<std::tuple<int, int, code_kind>> mismatches;  // (n, k, kind)
  int invariant_failures = 0;
  double wall_seconds = 0.0;

  bool clean() const { return mismatches.empty() && invariant_failures == 0; }
};

struct sweep_result {
  std::vector<classification_report> reports;  // ordered by (n, k, kind)
  sweep_summary summary;
};

// One report per (n, k in valid_steps(n), requested kind).
sweep_result sweep(const sweep_options& options);

}  // namespace gpcodes
