// gpcodes: construct, verify, enumerate and classify perfect and total
// perfect codes in generalized Petersen graphs GP(n,k).
//
// Exit codes: 0 success, 1 verification failure or classification mismatch,
// 2 usage or domain error. JSON goes to stdout, diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpcodes/classify.hpp"
#include "gpcodes/construct.hpp"
#include "gpcodes/dot.hpp"
#include "gpcodes/enumerate.hpp"
#include "gpcodes/verify.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json names_json(const gpcodes::code_set& c) {
  ordered_json names = ordered_json::array();
  for (gpcodes::vertex_id v : c.members()) names.push_back(gpcodes::to_string(v));
  return names;
}

ordered_json code_list_json(const std::vector<gpcodes::code_set>& codes) {
  ordered_json list = ordered_json::array();
  for (const auto& c : codes) list.push_back(names_json(c));
  return list;
}

int run_construct(int n, int k, const std::string& kind, int j,
                  const std::string& format) {
  gpcodes::validate_parameters(n, k);
  gpcodes::code_set code(n);
  if (kind == "perfect") {
    if (!gpcodes::perfect_code_exists(n, k)) {
      std::cerr << "no perfect code in GP(" << n << "," << k
                << "): requires n divisible by 4 and k odd\n";
      return 2;
    }
    code = gpcodes::make_perfect_code(n, j);
  } else if (kind == "total-a") {
    if (n % 3 != 0 || k % 3 == 0) {
      std::cerr << "no type-A total perfect code in GP(" << n << "," << k
                << "): requires n divisible by 3 and k not divisible by 3\n";
      return 2;
    }
    code = gpcodes::make_total_code_a(n, j);
  } else {
    if (n % 6 != 0 || (k % 6 != 1 && k % 6 != 5)) {
      std::cerr << "no type-B total perfect code in GP(" << n << "," << k
                << "): requires n divisible by 6 and k == ±1 (mod 6)\n";
      return 2;
    }
    code = gpcodes::make_total_code_b(n, j);
  }

  if (format == "json") {
    ordered_json out = {{"n", n}, {"k", k}, {"kind", kind}, {"j", j},
                        {"vertices", names_json(code)}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "dot") {
    gpcodes::write_dot(std::cout, gpcodes::graph(n, k), &code);
  } else {
    std::cout << code.to_names() << "\n";
  }
  return 0;
}

int run_verify(int n, int k, const std::string& code_text, const std::string& kind) {
  const gpcodes::graph g(n, k);
  const gpcodes::code_set code = gpcodes::code_set::parse(n, code_text);
  bool ok;
  std::string label;
  if (kind == "perfect") {
    ok = gpcodes::is_perfect_code(g, code);
    label = "perfect code";
  } else {
    ok = gpcodes::is_total_perfect_code(g, code);
    label = "total perfect code";
  }
  std::cout << label << ": " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int run_enumerate(int n, int k, const std::string& mode_text, bool count_only,
                  const std::string& format) {
  const gpcodes::graph g(n, k);
  const auto mode = mode_text == "perfect" ? gpcodes::domination_mode::closed
                                           : gpcodes::domination_mode::open;
  if (count_only) {
    const std::uint64_t count = gpcodes::count_codes(g, mode);
    if (format == "json") {
      ordered_json out = {{"n", n}, {"k", k}, {"mode", mode_text}, {"count", count}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << count << "\n";
    }
    return 0;
  }
  const auto codes = gpcodes::enumerate_codes(g, mode);
  if (format == "json") {
    ordered_json out = {{"n", n}, {"k", k}, {"mode", mode_text},
                        {"count", codes.size()}, {"codes", code_list_json(codes)}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : codes) std::cout << c.to_names() << "\n";
  }
  return 0;
}

ordered_json report_json(const gpcodes::classification_report& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& check : rep.invariants)
    checks.push_back({{"name", check.name}, {"pass", check.pass}});
  return {{"n", rep.n},
          {"k", rep.k},
          {"kind", gpcodes::to_string(rep.kind)},
          {"verdict", rep.match ? "match" : "mismatch"},
          {"enumerated", code_list_json(rep.enumerated)},
          {"predicted", code_list_json(rep.predicted)},
          {"invariants", checks}};
}

int run_classify(int n_min, int n_max, const std::string& kind,
                 const std::string& report_path) {
  gpcodes::sweep_options options;
  options.n_min = n_min;
  options.n_max = n_max;
  options.perfect = kind == "perfect" || kind == "both";
  options.total = kind == "total" || kind == "both";
  const gpcodes::sweep_result result = gpcodes::sweep(options);

  ordered_json reports = ordered_json::array();
  for (const auto& rep : result.reports) reports.push_back(report_json(rep));
  if (report_path.empty()) {
    std::cout << reports.dump(2) << "\n";
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to " << report_path << "\n";
      return 2;
    }
    out << reports.dump(2) << "\n";
  }

  const auto& summary = result.summary;
  std::cerr << "classified " << summary.instances << " instances, n in ["
            << n_min << ", " << n_max << "], kind " << kind << "\n";
  for (const auto& [n, k, mk] : summary.mismatches)
    std::cerr << "mismatch: GP(" << n << "," << k << ") " << gpcodes::to_string(mk)
              << "\n";
  std::cerr << "mismatches: " << summary.mismatches.size()
            << ", invariant failures: " << summary.invariant_failures << ", wall: "
            << summary.wall_seconds << "s\n";
  return summary.clean() ? 0 : 1;
}

int run_export_dot(int n, int k, const std::string& code_text) {
  const gpcodes::graph g(n, k);
  if (code_text.empty()) {
    gpcodes::write_dot(std::cout, g);
  } else {
    const gpcodes::code_set code = gpcodes::code_set::parse(n, code_text);
    gpcodes::write_dot(std::cout, g, &code);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfect and total perfect codes in generalized Petersen graphs"};
  app.require_subcommand(1);

  int n = 0, k = 0, j = 0, n_min = 3, n_max = 3;
  std::string kind, mode, format = "plain", code_text, report_path;
  bool count_only = false;

  auto* construct = app.add_subcommand("construct", "emit one member of a code family");
  construct->add_option("--n", n)->required();
  construct->add_option("--k", k)->required();
  construct->add_option("--kind", kind)->required()
      ->check(CLI::IsMember({"perfect", "total-a", "total-b"}));
  construct->add_option("--j", j, "shift within the family")->required();
  construct->add_option("--format", format)->check(CLI::IsMember({"json", "plain", "dot"}));

  auto* verify = app.add_subcommand("verify", "check a vertex set against a code definition");
  verify->add_option("--n", n)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--code", code_text, "comma-separated vertex names")->required();
  verify->add_option("--kind", kind)->required()->check(CLI::IsMember({"perfect", "total"}));

  auto* enumerate = app.add_subcommand("enumerate", "list all codes of a graph");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--mode", mode)->required()->check(CLI::IsMember({"perfect", "total"}));
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));

  auto* classify = app.add_subcommand("classify", "sweep (n,k) and compare against predictions");
  classify->add_option("--n-min", n_min)->required();
  classify->add_option("--n-max", n_max)->required();
  classify->add_option("--kind", kind)->default_val("both")
      ->check(CLI::IsMember({"perfect", "total", "both"}));
  classify->add_option("--report", report_path, "write the JSON report here");

  auto* export_dot = app.add_subcommand("export-dot", "emit the graph as DOT");
  export_dot->add_option("--n", n)->required();
  export_dot->add_option("--k", k)->required();
  export_dot->add_option("--code", code_text, "vertices to mark");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) return run_construct(n, k, kind, j, format);
    if (*verify) return run_verify(n, k, code_text, kind);
    if (*enumerate) return run_enumerate(n, k, mode, count_only, format);
    if (*classify) return run_classify(n_min, n_max, kind, report_path);
    if (*export_dot) return run_export_dot(n, k, code_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
