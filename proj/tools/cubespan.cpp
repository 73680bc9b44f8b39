// cubespan: command-line front end.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 bad input or usage.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "cubespan/lattice.hpp"
#include "cubespan/report.hpp"
#include "cubespan/span_analysis.hpp"
#include "cubespan/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

using namespace cubespan;

std::uint64_t resolve_cap(std::optional<std::uint64_t> flag) {
  if (flag) {
    if (*flag == 0) throw InputError("--max-points must be positive");
    return *flag;
  }
  return point_cap_from_env();
}

int cmd_analyze(const std::string& path, bool as_json, std::optional<std::uint64_t> max_points) {
  const SpanReport r = analyze(parse_lattice_json(read_file(path)), resolve_cap(max_points));
  std::cout << (as_json ? span_report_json(r) : span_report_text(r));
  return r.agreement() ? 0 : kExitFailure;
}

int cmd_sebo(const std::string& path, std::optional<std::uint64_t> max_points) {
  const QuotientGroup qg = build_quotient(parse_lattice_json(read_file(path)));
  const SeboResult result = sebo_check(qg, resolve_cap(max_points));
  std::cout << sebo_summary(qg, result) << "\n";
  if (result.witness) std::cout << "point = " << format_vector(result.witness->coords) << "\n";
  return result.holds ? 0 : kExitFailure;
}

int cmd_hstar(const std::string& path, std::optional<std::uint64_t> max_points) {
  const auto h = h_star(parse_simplex_json(read_file(path)), resolve_cap(max_points));
  std::uint64_t sum = 0;
  std::cout << "h* = (";
  for (std::size_t k = 0; k < h.size(); ++k) {
    std::cout << (k ? ", " : "") << h[k];
    sum += h[k];
  }
  std::cout << ")\nnormalized volume = " << sum << "\n";
  return 0;
}

int cmd_enumerate(const std::string& path, std::optional<std::uint64_t> max_points) {
  const QuotientGroup qg = build_quotient(parse_lattice_json(read_file(path)));
  for (const auto& p : cube_points(qg, resolve_cap(max_points)))
    std::cout << format_tuple(p.element) << " " << format_vector(p.coords) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice points in the unit cube, their linear span, and the character sums behind it"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  bool timing = false;
  std::optional<std::uint64_t> max_points;

  auto* analyze_cmd = app.add_subcommand("analyze", "Span dimension and vanishing functionals of a lattice");
  analyze_cmd->add_option("file", file, "Lattice JSON file")->required();
  analyze_cmd->add_flag("--json", as_json, "Emit a JSON report");
  analyze_cmd->add_option("--max-points", max_points, "Cap on enumerated cube points");

  auto* sebo_cmd = app.add_subcommand("sebo", "Check sum = |supp| / 2 on every cube point");
  sebo_cmd->add_option("file", file, "Lattice JSON file")->required();
  sebo_cmd->add_option("--max-points", max_points, "Cap on enumerated cube points");

  auto* hstar_cmd = app.add_subcommand("hstar", "h*-vector of a lattice simplex");
  hstar_cmd->add_option("file", file, "Simplex JSON file")->required();
  hstar_cmd->add_option("--max-points", max_points, "Cap on enumerated box points");

  auto* enum_cmd = app.add_subcommand("enumerate", "List the lattice points in [0,1)^n");
  enum_cmd->add_option("file", file, "Lattice JSON file")->required();
  enum_cmd->add_option("--max-points", max_points, "Cap on enumerated cube points");

  std::string suite;
  std::optional<std::int64_t> max_order, max_modulus;
  std::optional<std::size_t> instances, max_n;
  std::uint64_t seed = 42;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "chars | dirichlet | lattice")
      ->required()
      ->check(CLI::IsMember({"chars", "dirichlet", "lattice"}));
  verify_cmd->add_option("--max-order", max_order, "Largest group order (chars, lattice)");
  verify_cmd->add_option("--max-modulus", max_modulus, "Largest modulus / lcm of R (dirichlet)");
  verify_cmd->add_option("--instances", instances, "Random lattices (lattice)");
  verify_cmd->add_option("--max-n", max_n, "Largest dimension (lattice)");
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_flag("--json", as_json, "Emit a JSON report");
  verify_cmd->add_flag("--timing", timing, "Include wall time in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file, as_json, max_points);
    if (*sebo_cmd) return cmd_sebo(file, max_points);
    if (*hstar_cmd) return cmd_hstar(file, max_points);
    if (*enum_cmd) return cmd_enumerate(file, max_points);

    VerifyReport report;
    if (suite == "chars") {
      CharsBounds b;
      if (max_order) b.max_order = *max_order;
      if (b.max_order < 1 || b.max_order > 128) throw InputError("--max-order must be in [1, 128]");
      b.poisson_max_order = std::min(b.poisson_max_order, b.max_order);
      b.seed = seed;
      report = verify_chars(b);
    } else if (suite == "dirichlet") {
      DirichletBounds b;
      if (max_modulus) b.max_modulus = *max_modulus;
      if (b.max_modulus < 1 || b.max_modulus > 60) throw InputError("--max-modulus must be in [1, 60]");
      b.seed = seed;
      report = verify_dirichlet(b);
    } else {
      LatticeBounds b;
      if (instances) b.instances = *instances;
      if (max_n) b.max_n = *max_n;
      if (max_order && *max_order < 2) throw InputError("--max-order must be >= 2");
      if (max_order) b.max_order = static_cast<std::uint64_t>(*max_order);
      if (b.max_n < 1 || b.max_order < 2) throw InputError("--max-n must be >= 1 and --max-order >= 2");
      b.seed = seed;
      report = verify_lattice(b);
    }
    std::cout << (as_json ? verify_report_json(report, timing) : verify_report_text(report));
    return report.passed() ? 0 : kExitFailure;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << " (raise --max-points or CUBESPAN_MAX_POINTS)\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
