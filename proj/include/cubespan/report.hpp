#pragma once

// Input parsing and report rendering shared by the command-line tool and the
// Python module. Rationals are written as "p/q" strings.

#include <stdexcept>
#include <string>
#include <vector>

#include "cubespan/lattice.hpp"
#include "cubespan/span_analysis.hpp"
#include "cubespan/verify.hpp"

namespace cubespan {

/// Malformed input: bad JSON or a schema violation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"n": int, "generators": [["p/q" or int, ...], ...]}
LatticeSpec parse_lattice_json(const std::string& text);
/// {"vertices": [[int, ...], ...]}
std::vector<Vertex> parse_simplex_json(const std::string& text);
std::string read_file(const std::string& path);

struct SpanReport {
  std::vector<std::int64_t> factors;
  std::uint64_t order = 0;
  std::size_t n = 0;
  std::uint64_t point_count = 0;
  std::vector<std::size_t> trivial_coordinates;
  CoordClasses classes;
  IotaKappa iota_kappa;
  std::size_t dim_formula = 0;
  std::size_t dim_bruteforce = 0;
  std::vector<RationalVector> vanishing_basis;
  bool subspace_equal = false;
  SeboResult sebo;
  std::string sebo_summary;

  bool agreement() const { return dim_formula == dim_bruteforce && subspace_equal; }
};

SpanReport analyze(const LatticeSpec& spec, std::uint64_t cap = kDefaultPointCap);

/// "holds; sigma = (1 2)(3 4)", "fails; witness k=1" for a cyclic quotient, or
/// "fails; witness element=(..)" otherwise.
std::string sebo_summary(const QuotientGroup& qg, const SeboResult& result);

std::string span_report_json(const SpanReport& report);
std::string span_report_text(const SpanReport& report);

std::string verify_report_json(const VerifyReport& report, bool timing);
std::string verify_report_text(const VerifyReport& report);

std::string format_vector(const RationalVector& v);

}  // namespace cubespan
