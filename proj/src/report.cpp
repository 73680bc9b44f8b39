#include "cubespan/report.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cubespan {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

const json& require_field(const json& doc, const char* key) {
  if (!doc.is_object()) throw InputError("top level: expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

Rational parse_rational_value(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected a rational string \"p/q\" or an integer");
}

ordered_json to_json(const RationalVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

ordered_json one_based(const std::vector<std::vector<std::size_t>>& classes) {
  ordered_json out = ordered_json::array();
  for (const auto& cls : classes) {
    ordered_json c = ordered_json::array();
    for (auto i : cls) c.push_back(i + 1);
    out.push_back(std::move(c));
  }
  return out;
}

std::string one_based_classes_text(const std::vector<std::vector<std::size_t>>& classes) {
  std::string out;
  for (const auto& cls : classes) {
    out += out.empty() ? "{" : " {";
    for (std::size_t k = 0; k < cls.size(); ++k) out += (k ? "," : "") + std::to_string(cls[k] + 1);
    out += "}";
  }
  return out.empty() ? "none" : out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

LatticeSpec parse_lattice_json(const std::string& text) {
  const json doc = parse_document(text);
  const json& n = require_field(doc, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1)
    throw InputError("field \"n\": expected a positive integer");
  const json& gens = require_field(doc, "generators");
  if (!gens.is_array()) throw InputError("field \"generators\": expected an array of vectors");
  LatticeSpec spec;
  spec.n = n.get<std::size_t>();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string where = "generators[" + std::to_string(k) + "]";
    if (!gens[k].is_array()) throw InputError(where + ": expected an array");
    if (gens[k].size() != spec.n)
      throw InputError(where + ": has " + std::to_string(gens[k].size()) + " entries, expected " +
                       std::to_string(spec.n));
    RationalVector g;
    for (std::size_t i = 0; i < gens[k].size(); ++i)
      g.push_back(parse_rational_value(gens[k][i], where + "[" + std::to_string(i) + "]"));
    spec.generators.push_back(std::move(g));
  }
  return spec;
}

std::vector<Vertex> parse_simplex_json(const std::string& text) {
  const json doc = parse_document(text);
  const json& verts = require_field(doc, "vertices");
  if (!verts.is_array() || verts.empty()) throw InputError("field \"vertices\": expected a non-empty array");
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    const std::string where = "vertices[" + std::to_string(k) + "]";
    if (!verts[k].is_array()) throw InputError(where + ": expected an array of integers");
    Vertex v;
    for (std::size_t i = 0; i < verts[k].size(); ++i) {
      if (!verts[k][i].is_number_integer())
        throw InputError(where + "[" + std::to_string(i) + "]: expected an integer");
      v.push_back(verts[k][i].get<std::int64_t>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string sebo_summary(const QuotientGroup& qg, const SeboResult& result) {
  if (result.holds) return "holds; sigma = " + cycle_notation(*result.involution);
  const auto& w = *result.witness;
  if (qg.group.rank() == 1) return "fails; witness k=" + std::to_string(w.element[0]);
  return "fails; witness element=" + format_tuple(w.element);
}

SpanReport analyze(const LatticeSpec& spec, std::uint64_t cap) {
  const QuotientGroup qg = build_quotient(spec);
  SpanReport r;
  r.factors = qg.factors();
  r.order = qg.order();
  r.n = qg.n;
  r.point_count = cube_points(qg, cap).size();
  r.trivial_coordinates = qg.trivial_coordinates;
  r.classes = coordinate_classes(qg, cap);
  r.iota_kappa = iota_kappa(r.classes);
  r.dim_formula = r.iota_kappa.iota + r.iota_kappa.kappa;
  r.dim_bruteforce = rational_rank(point_matrix(qg, cap));
  r.vanishing_basis = vanishing_functionals(qg, VanishingMethod::Formula, cap);
  r.subspace_equal =
      same_span(r.vanishing_basis, vanishing_functionals(qg, VanishingMethod::BruteForce, cap), qg.n);
  r.sebo = sebo_check(qg, cap);
  r.sebo_summary = sebo_summary(qg, r.sebo);
  return r;
}

std::string format_vector(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

std::string span_report_json(const SpanReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["factors"] = r.factors;
  j["order"] = r.order;
  j["point_count"] = r.point_count;
  ordered_json trivial = ordered_json::array();
  for (auto i : r.trivial_coordinates) trivial.push_back(i + 1);
  j["trivial_coordinates"] = trivial;
  j["iota"] = r.iota_kappa.iota;
  j["kappa"] = r.iota_kappa.kappa;
  j["i_classes"] = one_based(r.classes.i_classes);
  j["k_classes"] = one_based(r.classes.k_classes);
  j["dim_formula"] = r.dim_formula;
  j["dim_bruteforce"] = r.dim_bruteforce;
  ordered_json basis = ordered_json::array();
  for (const auto& v : r.vanishing_basis) basis.push_back(to_json(v));
  j["vanishing_basis"] = basis;
  j["subspace_equal"] = r.subspace_equal;
  j["agreement"] = r.agreement();
  ordered_json sebo;
  sebo["holds"] = r.sebo.holds;
  if (r.sebo.involution) {
    ordered_json sigma = ordered_json::array();
    for (auto i : *r.sebo.involution) sigma.push_back(i + 1);
    sebo["sigma"] = sigma;
    sebo["cycles"] = cycle_notation(*r.sebo.involution);
  } else {
    sebo["sigma"] = nullptr;
  }
  if (r.sebo.witness) {
    sebo["witness"] = {{"element", r.sebo.witness->element}, {"point", to_json(r.sebo.witness->coords)}};
  } else {
    sebo["witness"] = nullptr;
  }
  sebo["summary"] = r.sebo_summary;
  j["sebo"] = sebo;
  return j.dump(2) + "\n";
}

std::string span_report_text(const SpanReport& r) {
  std::ostringstream out;
  out << "quotient group: Z/" << (r.factors.empty() ? std::string("1") : "");
  for (std::size_t k = 0; k < r.factors.size(); ++k) out << (k ? " + Z/" : "") << r.factors[k];
  out << " (order " << r.order << ")\n";
  out << "cube points: " << r.point_count << "\n";
  out << "I-classes: " << one_based_classes_text(r.classes.i_classes) << "\n";
  out << "K-classes: " << one_based_classes_text(r.classes.k_classes) << "\n";
  out << "iota = " << r.iota_kappa.iota << ", kappa = " << r.iota_kappa.kappa << "\n";
  out << "span dimension: formula " << r.dim_formula << ", brute force " << r.dim_bruteforce << "\n";
  out << "vanishing functionals (" << r.vanishing_basis.size() << "):\n";
  for (const auto& v : r.vanishing_basis) out << "  " << format_vector(v) << "\n";
  out << "subspaces agree: " << (r.subspace_equal ? "yes" : "no") << "\n";
  out << "sebo: " << r.sebo_summary << "\n";
  return out.str();
}

std::string verify_report_json(const VerifyReport& report, bool timing) {
  ordered_json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  j["cases"] = report.cases;
  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures) failures.push_back({{"check", f.check}, {"params", f.params}});
  j["failures"] = failures;
  if (timing) j["wall_seconds"] = report.wall_seconds;
  return j.dump(2) + "\n";
}

std::string verify_report_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << ": " << (report.passed() ? "pass" : "FAIL") << ", " << report.cases
      << " cases, " << report.failures.size() << " failures";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", report.wall_seconds);
  out << ", " << buf << " s\n";
  for (const auto& f : report.failures) out << "  " << f.check << ": " << f.params << "\n";
  return out.str();
}

}  // namespace cubespan
