#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "cubespan/characters.hpp"
#include "cubespan/dirichlet.hpp"
#include "cubespan/report.hpp"

namespace py = pybind11;
using namespace cubespan;

namespace {

std::vector<std::string> strings(const RationalVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lattice points in the unit cube, characters and Dirichlet checks";
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  m.attr("DEFAULT_POINT_CAP") = kDefaultPointCap;

  m.def("analyze", [](const std::string& text, std::uint64_t cap) {
    return span_report_json(analyze(parse_lattice_json(text), cap));
  }, py::arg("lattice_json"), py::arg("max_points") = kDefaultPointCap,
     "Span report for a lattice given as JSON text; returns JSON text.");

  m.def("cube_points", [](const std::string& text, std::uint64_t cap) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : cube_points(build_quotient(parse_lattice_json(text)), cap)) out.push_back(strings(p.coords));
    return out;
  }, py::arg("lattice_json"), py::arg("max_points") = kDefaultPointCap);

  m.def("invariant_factors", [](const std::string& text) {
    return build_quotient(parse_lattice_json(text)).factors();
  }, py::arg("lattice_json"));

  m.def("sebo", [](const std::string& text) {
    const auto qg = build_quotient(parse_lattice_json(text));
    const auto r = sebo_check(qg);
    return py::make_tuple(r.holds, sebo_summary(qg, r));
  }, py::arg("lattice_json"), "(holds, summary) for the box-point balance condition.");

  m.def("h_star", [](const std::string& text) { return h_star(parse_simplex_json(text)); },
        py::arg("simplex_json"));

  m.def("b1", [](const std::string& x) { return b1(Rational::parse(x)).str(); }, py::arg("x"));

  m.def("indicator_independence", [](std::vector<std::int64_t> factors) {
    return indicator_independence(FiniteAbelianGroup(std::move(factors)));
  }, py::arg("factors"));

  m.def("odd_span", [](std::vector<std::int64_t> factors) {
    const auto r = odd_span(FiniteAbelianGroup(std::move(factors)));
    return py::make_tuple(r.rank, r.expected);
  }, py::arg("factors"), "(rank, expected) for the S_g functions.");

  m.def("basis_count", [](std::vector<std::int64_t> factors) {
    const auto c = basis_count(RingR(std::move(factors)));
    return py::make_tuple(c.odd_count, c.expected, c.s_rank);
  }, py::arg("factors"));

  m.def("gauss_sums", [](std::int64_t modulus) {
    std::vector<std::pair<std::int64_t, std::complex<double>>> out;
    for (const auto& chi : characters_mod(modulus)) {
      const auto p = conductor_and_primitive(chi);
      out.emplace_back(p.conductor, gauss_sum(p.primitive));
    }
    return out;
  }, py::arg("modulus"), "(conductor, Gauss sum of the primitive character) per character mod r.");

  m.def("verify_chars", [](std::int64_t max_order, std::uint64_t seed) {
    CharsBounds b;
    b.max_order = max_order;
    b.poisson_max_order = std::min<std::int64_t>(b.poisson_max_order, max_order);
    b.seed = seed;
    return verify_report_json(verify_chars(b), false);
  }, py::arg("max_order") = 36, py::arg("seed") = 42);

  m.def("verify_dirichlet", [](std::int64_t max_modulus, std::uint64_t seed) {
    DirichletBounds b;
    b.max_modulus = max_modulus;
    b.seed = seed;
    return verify_report_json(verify_dirichlet(b), false);
  }, py::arg("max_modulus") = 30, py::arg("seed") = 42);

  m.def("verify_lattice", [](std::size_t instances, std::size_t max_n, std::uint64_t max_order, std::uint64_t seed) {
    LatticeBounds b;
    b.instances = instances;
    b.max_n = max_n;
    b.max_order = max_order;
    b.seed = seed;
    return verify_report_json(verify_lattice(b), false);
  }, py::arg("instances") = 200, py::arg("max_n") = 6, py::arg("max_order") = 200, py::arg("seed") = 42);
}
