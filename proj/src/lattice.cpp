#include "cubespan/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace cubespan {

std::uint64_t point_cap_from_env() {
  const char* raw = std::getenv("CUBESPAN_MAX_POINTS");
  if (raw == nullptr || *raw == '\0') return kDefaultPointCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw std::invalid_argument(std::string("CUBESPAN_MAX_POINTS is not a positive integer: ") + raw);
  return v;
}

void LatticeSpec::validate() const {
  if (n == 0) throw std::invalid_argument("lattice dimension must be at least 1");
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].size() != n)
      throw std::invalid_argument("generator " + std::to_string(k) + " has " +
                                  std::to_string(generators[k].size()) + " entries, expected " +
                                  std::to_string(n));
}

bool QuotientGroup::is_trivial(std::size_t i) const {
  return std::binary_search(trivial_coordinates.begin(), trivial_coordinates.end(), i);
}

Rational QuotientGroup::coordinate(std::size_t i, const Residues& element) const {
  return group.pairing(element, projections.at(i));
}

RationalVector QuotientGroup::point(const Residues& element) const {
  RationalVector p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.push_back(coordinate(i, element));
  return p;
}

namespace {

std::int64_t to_int64(const Integer& v, const char* what) {
  if (!v.fits_slong_p()) throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  return v.get_si();
}

std::int64_t residue(const Integer& v, std::int64_t r) {
  Integer m;
  mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), Integer(static_cast<long>(r)).get_mpz_t());
  return m.get_si();
}

// Order of lambda + Z^n: the lcm of the coordinate denominators.
Integer generator_order(const RationalVector& g) {
  Integer ord = 1;
  for (const auto& x : g) {
    Integer d = x.denominator();
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), d.get_mpz_t());
  }
  return ord;
}

}  // namespace

QuotientGroup build_quotient(const LatticeSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;

  std::vector<RationalVector> reduced;
  for (const auto& g : spec.generators) {
    RationalVector r;
    r.reserve(n);
    for (const auto& x : g) r.push_back(x.frac());
    if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return !x.is_zero(); }))
      reduced.push_back(std::move(r));
  }

  QuotientGroup qg;
  qg.n = n;
  if (reduced.empty()) {
    qg.projections.assign(n, Residues{});
    qg.trivial_coordinates.resize(n);
    std::iota(qg.trivial_coordinates.begin(), qg.trivial_coordinates.end(), 0);
    return qg;
  }

  // Clear denominators: d * Lambda is generated by the columns of [d I | d g_1 ... d g_k].
  Integer d = 1;
  for (const auto& g : reduced) {
    Integer o = generator_order(g);
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), o.get_mpz_t());
  }
  const std::size_t k = reduced.size();
  IntegerMatrix m(n, n + k);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = d;
    for (std::size_t j = 0; j < k; ++j) {
      const Rational scaled = reduced[j][i] * Rational(d);
      m(i, n + j) = scaled.numerator();
    }
  }

  // U M V = diag(s). In the basis f_i = U^{-1} e_i, d*Lambda = sum s_i Z f_i and
  // d*Z^n = sum d Z f_i, so the quotient is sum Z/(d / s_i) generated by f_i / (d / s_i).
  const SnfDecomposition dec = snf(m);
  const RationalMatrix u_inv = inverse(to_rational(dec.U));

  std::vector<std::int64_t> factors;
  std::vector<std::size_t> basis_cols;
  for (std::size_t i = n; i-- > 0;) {  // s_1 | s_2 | ... so walk backwards for r_1 | r_2 | ...
    const Integer r = d / dec.D(i, i);
    if (r == 1) continue;
    factors.push_back(to_int64(r, "invariant factor"));
    basis_cols.push_back(i);
  }
  if (!factors.empty() && factors.back() > (std::int64_t{1} << 61))
    throw std::overflow_error("quotient group exponent is too large");
  qg.group = FiniteAbelianGroup(factors);

  qg.projections.assign(n, Residues(factors.size(), 0));
  // A cyclic quotient is presented by its first full-order input generator, so
  // element k is the k-th multiple of that generator.
  const RationalVector* cyclic_gen = nullptr;
  if (factors.size() == 1)
    for (const auto& g : reduced)
      if (generator_order(g) == factors[0]) {
        cyclic_gen = &g;
        break;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (cyclic_gen != nullptr) {
        const Rational scaled = (*cyclic_gen)[i] * Rational(Integer(static_cast<long>(factors[j])));
        qg.projections[i][j] = residue(scaled.numerator(), factors[j]);
      } else {
        const Rational& entry = u_inv(i, basis_cols[j]);
        qg.projections[i][j] = residue(entry.numerator(), factors[j]);
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    if (std::all_of(qg.projections[i].begin(), qg.projections[i].end(),
                    [](std::int64_t p) { return p == 0; }))
      qg.trivial_coordinates.push_back(i);
  return qg;
}

CubePoint make_point(const QuotientGroup& qg, const Residues& element) {
  if (!qg.group.contains(element)) throw std::invalid_argument("element is not in the quotient group");
  return {qg.point(element), element};
}

std::vector<CubePoint> cube_points(const QuotientGroup& qg, std::uint64_t cap) {
  if (qg.order() > cap)
    throw ResourceLimitError("quotient group has " + std::to_string(qg.order()) +
                             " elements, above the point cap of " + std::to_string(cap));
  std::vector<CubePoint> out;
  out.reserve(qg.order());
  for (std::size_t idx = 0; idx < qg.order(); ++idx) {
    Residues a = qg.group.element(idx);
    out.push_back({qg.point(a), std::move(a)});
  }
  return out;
}

CubePoint negate_point(const CubePoint& p, const QuotientGroup& qg) {
  return make_point(qg, qg.group.negate(p.element));
}

LatticeSpec simplex_dual_lattice(const std::vector<Vertex>& vertices) {
  const std::size_t n = vertices.size();
  if (n == 0) throw std::invalid_argument("simplex needs at least one vertex");
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i].size() != n - 1)
      throw std::invalid_argument("vertex " + std::to_string(i) + " must have " +
                                  std::to_string(n - 1) + " coordinates");
    for (std::size_t j = 0; j + 1 < n; ++j) a(i, j) = Rational(static_cast<long>(vertices[i][j]));
    a(i, n - 1) = 1;
  }
  if (determinant(a).is_zero()) throw DegenerateSimplexError("simplex is degenerate (det = 0)");
  // Rows of A^{-1} are the columns of A^{-T}: A^T g = e_k for the k-th one.
  const RationalMatrix inv = inverse(a);
  LatticeSpec spec;
  spec.n = n;
  for (std::size_t k = 0; k < n; ++k) {
    auto row = inv.row(k);
    spec.generators.emplace_back(row.begin(), row.end());
  }
  return spec;
}

std::vector<std::uint64_t> h_star(const std::vector<Vertex>& vertices, std::uint64_t cap) {
  const LatticeSpec spec = simplex_dual_lattice(vertices);
  const QuotientGroup qg = build_quotient(spec);
  std::vector<std::uint64_t> h(spec.n, 0);
  for (const auto& p : cube_points(qg, cap)) {
    Rational level;
    for (const auto& x : p.coords) level += x;
    if (!level.is_integer()) throw std::logic_error("box point with non-integral height");
    const Integer k = level.numerator();
    if (k < 0 || k >= static_cast<long>(spec.n)) throw std::logic_error("box point height out of range");
    ++h[k.get_ui()];
  }
  return h;
}

}  // namespace cubespan
