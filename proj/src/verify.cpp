#include "cubespan/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "cubespan/characters.hpp"
#include "cubespan/dirichlet.hpp"
#include "cubespan/span_analysis.hpp"

namespace cubespan {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string format_lattice(const LatticeSpec& spec) {
  std::string out = "n=" + std::to_string(spec.n) + " generators=[";
  for (std::size_t k = 0; k < spec.generators.size(); ++k) {
    if (k) out += ", ";
    out += "(";
    for (std::size_t i = 0; i < spec.generators[k].size(); ++i) {
      if (i) out += ", ";
      out += spec.generators[k][i].str();
    }
    out += ")";
  }
  return out + "]";
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void check(bool ok, const char* name, const std::string& params) {
    ++report_.cases;
    if (!ok) report_.failures.push_back({name, params});
  }

 private:
  VerifyReport& report_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

FunctionOnGroup random_function(Rng& rng, std::size_t size) {
  std::normal_distribution<double> normal;
  FunctionOnGroup f;
  f.values.reserve(size);
  for (std::size_t i = 0; i < size; ++i) f.values.emplace_back(normal(rng), normal(rng));
  return f;
}

std::string group_params(const FiniteAbelianGroup& g) { return "G=" + format_tuple(g.factors()); }

std::string ring_params(const RingR& ring, const TupleCharacter& chi, std::size_t index) {
  return "R=" + format_tuple(ring.factors()) + " chi#" + std::to_string(index) +
         " f=" + format_tuple(chi.conductor);
}

void check_group(const FiniteAbelianGroup& g, const CharsBounds& bounds, Rng& rng, Recorder& rec) {
  const std::string params = group_params(g);
  const std::size_t n = g.order();

  std::vector<FunctionOnGroup> values;
  for (const auto& chi : all_characters(g)) values.push_back(character_values(g, chi));
  bool orthonormal = values.size() == n;
  for (std::size_t i = 0; i < values.size() && orthonormal; ++i)
    for (std::size_t j = 0; j < values.size(); ++j)
      if (std::abs(inner_product(values[i], values[j]) - (i == j ? 1.0 : 0.0)) > 1e-10) {
        orthonormal = false;
        break;
      }
  rec.check(orthonormal, "character_orthonormality", params);

  rec.check(indicator_independence(g), "indicator_independence", params);
  const OddSpan span = odd_span(g);
  rec.check(span.rank == span.expected, "odd_span_rank",
            params + " rank=" + std::to_string(span.rank) + " expected=" + std::to_string(span.expected));

  bool odd = true;
  for (std::size_t a = 0; a < n && odd; ++a) {
    const auto s = s_function_exact(g.element(a), g);
    for (std::size_t phi = 0; phi < n; ++phi)
      if (!(s[phi] + s[g.index_of(g.negate(g.element(phi)))]).is_zero()) {
        odd = false;
        break;
      }
  }
  rec.check(odd, "s_function_oddness", params);

  if (static_cast<std::int64_t>(n) > bounds.poisson_max_order) return;
  for (const auto& k : all_subgroups(g)) {
    const std::string kparams = params + " K=" + format_tuple({k.elements().begin(), k.elements().end()});
    const Subgroup perp = annihilator(g, k);
    rec.check(k.size() * perp.size() == n && annihilator(g, perp) == k, "annihilator_duality", kparams);
    for (int s = 0; s < bounds.poisson_samples; ++s) {
      const auto f = random_function(rng, n);
      rec.check(poisson_check(f, k, g), "poisson", kparams + " sample=" + std::to_string(s));
    }
  }
}

void check_modulus(std::int64_t r, Recorder& rec) {
  const std::string params = "r=" + std::to_string(r);
  const auto chars = characters_mod(r);
  rec.check(static_cast<std::int64_t>(chars.size()) == euler_phi(r), "character_count", params);
  for (std::size_t idx = 0; idx < chars.size(); ++idx) {
    const auto& chi = chars[idx];
    const std::string cparams = params + " chi#" + std::to_string(idx);
    bool multiplicative = true;
    for (std::int64_t a = 0; a < r && multiplicative; ++a)
      for (std::int64_t b = 0; b < r; ++b) {
        const bool both = chi.supported(a) && chi.supported(b);
        if (both != chi.supported(a * b) ||
            (both && chi.angle(a * b) != (chi.angle(a) + chi.angle(b)).frac())) {
          multiplicative = false;
          break;
        }
      }
    rec.check(multiplicative, "multiplicativity", cparams);

    const PrimitiveData pd = conductor_and_primitive(chi);
    bool agrees = r % pd.conductor == 0;
    for (std::int64_t a = 0; a < r && agrees; ++a)
      if (chi.supported(a) && chi(a) != pd.primitive(a)) agrees = false;
    bool minimal = true;
    for (std::int64_t f : divisors(pd.conductor)) {
      if (f == pd.conductor) continue;
      bool witnessed = false;
      for (std::int64_t a = 1 % f; a < r && !witnessed; a += f)
        witnessed = std::gcd(a, r) == 1 && chi.angle(a) != Rational(0);
      minimal = minimal && witnessed;
    }
    rec.check(agrees && minimal, "conductor", cparams + " f=" + std::to_string(pd.conductor));
    if (pd.conductor == r) {
      const double mag2 = std::norm(gauss_sum(chi));
      rec.check(std::abs(mag2 - static_cast<double>(r)) < 1e-9, "gauss_sum_magnitude", cparams);
    }
  }
}

void check_ring(const RingR& ring, const DirichletBounds& bounds, Rng& rng, Recorder& rec) {
  const std::string params = "R=" + format_tuple(ring.factors());
  const BasisCount count = basis_count(ring);
  rec.check(count.odd_count == count.expected, "odd_basis_count",
            params + " count=" + std::to_string(count.odd_count) + " expected=" + std::to_string(count.expected));
  rec.check(count.s_rank == count.expected, "s_a_rank",
            params + " rank=" + std::to_string(count.s_rank) + " expected=" + std::to_string(count.expected));

  const auto chars = tuple_characters(ring);
  const auto units = ring.units();
  if (ring.order() <= 30) {
    const auto w = random_function(rng, ring.order());
    FunctionOnGroup total;
    total.values.assign(w.size(), ComplexValue{});
    for (const auto& chi : chars) {
      const auto part = eigen_project(ring, chi, w);
      for (std::size_t x = 0; x < w.size(); ++x) total[x] += part[x];
    }
    bool recovered = true;
    for (std::size_t x = 0; x < w.size(); ++x) recovered = recovered && std::abs(total[x] - w[x]) < 1e-9;
    rec.check(recovered, "eigen_decomposition", params);
  }

  for (std::size_t idx = 0; idx < chars.size(); ++idx) {
    const auto& chi = chars[idx];
    if (!chi.odd) continue;
    const std::string cparams = ring_params(ring, chi, idx);
    const VMatrixReport v = v_matrix_report(ring, chi);
    rec.check(v.zeros_ok, "v_matrix_zeros", cparams);
    rec.check(v.nonzeros_ok, "v_matrix_antidiagonal", cparams);
    rec.check(v.rank == v.size, "v_matrix_rank",
              cparams + " rank=" + std::to_string(v.rank) + " size=" + std::to_string(v.size));
    rec.check(w_independence_check(ring, chi), "w_independence", cparams);

    // With (c . f)(x) = f(cx), w_{chi,a} transforms by conj(chi(c)).
    bool eigen = true;
    for (const auto& w : w_functions(ring, chi, divisor_tuples(chi.q))) {
      for (const auto& c : units) {
        const auto moved = act(ring, c, w);
        const ComplexValue lambda = std::conj(chi(c));
        for (std::size_t x = 0; x < w.size(); ++x)
          if (std::abs(moved[x] - lambda * w[x]) > 1e-9) eigen = false;
      }
    }
    rec.check(eigen, "w_eigenfunction", cparams);

    if (ring.order() <= bounds.series_max_ring) {
      for (std::size_t ai = 0; ai < ring.order(); ++ai)
        for (std::size_t ci = 0; ci < ring.order(); ++ci) {
          const Residues a = ring.element(ai), c = ring.element(ci);
          const ComplexValue exact = w_chi(ring, chi, a, c);
          const ComplexValue series = series_w(ring, chi, a, c, bounds.series_terms);
          rec.check(std::abs(series - exact) < 1e-3, "series_w",
                    cparams + " a=" + format_tuple(a) + " c=" + format_tuple(c));
        }
    }
  }
}

}  // namespace

std::string format_tuple(const std::vector<std::int64_t>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

LatticeSpec random_lattice(Rng& rng, std::size_t max_n, std::uint64_t max_order) {
  if (max_n < 1 || max_order < 2) throw std::invalid_argument("random lattice bounds are too small");
  LatticeSpec spec;
  spec.n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_n)));
  const std::int64_t cap = static_cast<std::int64_t>(std::min<std::uint64_t>(max_order, 20));
  std::vector<std::int64_t> moduli{uniform(rng, 2, cap)};
  if (coin(rng, 0.5)) {
    const std::int64_t room = static_cast<std::int64_t>(max_order) / moduli[0];
    if (room >= 2) moduli.push_back(uniform(rng, 2, std::min<std::int64_t>(room, 20)));
  }
  for (auto r : moduli) {
    std::vector<std::int64_t> res(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
      const double u = std::uniform_real_distribution<double>(0, 1)(rng);
      const std::int64_t earlier = i ? res[uniform(rng, 0, static_cast<std::int64_t>(i) - 1)] : 0;
      if (u < 0.15) res[i] = 0;
      else if (i && u < 0.40) res[i] = (r - earlier) % r;
      else if (i && u < 0.60) res[i] = earlier * uniform(rng, 2, r) % r;
      else res[i] = uniform(rng, 0, r - 1);
    }
    RationalVector g;
    for (auto x : res) g.emplace_back(x, r);
    spec.generators.push_back(std::move(g));
  }
  return spec;
}

LatticeSpec random_paired_lattice(Rng& rng, std::int64_t max_r) {
  const std::int64_t r = uniform(rng, 2, max_r);
  std::vector<std::int64_t> res;
  const std::int64_t pairs = uniform(rng, 1, 3);
  for (std::int64_t p = 0; p < pairs; ++p) {
    const std::int64_t a = uniform(rng, 1, r - 1);
    res.push_back(a);
    res.push_back(r - a);
  }
  if (r % 2 == 0 && coin(rng, 0.3)) res.push_back(r / 2);
  std::shuffle(res.begin(), res.end(), rng);
  LatticeSpec spec;
  spec.n = res.size();
  RationalVector g;
  for (auto x : res) g.emplace_back(x, r);
  spec.generators.push_back(std::move(g));
  return spec;
}

LatticeSpec white_lattice(std::int64_t a, std::int64_t r) {
  return {3, {{Rational(a, r), Rational(r - a, r), Rational(1, r)}}};
}

std::vector<std::vector<std::int64_t>> ring_sweep(std::int64_t max_lcm) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t r = 2; r <= max_lcm; ++r) out.push_back({r});
  for (std::int64_t r1 = 2; r1 <= max_lcm; ++r1)
    for (std::int64_t r2 = r1; r2 <= max_lcm; ++r2)
      if (std::lcm(r1, r2) <= max_lcm) out.push_back({r1, r2});
  return out;
}

VerifyReport verify_chars(const CharsBounds& bounds) {
  if (bounds.max_order < 1) throw std::invalid_argument("--max-order must be positive");
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "chars";
  Recorder rec(report);
  Rng rng(bounds.seed);
  for (const auto& g : abelian_groups_up_to(bounds.max_order)) check_group(g, bounds, rng, rec);
  report.wall_seconds = seconds_since(start);
  return report;
}

VerifyReport verify_dirichlet(const DirichletBounds& bounds) {
  if (bounds.max_modulus < 1) throw std::invalid_argument("--max-modulus must be positive");
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "dirichlet";
  Recorder rec(report);
  Rng rng(bounds.seed);
  for (std::int64_t r = 1; r <= bounds.max_modulus; ++r) check_modulus(r, rec);
  for (const auto& factors : ring_sweep(bounds.max_modulus)) check_ring(RingR(factors), bounds, rng, rec);
  report.wall_seconds = seconds_since(start);
  return report;
}

VerifyReport verify_lattice(const LatticeBounds& bounds) {
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "lattice";
  Recorder rec(report);
  Rng rng(bounds.seed);

  for (std::size_t k = 0; k < bounds.instances; ++k) {
    const LatticeSpec spec = random_lattice(rng, bounds.max_n, bounds.max_order);
    const std::string params = "instance=" + std::to_string(k) + " " + format_lattice(spec);
    const QuotientGroup qg = build_quotient(spec);
    rec.check(verify_terminal_lemma(qg), "terminal_lemma", params);
    const IotaKappa ik = iota_kappa(coordinate_classes(qg));
    rec.check(ik.iota + ik.kappa == rational_rank(point_matrix(qg)), "dimension_formula", params);
    const SeboResult sebo = sebo_check(qg);
    rec.check(!sebo.holds || involution_pairs_generators(qg, *sebo.involution), "sebo_certificate", params);
  }

  for (std::size_t k = 0; k < bounds.paired_instances; ++k) {
    const LatticeSpec spec = random_paired_lattice(rng);
    const QuotientGroup qg = build_quotient(spec);
    const SeboResult sebo = sebo_check(qg);
    rec.check(sebo.holds && involution_pairs_generators(qg, *sebo.involution), "sebo_paired",
              "instance=" + std::to_string(k) + " " + format_lattice(spec));
  }

  for (std::int64_t r = 2; r <= bounds.white_max_r; ++r)
    for (std::int64_t a = 1; a < r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      const QuotientGroup qg = build_quotient(white_lattice(a, r));
      rec.check(cube_points(qg).size() == static_cast<std::size_t>(r), "white_point_count",
                "a=" + std::to_string(a) + " r=" + std::to_string(r));
    }

  report.wall_seconds = seconds_since(start);
  return report;
}

}  // namespace cubespan
