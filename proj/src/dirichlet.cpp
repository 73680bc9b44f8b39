#include "cubespan/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace cubespan {

namespace {

std::int64_t floor_mod(std::int64_t n, std::int64_t r) {
  const std::int64_t m = n % r;
  return m < 0 ? m + r : m;
}

std::int64_t pow_mod(std::int64_t g, std::int64_t e, std::int64_t r) {
  std::int64_t out = 1 % r;
  for (std::int64_t i = 0; i < e; ++i) out = out * g % r;
  return out;
}

std::int64_t multiplicative_order(std::int64_t g, std::int64_t r) {
  std::int64_t x = g % r, k = 1;
  while (x != 1 % r) {
    x = x * g % r;
    ++k;
  }
  return k;
}

struct UnitGenerator {
  std::int64_t value;  // residue mod the full modulus
  std::int64_t order;
};

// x = g mod pk, x = 1 mod rest (rest coprime to pk).
std::int64_t crt_lift(std::int64_t g, std::int64_t pk, std::int64_t rest) {
  for (std::int64_t t = 0; t < rest; ++t) {
    const std::int64_t x = floor_mod(g, pk) + pk * t;
    if (x % rest == 1 % rest) return x;
  }
  throw std::logic_error("CRT lift failed");
}

std::vector<UnitGenerator> unit_generators(std::int64_t r) {
  std::vector<UnitGenerator> gens;
  for (auto [p, e] : factorize(r)) {
    std::int64_t pk = 1;
    for (int i = 0; i < e; ++i) pk *= p;
    const std::int64_t rest = r / pk;
    if (p == 2) {
      if (e == 2) gens.push_back({crt_lift(3, pk, rest), 2});
      if (e >= 3) {
        gens.push_back({crt_lift(-1, pk, rest), 2});
        gens.push_back({crt_lift(5, pk, rest), pk / 4});
      }
      continue;
    }
    const std::int64_t phi = euler_phi(pk);
    std::int64_t g = 2;
    while (g % p == 0 || multiplicative_order(g, pk) != phi) ++g;
    gens.push_back({crt_lift(g, pk, rest), phi});
  }
  return gens;
}

std::int64_t lcm_of(const std::vector<std::int64_t>& v) {
  std::int64_t l = 1;
  for (auto x : v) l = std::lcm(l, x);
  return l;
}

// Index of the product a * c in R, without materialising the tuple.
std::size_t product_index(const std::vector<std::int64_t>& r, const Residues& a, const Residues& c) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    idx = idx * static_cast<std::size_t>(r[i]) + static_cast<std::size_t>(floor_mod(a[i] * c[i], r[i]));
  return idx;
}

// Steps x to the next element in mixed-radix order (wrapping to zero).
void advance(Residues& x, const std::vector<std::int64_t>& r) {
  for (std::size_t i = r.size(); i-- > 0;) {
    if (++x[i] < r[i]) return;
    x[i] = 0;
  }
}

// w_{chi,a}(c) = g(ac) with g(x) = sum_{b in R^x} chi(b) B1(sum x_i b_i / r_i), so g is
// tabulated once per character.
class WEvaluator {
 public:
  WEvaluator(const RingR& ring, const TupleCharacter& chi) : r_(ring.factors()) {
    const std::int64_t l = lcm_of(r_);
    std::vector<double> b1_at(static_cast<std::size_t>(l));  // B1(t / l)
    for (std::int64_t t = 1; t < l; ++t) b1_at[t] = static_cast<double>(t) / static_cast<double>(l) - 0.5;
    g_.assign(ring.order(), ComplexValue{});
    const std::size_t m = r_.size();
    for (const auto& b : ring.units()) {
      const ComplexValue weight = chi(b);
      // Walking x in mixed-radix order, each digit that moves (up by one, or
      // wrapping to zero) shifts t by b_i l / r_i modulo l.
      std::vector<std::int64_t> step(m);
      for (std::size_t i = 0; i < m; ++i) step[i] = b[i] * (l / r_[i]) % l;
      Residues x(m, 0);
      std::int64_t t = 0;
      for (std::size_t idx = 0; idx < g_.size(); ++idx) {
        g_[idx] += weight * b1_at[t];
        for (std::size_t i = m; i-- > 0;) {
          t += step[i];
          if (t >= l) t -= l;
          if (++x[i] < r_[i]) break;
          x[i] = 0;
        }
      }
    }
  }

  ComplexValue operator()(const Residues& a, const Residues& c) const { return g_[product_index(r_, a, c)]; }

 private:
  std::vector<std::int64_t> r_;
  std::vector<ComplexValue> g_;
};

}  // namespace

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::int64_t denominator,
                                       std::vector<std::int64_t> angles)
    : modulus_(modulus), denominator_(denominator), angles_(std::move(angles)) {
  if (modulus_ < 1) throw std::invalid_argument("modulus must be positive");
  if (denominator_ < 1) throw std::invalid_argument("angle denominator must be positive");
  if (angles_.size() != static_cast<std::size_t>(modulus_))
    throw std::invalid_argument("expected one angle per residue class");
  for (std::int64_t n = 0; n < modulus_; ++n) {
    const bool unit = std::gcd(n, modulus_) == 1;
    if (unit != (angles_[n] >= 0) || angles_[n] >= denominator_)
      throw std::invalid_argument("angle table does not match the unit residues");
  }
}

std::size_t DirichletCharacter::reduce(std::int64_t n) const {
  return static_cast<std::size_t>(floor_mod(n, modulus_));
}

Rational DirichletCharacter::angle(std::int64_t n) const {
  const std::int64_t a = angles_[reduce(n)];
  if (a < 0) throw std::domain_error("character is zero at " + std::to_string(n));
  return Rational(a, denominator_);
}

ComplexValue DirichletCharacter::operator()(std::int64_t n) const {
  const std::int64_t a = angles_[reduce(n)];
  return a < 0 ? ComplexValue{} : unit_root(a, denominator_);
}

bool DirichletCharacter::is_principal() const {
  return std::all_of(angles_.begin(), angles_.end(), [](std::int64_t a) { return a <= 0; });
}

std::vector<DirichletCharacter> characters_mod(std::int64_t r) {
  if (r < 1) throw std::invalid_argument("modulus must be positive");
  const auto gens = unit_generators(r);
  const std::int64_t n = euler_phi(r);
  std::vector<std::int64_t> orders;
  for (const auto& g : gens) orders.push_back(g.order);

  // Discrete logs of every unit with respect to the generators.
  std::vector<Residues> dlog(static_cast<std::size_t>(r));
  for (std::size_t idx = 0; idx < static_cast<std::size_t>(n); ++idx) {
    Residues e = mixed_radix::element_at(orders, idx);
    std::int64_t u = 1 % r;
    for (std::size_t j = 0; j < gens.size(); ++j) u = u * pow_mod(gens[j].value, e[j], r) % r;
    dlog[u] = std::move(e);
  }

  std::vector<DirichletCharacter> out;
  out.reserve(n);
  for (std::size_t idx = 0; idx < static_cast<std::size_t>(n); ++idx) {
    const Residues c = mixed_radix::element_at(orders, idx);
    std::vector<std::int64_t> angles(static_cast<std::size_t>(r), -1);
    for (std::int64_t u = 0; u < r; ++u) {
      if (std::gcd(u, r) != 1) continue;
      std::int64_t a = 0;
      for (std::size_t j = 0; j < gens.size(); ++j)
        a = (a + c[j] * dlog[u][j] % orders[j] * (n / orders[j])) % n;
      angles[u] = a;
    }
    out.emplace_back(r, n, std::move(angles));
  }
  return out;
}

PrimitiveData conductor_and_primitive(const DirichletCharacter& chi) {
  const std::int64_t r = chi.modulus();
  const auto& angles = chi.angles();
  for (std::int64_t f : divisors(r)) {
    bool trivial_on_kernel = true;
    for (std::int64_t u = 1 % f; u < r && trivial_on_kernel; u += f)
      if (std::gcd(u, r) == 1 && angles[u] != 0) trivial_on_kernel = false;
    if (!trivial_on_kernel) continue;

    std::vector<std::int64_t> prim(static_cast<std::size_t>(f), -1);
    for (std::int64_t t = 0; t < f; ++t) {
      if (std::gcd(t, f) != 1) continue;
      for (std::int64_t u = t; u < r; u += f)
        if (std::gcd(u, r) == 1) {
          prim[t] = angles[u];
          break;
        }
    }
    return {f, DirichletCharacter(f, chi.denominator(), std::move(prim))};
  }
  throw std::logic_error("no conductor found");
}

ComplexValue gauss_sum(const DirichletCharacter& chi) {
  const std::int64_t f = chi.modulus();
  if (conductor_and_primitive(chi).conductor != f)
    throw std::invalid_argument("Gauss sum needs a primitive character");
  ComplexValue tau{};
  for (std::int64_t t = 0; t < f; ++t)
    if (chi.supported(t)) tau += chi(t) * unit_root(Rational(t, f));
  return tau;
}

RingR::RingR(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("R needs at least one factor");
  for (auto r : factors_)
    if (r < 1) throw std::invalid_argument("factors of R must be positive");
}

std::size_t RingR::index_of(const Residues& a) const { return mixed_radix::index_of(factors_, a); }

Residues RingR::reduce(const Tuple& a) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("tuple length does not match R");
  Residues out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = floor_mod(a[i], factors_[i]);
  return out;
}

Residues RingR::multiply(const Residues& a, const Residues& b) const {
  Residues out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out[i] = floor_mod(a[i] % factors_[i] * (b[i] % factors_[i]), factors_[i]);
  return out;
}

Residues RingR::negate(const Residues& a) const {
  Residues out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = floor_mod(-a[i], factors_[i]);
  return out;
}

bool RingR::is_unit(const Residues& a) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (std::gcd(floor_mod(a[i], factors_[i]), factors_[i]) != 1) return false;
  return true;
}

std::vector<Residues> RingR::units() const {
  std::vector<Residues> out;
  for (std::size_t i = 0; i < order(); ++i) {
    Residues a = element(i);
    if (is_unit(a)) out.push_back(std::move(a));
  }
  return out;
}

std::uint64_t RingR::unit_count() const { return static_cast<std::uint64_t>(euler_phi(factors_)); }

std::size_t RingR::even_factor_count() const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [](std::int64_t r) { return r % 2 == 0; }));
}

namespace {

// prod chi_i(n_i) with the angles summed exactly over the common denominator.
ComplexValue product_value(const std::vector<DirichletCharacter>& chars, const std::vector<std::int64_t>& n) {
  std::int64_t den = 1;
  for (const auto& c : chars) den = std::lcm(den, c.denominator());
  std::int64_t num = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (!chars[i].supported(n[i])) return {};
    const std::int64_t a = chars[i].angles()[static_cast<std::size_t>(floor_mod(n[i], chars[i].modulus()))];
    num = (num + a * (den / chars[i].denominator())) % den;
  }
  return unit_root(num, den);
}

}  // namespace

ComplexValue TupleCharacter::operator()(const Residues& b) const { return product_value(components, b); }

ComplexValue TupleCharacter::star_value(const Tuple& d) const { return product_value(primitives, d); }

std::vector<TupleCharacter> tuple_characters(const RingR& ring) {
  const auto& r = ring.factors();
  std::vector<std::vector<DirichletCharacter>> per_factor;
  std::vector<std::vector<PrimitiveData>> prim;
  std::vector<std::int64_t> counts;
  for (auto ri : r) {
    per_factor.push_back(characters_mod(ri));
    prim.emplace_back();
    for (const auto& chi : per_factor.back()) prim.back().push_back(conductor_and_primitive(chi));
    counts.push_back(static_cast<std::int64_t>(per_factor.back().size()));
  }
  std::vector<TupleCharacter> out;
  for (std::size_t idx = 0; idx < mixed_radix::size(counts); ++idx) {
    const Residues pick = mixed_radix::element_at(counts, idx);
    TupleCharacter t;
    Rational at_minus_one;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto& chi = per_factor[i][pick[i]];
      const auto& pd = prim[i][pick[i]];
      t.components.push_back(chi);
      t.primitives.push_back(pd.primitive);
      t.conductor.push_back(pd.conductor);
      t.q.push_back(r[i] / pd.conductor);
      at_minus_one += chi.angle(-1);
    }
    t.odd = at_minus_one.frac() == Rational(1, 2);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TupleCharacter> odd_characters(const RingR& ring) {
  auto all = tuple_characters(ring);
  std::vector<TupleCharacter> out;
  for (auto& t : all)
    if (t.odd) out.push_back(std::move(t));
  return out;
}

Rational s_a(const RingR& ring, const Tuple& a, const Tuple& c) {
  const Residues ar = ring.reduce(a), cr = ring.reduce(c);
  Rational x;
  for (std::size_t i = 0; i < ring.rank(); ++i) x += Rational(ar[i] * cr[i], ring.factors()[i]);
  return b1(x);
}

FunctionOnGroup act(const RingR& ring, const Residues& c, const FunctionOnGroup& w) {
  if (w.size() != ring.order()) throw std::invalid_argument("function does not match |R|");
  FunctionOnGroup out;
  out.values.resize(w.size());
  Residues x(ring.rank(), 0);
  for (std::size_t idx = 0; idx < w.size(); ++idx, advance(x, ring.factors()))
    out[idx] = w[product_index(ring.factors(), c, x)];
  return out;
}

FunctionOnGroup eigen_project(const RingR& ring, const TupleCharacter& chi, const FunctionOnGroup& w) {
  if (w.size() != ring.order()) throw std::invalid_argument("function does not match |R|");
  const auto units = ring.units();
  FunctionOnGroup out;
  out.values.assign(w.size(), ComplexValue{});
  for (const auto& b : units) {
    const ComplexValue weight = std::conj(chi(b));
    Residues x(ring.rank(), 0);
    for (std::size_t idx = 0; idx < w.size(); ++idx, advance(x, ring.factors()))
      out[idx] += weight * w[product_index(ring.factors(), b, x)];
  }
  for (auto& v : out.values) v /= static_cast<double>(units.size());
  return out;
}

ComplexValue w_chi(const RingR& ring, const TupleCharacter& chi, const Tuple& a, const Tuple& c) {
  return WEvaluator(ring, chi)(ring.reduce(a), ring.reduce(c));
}

std::vector<FunctionOnGroup> w_functions(const RingR& ring, const TupleCharacter& chi,
                                         const std::vector<Tuple>& as) {
  const WEvaluator w(ring, chi);
  std::vector<FunctionOnGroup> out;
  for (const auto& a : as) {
    const Residues ar = ring.reduce(a);
    FunctionOnGroup f;
    f.values.reserve(ring.order());
    Residues x(ring.rank(), 0);
    for (std::size_t idx = 0; idx < ring.order(); ++idx, advance(x, ring.factors())) f.values.push_back(w(ar, x));
    out.push_back(std::move(f));
  }
  return out;
}

FunctionOnGroup w_function(const RingR& ring, const TupleCharacter& chi, const Tuple& a) {
  return std::move(w_functions(ring, chi, {a}).front());
}

ComplexValue series_w(const RingR& ring, const TupleCharacter& chi, const Tuple& a, const Tuple& c,
                      std::int64_t terms) {
  if (!chi.odd) throw std::invalid_argument("series form needs an odd character");
  if (terms < 1) throw std::invalid_argument("truncation must be at least 1");
  const auto& r = ring.factors();
  const std::size_t m = r.size();
  const Residues ar = ring.reduce(a), cr = ring.reduce(c);

  std::vector<ComplexValue> tau(m);
  for (std::size_t i = 0; i < m; ++i) tau[i] = gauss_sum(chi.primitives[i]);

  // F_i(beta) for beta | r_i, zero unless beta | q_i.
  auto big_f = [&](std::size_t i, std::int64_t beta) -> ComplexValue {
    const std::int64_t q = chi.q[i];
    if (q % beta != 0) return {};
    const std::int64_t t = q / beta;
    return chi.primitives[i](t) * static_cast<double>(mobius(t)) *
           (static_cast<double>(euler_phi(r[i])) / static_cast<double>(euler_phi(r[i] / beta))) * tau[i];
  };

  std::int64_t period = 1;
  for (std::size_t i = 0; i < m; ++i) period = std::lcm(period, r[i] * chi.conductor[i]);
  std::vector<ComplexValue> coeff(static_cast<std::size_t>(period));
  for (std::int64_t k = 1; k <= period; ++k) {
    ComplexValue prod = 1.0;
    for (std::size_t i = 0; i < m && prod != ComplexValue{}; ++i) {
      const std::int64_t n = k * ar[i] * cr[i];
      const std::int64_t beta = std::gcd(r[i], n);
      prod *= std::conj(chi.primitives[i](n / beta)) * big_f(i, beta);
    }
    coeff[k % period] = prod;
  }

  const std::int64_t limit = std::max(period, terms - terms % period);
  ComplexValue sum{};
  for (std::int64_t k = 1; k <= limit; ++k) sum += coeff[k % period] / static_cast<double>(k);
  return ComplexValue(0.0, 1.0 / std::numbers::pi) * sum;
}

namespace {

ComplexValue v_value(const RingR& ring, const TupleCharacter& chi, const WEvaluator& w, const Tuple& a,
                     const Tuple& c) {
  if (a.size() != ring.rank() || !divides(a, chi.q))
    throw std::invalid_argument("v is only defined for a dividing q");
  const Residues cr = ring.reduce(c);
  ComplexValue sum{};
  for (const auto& d : divisor_tuples(a)) {
    const std::int64_t mu = mobius(d);
    if (mu == 0) continue;
    sum += static_cast<double>(mu) * std::conj(chi.star_value(d)) *
           w(ring.reduce(componentwise_quotient(a, d)), cr);
  }
  return sum;
}

}  // namespace

ComplexValue v_chi(const RingR& ring, const TupleCharacter& chi, const Tuple& a, const Tuple& c) {
  return v_value(ring, chi, WEvaluator(ring, chi), a, c);
}

std::vector<Tuple> divisor_ordering(const Tuple& q) {
  for (auto x : q)
    if (x < 1) throw std::invalid_argument("divisor ordering needs positive components");
  auto rank_of = [](const Tuple& d) {
    int s = 0;
    for (auto x : d) s += big_omega(x);
    return s;
  };
  const int top = rank_of(q);
  const auto all = divisor_tuples(q);  // lexicographic
  const std::size_t n = all.size();
  std::vector<Tuple> out(n);
  std::size_t lo = 0;
  // Levels strictly below the middle go in rank order; their complements fill the tail.
  for (int level = 0; 2 * level < top; ++level)
    for (const auto& d : all)
      if (rank_of(d) == level) {
        out[lo] = d;
        out[n - 1 - lo] = componentwise_quotient(q, d);
        ++lo;
      }
  if (top % 2 == 0) {
    std::optional<Tuple> fixed;
    for (const auto& d : all) {
      if (rank_of(d) != top / 2) continue;
      const Tuple comp = componentwise_quotient(q, d);
      if (comp == d) fixed = d;
      else if (d < comp) {
        out[lo] = d;
        out[n - 1 - lo] = comp;
        ++lo;
      }
    }
    if (fixed) out[lo] = *fixed;
  }
  return out;
}

VMatrixReport v_matrix_report(const RingR& ring, const TupleCharacter& chi) {
  if (!chi.odd) throw std::invalid_argument("v-matrix needs an odd character");
  const auto order = divisor_ordering(chi.q);
  VMatrixReport rep;
  rep.size = order.size();
  rep.matrix = ComplexMatrix(rep.size, rep.size);
  const WEvaluator w(ring, chi);
  for (std::size_t i = 0; i < rep.size; ++i)
    for (std::size_t j = 0; j < rep.size; ++j) {
      const ComplexValue v = v_value(ring, chi, w, order[i], order[j]);
      rep.matrix(i, j) = v;
      const Tuple ac = componentwise_product(order[i], order[j]);
      if (!divides(ac, chi.q) && std::abs(v) >= kZeroTol) rep.zeros_ok = false;
      if (ac == chi.q && std::abs(v) <= kNonzeroTol) rep.nonzeros_ok = false;
    }
  rep.rank = complex_rank(rep.matrix, kComplexRankTol);
  return rep;
}

bool v_matrix_check(const RingR& ring, const TupleCharacter& chi) {
  return v_matrix_report(ring, chi).ok();
}

bool w_independence_check(const RingR& ring, const TupleCharacter& chi) {
  const auto divs = divisor_tuples(chi.q);
  const WEvaluator w(ring, chi);
  ComplexMatrix m(divs.size(), ring.order());
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const Residues a = ring.reduce(divs[i]);
    Residues x(ring.rank(), 0);
    for (std::size_t idx = 0; idx < ring.order(); ++idx, advance(x, ring.factors())) m(i, idx) = w(a, x);
  }
  return complex_rank(m, kComplexRankTol) == divs.size();
}

BasisCount basis_count(const RingR& ring) {
  BasisCount out;
  for (const auto& chi : odd_characters(ring))
    out.odd_count += static_cast<std::uint64_t>(divisor_count(chi.q));
  out.expected = (ring.order() - (std::uint64_t{1} << ring.even_factor_count())) / 2;

  // S_{-a} = -S_a and S_a(-c) = -S_a(c), so the rank is that of the block
  // indexed by one representative of each pair {a, -a} with a != -a.
  std::vector<Residues> reps;
  for (std::size_t i = 0; i < ring.order(); ++i) {
    Residues a = ring.element(i);
    if (ring.index_of(ring.negate(a)) > i) reps.push_back(std::move(a));
  }
  const auto& r = ring.factors();
  const std::int64_t l = lcm_of(r);
  ComplexMatrix m(reps.size(), reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      std::int64_t t = 0;  // l * (sum a_k c_k / r_k mod 1)
      for (std::size_t k = 0; k < r.size(); ++k) t = (t + reps[i][k] * reps[j][k] % r[k] * (l / r[k])) % l;
      m(i, j) = t == 0 ? 0.0 : static_cast<double>(t) / static_cast<double>(l) - 0.5;
    }
  out.s_rank = complex_rank(m, kComplexRankTol);
  return out;
}

bool basis_count_check(const RingR& ring) { return basis_count(ring).ok(); }

}  // namespace cubespan
