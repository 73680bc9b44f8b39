#include "cubespan/characters.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>

namespace cubespan {

namespace {

// e(k / exponent) for k in [0, exponent).
std::vector<ComplexValue> root_table(const FiniteAbelianGroup& g) {
  const std::int64_t e = g.exponent();
  std::vector<ComplexValue> t(static_cast<std::size_t>(e));
  for (std::int64_t k = 0; k < e; ++k) t[k] = unit_root(Rational(k, e));
  return t;
}

std::vector<Residues> all_elements(const FiniteAbelianGroup& g) {
  std::vector<Residues> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back(g.element(i));
  return out;
}

// Closure of `seed` (indices, must contain 0) together with `gens` under addition.
std::vector<bool> close_under(const FiniteAbelianGroup& g, std::vector<bool> in,
                              const std::vector<Residues>& gens) {
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) queue.push_back(i);
  while (!queue.empty()) {
    const Residues a = g.element(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      const std::size_t j = g.index_of(g.add(a, s));
      if (!in[j]) {
        in[j] = true;
        queue.push_back(j);
      }
    }
  }
  return in;
}

std::vector<std::size_t> indices_of(const std::vector<bool>& in) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Character> all_characters(const FiniteAbelianGroup& g) {
  std::vector<Character> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back({g.element(i)});
  return out;
}

FunctionOnGroup character_values(const FiniteAbelianGroup& g, const Character& chi) {
  const auto roots = root_table(g);
  FunctionOnGroup f;
  f.values.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    f.values.push_back(roots[g.pairing_numerator(g.element(i), chi.index)]);
  return f;
}

ComplexValue inner_product(const FunctionOnGroup& f, const FunctionOnGroup& h) {
  if (f.size() != h.size()) throw std::invalid_argument("functions live on groups of different size");
  if (f.size() == 0) throw std::invalid_argument("empty function");
  ComplexValue s{};
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(h[i]);
  return s / static_cast<double>(f.size());
}

FunctionOnGroup fourier(const FunctionOnGroup& f, const FiniteAbelianGroup& g) {
  if (f.size() != g.order()) throw std::invalid_argument("function does not match the group order");
  const auto roots = root_table(g);
  const auto elems = all_elements(g);
  const std::int64_t e = g.exponent();
  FunctionOnGroup out;
  out.values.resize(g.order());
  for (std::size_t c = 0; c < g.order(); ++c) {
    ComplexValue s{};
    for (std::size_t a = 0; a < g.order(); ++a) {
      const std::int64_t k = g.pairing_numerator(elems[a], elems[c]);
      s += f[a] * roots[(e - k) % e];  // conj(chi_c(a))
    }
    out[c] = s / static_cast<double>(g.order());
  }
  return out;
}

Subgroup Subgroup::from_elements(const FiniteAbelianGroup& g, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  if (elements.back() >= g.order()) throw std::invalid_argument("element index out of range");
  for (auto i : elements)
    for (auto j : elements) {
      const std::size_t s = g.index_of(g.add(g.element(i), g.element(j)));
      if (!std::binary_search(elements.begin(), elements.end(), s))
        throw std::invalid_argument("element set is not closed under addition");
    }
  Subgroup out;
  out.elements_ = std::move(elements);
  return out;
}

Subgroup Subgroup::generated_by(const FiniteAbelianGroup& g, const std::vector<Residues>& gens) {
  for (const auto& s : gens)
    if (!g.contains(s)) throw std::invalid_argument("generator is not a group element");
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  Subgroup out;
  out.elements_ = indices_of(close_under(g, std::move(in), gens));
  return out;
}

bool Subgroup::contains(std::size_t index) const {
  return std::binary_search(elements_.begin(), elements_.end(), index);
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g) {
  // Every subgroup is reached from {0} by adjoining one element at a time.
  std::set<Subgroup> seen;
  std::deque<Subgroup> queue;
  const Subgroup trivial = Subgroup::generated_by(g, {});
  seen.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    const Subgroup h = queue.front();
    queue.pop_front();
    std::vector<bool> in(g.order(), false);
    for (auto i : h.elements()) in[i] = true;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      Subgroup bigger = Subgroup::from_elements(g, indices_of(close_under(g, in, {g.element(x)})));
      if (seen.insert(bigger).second) queue.push_back(std::move(bigger));
    }
  }
  return {seen.begin(), seen.end()};
}

Subgroup annihilator(const FiniteAbelianGroup& g, const Subgroup& k) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < g.order(); ++c) {
    const Residues chi = g.element(c);
    bool trivial = true;
    for (auto i : k.elements())
      if (g.pairing_numerator(g.element(i), chi) != 0) {
        trivial = false;
        break;
      }
    if (trivial) out.push_back(c);
  }
  return Subgroup::from_elements(g, std::move(out));
}

PoissonSides poisson_sides(const FunctionOnGroup& f, const Subgroup& k, const FiniteAbelianGroup& g) {
  if (f.size() != g.order()) throw std::invalid_argument("function does not match the group order");
  PoissonSides sides;
  for (auto i : k.elements()) sides.group_side += f[i];
  sides.group_side /= static_cast<double>(g.order());
  const FunctionOnGroup fhat = fourier(f, g);
  const Subgroup perp = annihilator(g, k);
  for (auto c : perp.elements()) sides.dual_side += fhat[c];
  sides.dual_side /= static_cast<double>(perp.size());
  return sides;
}

bool poisson_check(const FunctionOnGroup& f, const Subgroup& k, const FiniteAbelianGroup& g,
                   double tol) {
  const auto s = poisson_sides(f, k, g);
  return std::abs(s.group_side - s.dual_side) <= tol;
}

std::vector<Subgroup> cyclic_annihilator_family(const FiniteAbelianGroup& g) {
  std::vector<Subgroup> out;
  for (std::size_t c = 0; c < g.order(); ++c) {
    Subgroup perp = annihilator(g, Subgroup::generated_by(g, {g.element(c)}));
    if (std::find(out.begin(), out.end(), perp) == out.end()) out.push_back(std::move(perp));
  }
  return out;
}

bool indicator_independence(const FiniteAbelianGroup& g) {
  const auto family = cyclic_annihilator_family(g);
  ComplexMatrix m(family.size(), g.order());
  for (std::size_t r = 0; r < family.size(); ++r)
    for (auto i : family[r].elements()) m(r, i) = 1.0;
  return complex_rank(m) == family.size();
}

std::vector<Rational> s_function_exact(const Residues& element, const FiniteAbelianGroup& g) {
  if (!g.contains(element)) throw std::invalid_argument("element is not in the group");
  std::vector<Rational> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back(b1(g.pairing(element, g.element(i))));
  return out;
}

FunctionOnGroup s_function(const Residues& element, const FiniteAbelianGroup& g) {
  FunctionOnGroup f;
  for (const auto& x : s_function_exact(element, g)) f.values.emplace_back(x.to_double());
  return f;
}

OddSpan odd_span(const FiniteAbelianGroup& g) {
  ComplexMatrix m(g.order(), g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    const FunctionOnGroup s = s_function(g.element(a), g);
    for (std::size_t phi = 0; phi < g.order(); ++phi) m(a, phi) = s[phi];
  }
  OddSpan out;
  out.rank = complex_rank(m);
  out.expected = (g.order() - (std::uint64_t{1} << g.even_factor_count())) / 2;
  return out;
}

bool odd_span_check(const FiniteAbelianGroup& g) {
  const auto r = odd_span(g);
  return r.rank == r.expected;
}

}  // namespace cubespan
