#pragma once

// Characters and Fourier analysis on finite abelian groups, subgroup
// annihilators, Poisson summation, and the two spanning/independence facts
// behind the vanishing-functional characterisation.

#include <cstddef>
#include <vector>

#include "cubespan/abelian_group.hpp"
#include "cubespan/exactmath.hpp"

namespace cubespan {

/// chi_c(a) = e(<a, c>). The index tuple c lives in the same residue space as G.
struct Character {
  Residues index;

  ComplexValue operator()(const FiniteAbelianGroup& g, const Residues& a) const {
    return unit_root(g.pairing(a, index));
  }
  Character conjugate(const FiniteAbelianGroup& g) const { return {g.negate(index)}; }
};

/// Complex function on a group, indexed in lexicographic element order.
struct FunctionOnGroup {
  std::vector<ComplexValue> values;

  std::size_t size() const { return values.size(); }
  ComplexValue& operator[](std::size_t i) { return values[i]; }
  const ComplexValue& operator[](std::size_t i) const { return values[i]; }
};

std::vector<Character> all_characters(const FiniteAbelianGroup& g);
FunctionOnGroup character_values(const FiniteAbelianGroup& g, const Character& chi);

/// <f, h> = (1/|G|) sum f(g) conj(h(g)).
ComplexValue inner_product(const FunctionOnGroup& f, const FunctionOnGroup& h);

/// f^(chi) = <f, chi>, indexed like the characters (same tuples as G).
FunctionOnGroup fourier(const FunctionOnGroup& f, const FiniteAbelianGroup& g);

/// Sorted element indices of a subgroup.
class Subgroup {
 public:
  /// Validates closure under addition; throws std::invalid_argument otherwise.
  static Subgroup from_elements(const FiniteAbelianGroup& g, std::vector<std::size_t> elements);
  static Subgroup generated_by(const FiniteAbelianGroup& g, const std::vector<Residues>& gens);

  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::size_t index) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;

 private:
  std::vector<std::size_t> elements_;
};

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g);

/// K^perp = characters trivial on K, as a subgroup of the dual (same indexing as G).
Subgroup annihilator(const FiniteAbelianGroup& g, const Subgroup& k);

struct PoissonSides {
  ComplexValue group_side;  ///< (1/|G|) sum_{k in K} f(k)
  ComplexValue dual_side;   ///< (1/|K^perp|) sum_{chi in K^perp} f^(chi)
};

PoissonSides poisson_sides(const FunctionOnGroup& f, const Subgroup& k, const FiniteAbelianGroup& g);
bool poisson_check(const FunctionOnGroup& f, const Subgroup& k, const FiniteAbelianGroup& g,
                   double tol = 1e-10);

/// Distinct subgroups <chi>^perp over all characters chi, in order of first appearance.
std::vector<Subgroup> cyclic_annihilator_family(const FiniteAbelianGroup& g);
/// The indicator functions of cyclic_annihilator_family(g) are linearly independent.
bool indicator_independence(const FiniteAbelianGroup& g);

/// S_g(phi) = B1(phi(g)) for phi in H = Hom(G, Q/Z).
std::vector<Rational> s_function_exact(const Residues& element, const FiniteAbelianGroup& g);
FunctionOnGroup s_function(const Residues& element, const FiniteAbelianGroup& g);

struct OddSpan {
  std::size_t rank = 0;      ///< rank of [S_g(phi)] over C
  std::size_t expected = 0;  ///< (|G| - 2^s) / 2, s = number of even invariant factors
};

OddSpan odd_span(const FiniteAbelianGroup& g);
bool odd_span_check(const FiniteAbelianGroup& g);

}  // namespace cubespan
