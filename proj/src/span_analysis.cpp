#include "cubespan/span_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cubespan {

namespace {

void require_within_cap(const QuotientGroup& qg, std::uint64_t cap) {
  if (qg.order() > cap)
    throw ResourceLimitError("quotient group has " + std::to_string(qg.order()) +
                             " elements, above the point cap of " + std::to_string(cap));
}

// Sorted element indices of ker pi_i.
std::vector<std::size_t> kernel_of(const QuotientGroup& qg, std::size_t i) {
  std::vector<std::size_t> ker;
  for (std::size_t idx = 0; idx < qg.order(); ++idx)
    if (qg.group.pairing_numerator(qg.group.element(idx), qg.projections[i]) == 0) ker.push_back(idx);
  return ker;
}

}  // namespace

CoordClasses coordinate_classes(const QuotientGroup& qg, std::uint64_t cap) {
  require_within_cap(qg, cap);
  const auto& g = qg.group;
  CoordClasses out;
  out.self_negative.resize(qg.n);
  for (std::size_t i = 0; i < qg.n; ++i)
    out.self_negative[i] = qg.projections[i] == g.negate(qg.projections[i]);

  std::vector<Residues> reps;
  std::vector<bool> has_plus, has_minus;
  std::vector<std::size_t> class_of(qg.n, 0);
  for (std::size_t i = 0; i < qg.n; ++i) {
    if (qg.is_trivial(i)) continue;
    const Residues& p = qg.projections[i];
    std::size_t c = 0;
    for (; c < reps.size(); ++c) {
      if (p == reps[c]) {
        has_plus[c] = true;
        break;
      }
      if (p == g.negate(reps[c])) {
        has_minus[c] = true;
        break;
      }
    }
    if (c == reps.size()) {
      reps.push_back(p);
      has_plus.push_back(true);
      has_minus.push_back(false);
      out.i_classes.emplace_back();
    }
    out.i_classes[c].push_back(i);
    class_of[i] = c;
  }
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const bool self_neg = out.self_negative[out.i_classes[c].front()];
    out.i_class_self_negative.push_back(self_neg);
    out.i_class_paired.push_back(self_neg || (has_plus[c] && has_minus[c]));
  }

  std::map<std::vector<std::size_t>, std::size_t> by_kernel;
  for (std::size_t i = 0; i < qg.n; ++i) {
    if (qg.is_trivial(i)) continue;
    auto [it, inserted] = by_kernel.try_emplace(kernel_of(qg, i), out.k_classes.size());
    if (inserted) {
      out.k_classes.emplace_back();
      out.k_class_members.emplace_back();
    }
    const std::size_t k = it->second;
    out.k_classes[k].push_back(i);
    auto& members = out.k_class_members[k];
    if (std::find(members.begin(), members.end(), class_of[i]) == members.end())
      members.push_back(class_of[i]);
  }
  return out;
}

IotaKappa iota_kappa(const CoordClasses& classes) {
  IotaKappa r;
  for (bool self_neg : classes.i_class_self_negative) r.iota += !self_neg;
  for (const auto& members : classes.k_class_members)
    for (auto c : members)
      if (classes.i_class_paired[c]) {
        ++r.kappa;
        break;
      }
  return r;
}

std::size_t span_dimension(const QuotientGroup& qg, std::uint64_t cap) {
  const auto ik = iota_kappa(coordinate_classes(qg, cap));
  return ik.iota + ik.kappa;
}

RationalMatrix relation_system(const QuotientGroup& qg, const CoordClasses& classes) {
  std::vector<RationalVector> rows;
  for (std::size_t c = 0; c < classes.i_classes.size(); ++c) {
    if (classes.i_class_self_negative[c]) continue;  // relation reads u_i - u_i = 0
    const Residues& rep = qg.projections[classes.i_classes[c].front()];
    RationalVector row(qg.n);
    for (auto i : classes.i_classes[c]) row[i] = qg.projections[i] == rep ? 1 : -1;
    rows.push_back(std::move(row));
  }
  for (const auto& cls : classes.k_classes) {
    RationalVector row(qg.n);
    for (auto i : cls) row[i] = 1;
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows, qg.n);
}

RationalMatrix point_matrix(const QuotientGroup& qg, std::uint64_t cap) {
  std::vector<RationalVector> rows;
  for (auto& p : cube_points(qg, cap)) rows.push_back(std::move(p.coords));
  return RationalMatrix::from_rows(rows, qg.n);
}

std::vector<RationalVector> vanishing_functionals(const QuotientGroup& qg, VanishingMethod method,
                                                  std::uint64_t cap) {
  if (method == VanishingMethod::Formula)
    return nullspace_basis(relation_system(qg, coordinate_classes(qg, cap)));
  return nullspace_basis(point_matrix(qg, cap));
}

bool verify_terminal_lemma(const QuotientGroup& qg, std::uint64_t cap) {
  return same_span(vanishing_functionals(qg, VanishingMethod::Formula, cap),
                   vanishing_functionals(qg, VanishingMethod::BruteForce, cap), qg.n);
}

std::vector<Rational> h_u_function(const QuotientGroup& qg, const RationalVector& u) {
  if (u.size() != qg.n) throw std::invalid_argument("functional has the wrong length");
  std::vector<Rational> h(qg.order());
  for (std::size_t i = 0; i < qg.n; ++i) {
    h[qg.group.index_of(qg.projections[i])] += u[i];
    h[qg.group.index_of(qg.group.negate(qg.projections[i]))] -= u[i];
  }
  return h;
}

AlternateIdentitySides alternate_identity_sides(const RationalVector& u, const CubePoint& point,
                                                const QuotientGroup& qg, std::uint64_t cap) {
  require_within_cap(qg, cap);
  if (point.coords.size() != qg.n) throw std::invalid_argument("point has the wrong length");
  AlternateIdentitySides sides;
  Rational support_sum;
  for (std::size_t i = 0; i < qg.n; ++i) {
    sides.direct += u[i] * point.coords[i];
    if (!point.coords[i].is_zero()) support_sum += u[i];
  }
  const std::vector<Rational> h = h_u_function(qg, u);
  ComplexValue pairing_sum{};  // |H| <h_u, S_lambda>
  for (std::size_t idx = 0; idx < qg.order(); ++idx) {
    const Rational s = b1(qg.group.pairing(point.element, qg.group.element(idx)));
    pairing_sum += ComplexValue(h[idx].to_double()) * std::conj(ComplexValue(s.to_double()));
  }
  sides.via_s = 0.5 * (pairing_sum.real() + support_sum.to_double());
  if (std::abs(pairing_sum.imag()) > 1e-9) sides.via_s = std::nan("");
  return sides;
}

bool check_alternate_identity(const RationalVector& u, const CubePoint& point,
                              const QuotientGroup& qg, std::uint64_t cap) {
  const auto sides = alternate_identity_sides(u, point, qg, cap);
  return std::abs(sides.direct.to_double() - sides.via_s) <= 1e-9;
}

SeboResult sebo_check(const QuotientGroup& qg, std::uint64_t cap) {
  SeboResult result;
  for (auto& p : cube_points(qg, cap)) {
    Rational twice_sum;
    std::size_t support = 0;
    for (const auto& x : p.coords) {
      twice_sum += x;
      support += !x.is_zero();
    }
    twice_sum *= 2;
    if (twice_sum != Rational(static_cast<long>(support))) {
      result.witness = std::move(p);
      return result;
    }
  }

  const auto& g = qg.group;
  std::vector<std::size_t> sigma(qg.n);
  std::vector<bool> done(qg.n, false);
  for (std::size_t i = 0; i < qg.n; ++i) {
    if (done[i]) continue;
    const Residues& p = qg.projections[i];
    const Residues minus = g.negate(p);
    if (p == minus) {
      sigma[i] = i;
      done[i] = true;
      continue;
    }
    std::vector<std::size_t> plus_side, minus_side;
    for (std::size_t j = i; j < qg.n; ++j) {
      if (qg.projections[j] == p) plus_side.push_back(j);
      else if (qg.projections[j] == minus) minus_side.push_back(j);
    }
    if (plus_side.size() != minus_side.size())
      throw std::logic_error("balanced point set with unbalanced projection classes");
    for (std::size_t k = 0; k < plus_side.size(); ++k) {
      sigma[plus_side[k]] = minus_side[k];
      sigma[minus_side[k]] = plus_side[k];
      done[plus_side[k]] = done[minus_side[k]] = true;
    }
  }
  result.holds = true;
  result.involution = std::move(sigma);
  return result;
}

bool involution_pairs_generators(const QuotientGroup& qg, const std::vector<std::size_t>& sigma) {
  if (sigma.size() != qg.n) return false;
  for (std::size_t i = 0; i < qg.n; ++i) {
    if (sigma[i] >= qg.n || sigma[sigma[i]] != i) return false;
    for (std::size_t j = 0; j < qg.group.rank(); ++j) {
      const auto r = qg.group.factors()[j];
      if ((qg.projections[i][j] + qg.projections[sigma[i]][j]) % r != 0) return false;
    }
  }
  return true;
}

std::string cycle_notation(const std::vector<std::size_t>& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] > i) out += "(" + std::to_string(i + 1) + " " + std::to_string(sigma[i] + 1) + ")";
  return out.empty() ? "id" : out;
}

}  // namespace cubespan
