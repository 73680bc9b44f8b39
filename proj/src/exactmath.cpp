#include "cubespan/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cubespan {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational: \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  return {n, d};
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void add_col_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

}  // namespace

SnfDecomposition snf(const IntegerMatrix& m) {
  if (m.empty()) throw std::invalid_argument("snf of an empty matrix");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Integer a = abs(d(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) return {std::move(u), std::move(d), std::move(v)};

      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);  // truncating
        add_row_multiple(d, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        add_col_multiple(d, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: pull a non-multiple into row t.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(u, t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Rational linear algebra

RowEchelon rref(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rational_rank(const RationalMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1))
    throw std::domain_error("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b,
               std::size_t dim) {
  const auto ra = rational_rank(RationalMatrix::from_rows(a, dim));
  const auto rb = rational_rank(RationalMatrix::from_rows(b, dim));
  if (ra != rb) return false;
  std::vector<RationalVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rational_rank(RationalMatrix::from_rows(both, dim)) == ra;
}

std::size_t complex_rank(const ComplexMatrix& m, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("complex_rank tolerance must be positive");
  ComplexMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    double best = std::abs(a(rank, c));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      const double v = std::abs(a(i, c));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best <= tol) continue;
    a.swap_rows(p, rank);
    const ComplexValue pivot = a(rank, c);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c) == ComplexValue{}) continue;
      const ComplexValue f = a(i, c) / pivot;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Periodic functions

Rational b1(const Rational& x) {
  if (x.is_integer()) return 0;
  return x.frac() - Rational(Integer(1), Integer(2));
}

ComplexValue unit_root(const Rational& x) {
  const Rational f = x.frac();
  if (f.is_zero()) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * f.to_double();
  return {std::cos(angle), std::sin(angle)};
}

ComplexValue unit_root(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::domain_error("unit_root needs a positive denominator");
  std::int64_t k = num % den;
  if (k < 0) k += den;
  if (k == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

// ---------------------------------------------------------------------------
// Multiplicative arithmetic

namespace {

void require_positive(std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("arithmetic function needs a positive integer, got " +
                                          std::to_string(k));
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t k) {
  require_positive(k);
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (k > 1) out.emplace_back(k, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t k) {
  require_positive(k);
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    out.push_back(d);
    if (d * d != k) out.push_back(k / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t mobius(std::int64_t k) {
  std::int64_t mu = 1;
  for (auto [p, e] : factorize(k)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t euler_phi(std::int64_t k) {
  std::int64_t phi = k;
  for (auto [p, e] : factorize(k)) phi = phi / p * (p - 1);
  return phi;
}

std::int64_t divisor_count(std::int64_t k) {
  std::int64_t d = 1;
  for (auto [p, e] : factorize(k)) d *= e + 1;
  return d;
}

int big_omega(std::int64_t k) {
  int total = 0;
  for (auto [p, e] : factorize(k)) total += e;
  return total;
}

std::int64_t mobius(std::span<const std::int64_t> k) {
  std::int64_t v = 1;
  for (auto x : k) v *= mobius(x);
  return v;
}

std::int64_t euler_phi(std::span<const std::int64_t> k) {
  std::int64_t v = 1;
  for (auto x : k) v *= euler_phi(x);
  return v;
}

std::int64_t divisor_count(std::span<const std::int64_t> k) {
  std::int64_t v = 1;
  for (auto x : k) v *= divisor_count(x);
  return v;
}

std::vector<Tuple> divisor_tuples(const Tuple& q) {
  std::vector<std::vector<std::int64_t>> per;
  per.reserve(q.size());
  for (auto x : q) per.push_back(divisors(x));
  std::vector<Tuple> out{Tuple{}};
  for (const auto& ds : per) {
    std::vector<Tuple> next;
    next.reserve(out.size() * ds.size());
    for (const auto& prefix : out)
      for (auto d : ds) {
        Tuple t = prefix;
        t.push_back(d);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

bool divides(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == 0 || b[i] % a[i] != 0) return false;
  return true;
}

Tuple componentwise_product(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple length mismatch");
  Tuple c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
  return c;
}

Tuple componentwise_quotient(const Tuple& a, const Tuple& d) {
  if (!divides(d, a)) throw std::invalid_argument("tuple quotient with a non-divisor");
  Tuple c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] / d[i];
  return c;
}

DivisorFunction::DivisorFunction(Tuple bound, const std::function<Rational(const Tuple&)>& f)
    : bound_(std::move(bound)), domain_(divisor_tuples(bound_)) {
  for (auto x : bound_) component_divisors_.push_back(divisors(x));
  values_.reserve(domain_.size());
  for (const auto& d : domain_) values_.push_back(f(d));
}

std::size_t DivisorFunction::index_of(const Tuple& d) const {
  if (d.size() != bound_.size()) throw std::invalid_argument("tuple length mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& ds = component_divisors_[i];
    auto it = std::lower_bound(ds.begin(), ds.end(), d[i]);
    if (it == ds.end() || *it != d[i]) throw std::out_of_range("not a divisor tuple of the bound");
    idx = idx * ds.size() + static_cast<std::size_t>(it - ds.begin());
  }
  return idx;
}

const Rational& DivisorFunction::at(const Tuple& d) const { return values_[index_of(d)]; }

DivisorFunction dirichlet_convolve(const DivisorFunction& g, const DivisorFunction& h) {
  if (g.bound_ != h.bound_) throw std::invalid_argument("convolution of functions on different bounds");
  return DivisorFunction(g.bound_, [&](const Tuple& a) {
    Rational sum;
    for (const auto& d : divisor_tuples(a)) sum += g.at(d) * h.at(componentwise_quotient(a, d));
    return sum;
  });
}

}  // namespace cubespan
