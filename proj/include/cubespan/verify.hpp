#pragma once

// Seeded random instances and the exhaustive verification suites run by
// `cubespan verify`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubespan/lattice.hpp"

namespace cubespan {

using Rng = std::mt19937_64;

/// Random Lambda = Z^n + <g_1[, g_2]> with 1 <= n <= max_n. Each generator has
/// a modulus in [2, 20] (the product of the two stays <= max_order), and each
/// coordinate residue is zero, the negative or a multiple of an earlier
/// coordinate, or uniform, so that pairing and kernel classes actually occur.
LatticeSpec random_lattice(Rng& rng, std::size_t max_n, std::uint64_t max_order);

/// Z^n + a / r with r in [2, max_r], coordinates in shuffled complementary pairs
/// (a, r - a), plus a coordinate r / 2 now and then when r is even.
LatticeSpec random_paired_lattice(Rng& rng, std::int64_t max_r = 20);

/// Z^3 + (a / r, (r - a) / r, 1 / r).
LatticeSpec white_lattice(std::int64_t a, std::int64_t r);

struct Failure {
  std::string check;
  std::string params;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
};

struct CharsBounds {
  std::int64_t max_order = 36;
  std::int64_t poisson_max_order = 24;
  int poisson_samples = 20;
  std::uint64_t seed = 42;
};

struct DirichletBounds {
  std::int64_t max_modulus = 30;
  std::uint64_t series_max_ring = 10;
  std::int64_t series_terms = 100000;
  std::uint64_t seed = 42;
};

struct LatticeBounds {
  std::size_t instances = 200;
  std::size_t max_n = 6;
  std::uint64_t max_order = 200;
  std::size_t paired_instances = 50;
  std::int64_t white_max_r = 50;
  std::uint64_t seed = 42;
};

VerifyReport verify_chars(const CharsBounds& bounds);
VerifyReport verify_dirichlet(const DirichletBounds& bounds);
VerifyReport verify_lattice(const LatticeBounds& bounds);

/// Rings Z/r (2 <= r <= max_lcm) and Z/r1 + Z/r2 (2 <= r1 <= r2, lcm <= max_lcm).
std::vector<std::vector<std::int64_t>> ring_sweep(std::int64_t max_lcm);

std::string format_tuple(const std::vector<std::int64_t>& t);

}  // namespace cubespan
