#pragma once
// Shared fixtures: small reference algebras, quiver presentations and a
// deterministic PRNG for property tests.

#include <cstdint>
#include <vector>

#include "dualco/algebra.hpp"
#include "dualco/presentation.hpp"

namespace dualco::testing {

// Deterministic xorshift64; tests never depend on platform RNGs.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  // Uniform-ish integer in [lo, hi].
  long range(long lo, long hi) { return lo + (long)(next() % (std::uint64_t)(hi - lo + 1)); }
};

inline Mat random_mat(const Field& F, Rng& rng, std::size_t rows, std::size_t cols,
                      long lo = -4, long hi = 4) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = F.from_long(rng.range(lo, hi));
  return m;
}

// k[x]/(x^n) as a quiver algebra: one vertex, one loop, truncation n.
inline FDAlgebra loop_mod_xn(const Field& F, std::size_t n) {
  QuiverPresentation p;
  p.field = F;
  p.quiver.vertices = {"v"};
  p.quiver.arrows = {{"x", 0, 0}};
  p.truncate = n;
  return build_algebra(p);
}

// The path algebra of 1 -> 2 (single arrow a).
inline FDAlgebra a2_algebra(const Field& F) {
  QuiverPresentation p;
  p.field = F;
  p.quiver.vertices = {"1", "2"};
  p.quiver.arrows = {{"a", 0, 1}};
  p.truncate = 4;
  return build_algebra(p);
}

// Free algebra on two loops x, y modulo paths of length >= n (one vertex).
inline FDAlgebra two_loops(const Field& F, std::size_t n) {
  QuiverPresentation p;
  p.field = F;
  p.quiver.vertices = {"v"};
  p.quiver.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  p.truncate = n;
  return build_algebra(p);
}

// Full matrix algebra M_n as structure constants (basis e_{ij}, row-major).
inline FDAlgebra matrix_algebra(const Field& F, std::size_t n) {
  FDAlgebra a;
  a.field = F;
  const std::size_t d = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.basis_names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  a.table.assign(d, std::vector<Vec>(d, Vec(d, Scalar(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (j == k) a.table[i * n + j][k * n + l][i * n + l] = F.one();
  a.unit = Vec(d, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) a.unit[i * n + i] = F.one();
  return a;
}

// Product algebra A x B as structure constants (basis of A first).
inline FDAlgebra product_algebra(const FDAlgebra& a, const FDAlgebra& b) {
  FDAlgebra c;
  c.field = a.field;
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  for (const auto& n : a.basis_names) c.basis_names.push_back("l_" + n);
  for (const auto& n : b.basis_names) c.basis_names.push_back("r_" + n);
  c.table.assign(d, std::vector<Vec>(d, Vec(d, Scalar(0))));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) c.table[i][j][k] = a.table[i][j][k];
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k) c.table[da + i][da + j][da + k] = b.table[i][j][k];
  c.unit = Vec(d, Scalar(0));
  for (std::size_t k = 0; k < da; ++k) c.unit[k] = a.unit[k];
  for (std::size_t k = 0; k < db; ++k) c.unit[da + k] = b.unit[k];
  return c;
}

// Upper-triangular 2x2 matrices as structure constants {e11, e12, e22}.
inline FDAlgebra upper_triangular2(const Field& F) {
  FDAlgebra a;
  a.field = F;
  a.basis_names = {"e11", "e12", "e22"};
  a.table.assign(3, std::vector<Vec>(3, Vec(3, Scalar(0))));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { a.table[i][j][k] = F.one(); };
  set(0, 0, 0);  // e11 e11 = e11
  set(0, 1, 1);  // e11 e12 = e12
  set(1, 2, 1);  // e12 e22 = e12
  set(2, 2, 2);  // e22 e22 = e22
  a.unit = {F.one(), F.zero(), F.one()};
  return a;
}

// k^n as structure constants (diagonal idempotents).
inline FDAlgebra split_torus(const Field& F, std::size_t n) {
  FDAlgebra a;
  a.field = F;
  a.table.assign(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
  for (std::size_t i = 0; i < n; ++i) {
    a.basis_names.push_back("f" + std::to_string(i + 1));
    a.table[i][i][i] = F.one();
  }
  a.unit = Vec(n, F.one());
  return a;
}

// Strips quiver provenance so the generic code paths are exercised.
inline FDAlgebra forget_provenance(FDAlgebra a) {
  a.prov.reset();
  return a;
}

}  // namespace dualco::testing
