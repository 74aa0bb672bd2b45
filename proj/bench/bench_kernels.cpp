// Serial reference vs OpenMP kernels on the three hot loops.  Run with
// --benchmark_filter=mul etc.; sizes straddle kParallelThreshold so the
// dispatch crossover is visible.  Each benchmark verifies agreement once
// before timing.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <stdexcept>

#include "dualco/field.hpp"
#include "dualco/kernels.hpp"
#include "dualco/matrix.hpp"

using namespace dualco;
using namespace dualco::kernels;

namespace {

// xorshift64; deterministic inputs so serial/parallel runs see the same work
std::uint64_t nxt(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

Mat random_mat(const Field& F, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Mat m(rows, cols);
  std::uint64_t s = seed ? seed : 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = F.from_long((long)(nxt(s) % 17) - 8);
  return m;
}

void require(bool ok) {
  if (!ok) throw std::runtime_error("serial and parallel kernels disagree");
}

void bm_mul_serial(benchmark::State& state) {
  Field F = Field::prime(32003);
  const auto n = (std::size_t)state.range(0);
  Mat a = random_mat(F, n, n, 1), b = random_mat(F, n, n, 2);
  require(mul_serial(F, a, b) == mul_parallel(F, a, b));
  for (auto _ : state) benchmark::DoNotOptimize(mul_serial(F, a, b));
}

void bm_mul_parallel(benchmark::State& state) {
  Field F = Field::prime(32003);
  const auto n = (std::size_t)state.range(0);
  Mat a = random_mat(F, n, n, 1), b = random_mat(F, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(F, a, b));
}

void bm_mul_rational_serial(benchmark::State& state) {
  Field F = Field::rationals();
  const auto n = (std::size_t)state.range(0);
  Mat a = random_mat(F, n, n, 1), b = random_mat(F, n, n, 2);
  require(mul_serial(F, a, b) == mul_parallel(F, a, b));
  for (auto _ : state) benchmark::DoNotOptimize(mul_serial(F, a, b));
}

void bm_mul_rational_parallel(benchmark::State& state) {
  Field F = Field::rationals();
  const auto n = (std::size_t)state.range(0);
  Mat a = random_mat(F, n, n, 1), b = random_mat(F, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(F, a, b));
}

void bm_tensor_serial(benchmark::State& state) {
  Field F = Field::prime(32003);
  const auto n = (std::size_t)state.range(0);
  Mat a = random_mat(F, n, n, 3), b = random_mat(F, n, n, 4);
  require(tensor_serial(F, a, b) == tensor_parallel(F, a, b));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_serial(F, a, b));
}

void bm_tensor_parallel(benchmark::State& state) {
  Field F = Field::prime(32003);
  const auto n = (std::size_t)state.range(0);
  Mat a = random_mat(F, n, n, 3), b = random_mat(F, n, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_parallel(F, a, b));
}

Mat pivot_ready(const Field& F, std::size_t n) {
  Mat m = random_mat(F, n, n, 5);
  m.at(0, 0) = F.one();
  return m;
}

void bm_eliminate_serial(benchmark::State& state) {
  Field F = Field::prime(32003);
  const auto n = (std::size_t)state.range(0);
  Mat base = pivot_ready(F, n);
  {
    Mat x = base, y = base;
    eliminate_column_serial(F, x, 0, 0);
    eliminate_column_parallel(F, y, 0, 0);
    require(x == y);
  }
  for (auto _ : state) {
    state.PauseTiming();
    Mat m = base;
    state.ResumeTiming();
    eliminate_column_serial(F, m, 0, 0);
    benchmark::DoNotOptimize(m);
  }
}

void bm_eliminate_parallel(benchmark::State& state) {
  Field F = Field::prime(32003);
  const auto n = (std::size_t)state.range(0);
  Mat base = pivot_ready(F, n);
  for (auto _ : state) {
    state.PauseTiming();
    Mat m = base;
    state.ResumeTiming();
    eliminate_column_parallel(F, m, 0, 0);
    benchmark::DoNotOptimize(m);
  }
}

}  // namespace

BENCHMARK(bm_mul_serial)->Arg(32)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_mul_parallel)->Arg(32)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_mul_rational_serial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bm_mul_rational_parallel)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bm_tensor_serial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_tensor_parallel)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_eliminate_serial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_eliminate_parallel)->Arg(64)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
