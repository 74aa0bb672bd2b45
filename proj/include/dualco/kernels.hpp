#pragma once
// Hot loops behind the matrix layer: multiplication, Kronecker product and
// the elimination sweep.  Each has a serial reference implementation and an
// OpenMP variant; results agree entry-for-entry because the arithmetic is
// exact (no rounding, so summation order is immaterial).  The public entry
// points dispatch on problem size.  bench/bench_kernels.cpp compares them.

#include <cstddef>

#include "dualco/matrix.hpp"

namespace dualco::kernels {

Mat mul_serial(const Field& F, const Mat& a, const Mat& b);
Mat mul_parallel(const Field& F, const Mat& a, const Mat& b);

Mat tensor_serial(const Field& F, const Mat& a, const Mat& b);
Mat tensor_parallel(const Field& F, const Mat& a, const Mat& b);

// One elimination step: for every row i != pivot_row with m(i, pivot_col) != 0
// subtract m(i, pivot_col) * (pivot row) from row i.  The pivot row must
// already be scaled to have a 1 in pivot_col.
void eliminate_column_serial(const Field& F, Mat& m, std::size_t pivot_row, std::size_t pivot_col);
void eliminate_column_parallel(const Field& F, Mat& m, std::size_t pivot_row, std::size_t pivot_col);

// Size-dispatching entry points used by the matrix layer.
Mat mul(const Field& F, const Mat& a, const Mat& b);
Mat tensor(const Field& F, const Mat& a, const Mat& b);
void eliminate_column(const Field& F, Mat& m, std::size_t pivot_row, std::size_t pivot_col);

// Work threshold (entry count of the output / sweep) above which the
// parallel variant is used when OpenMP is available.
inline constexpr std::size_t kParallelThreshold = 4096;

}  // namespace dualco::kernels
