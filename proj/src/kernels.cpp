#include "dualco/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dualco::kernels {

Mat mul_serial(const Field& F, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw check_error("mul: shape mismatch");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (sgn(aik.get_num()) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (sgn(bkj.get_num()) == 0) continue;
        c.at(i, j) = F.add(c.at(i, j), F.mul(aik, bkj));
      }
    }
  return c;
}

Mat mul_parallel(const Field& F, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw check_error("mul: shape mismatch");
  Mat c(a.rows(), b.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (sgn(aik.get_num()) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (sgn(bkj.get_num()) == 0) continue;
        c.at(i, j) = F.add(c.at(i, j), F.mul(aik, bkj));
      }
    }
  return c;
}

Mat tensor_serial(const Field& F, const Mat& a, const Mat& b) {
  Mat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& v = a.at(i1, j1);
      if (sgn(v.get_num()) == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          c.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = F.mul(v, b.at(i2, j2));
    }
  return c;
}

Mat tensor_parallel(const Field& F, const Mat& a, const Mat& b) {
  Mat c(a.rows() * b.rows(), a.cols() * b.cols());
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic)
#endif
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& v = a.at(i1, j1);
      if (sgn(v.get_num()) == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          c.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = F.mul(v, b.at(i2, j2));
    }
  return c;
}

void eliminate_column_serial(const Field& F, Mat& m, std::size_t pr, std::size_t pc) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == pr) continue;
    const Scalar f = m.at(i, pc);
    if (sgn(f.get_num()) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(pr, j)));
  }
}

void eliminate_column_parallel(const Field& F, Mat& m, std::size_t pr, std::size_t pc) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == pr) continue;
    const Scalar f = m.at(i, pc);
    if (sgn(f.get_num()) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(pr, j)));
  }
}

namespace {

bool use_parallel(std::size_t work) {
#ifdef _OPENMP
  return work >= kParallelThreshold;
#else
  (void)work;
  return false;
#endif
}

}  // namespace

Mat mul(const Field& F, const Mat& a, const Mat& b) {
  return use_parallel(a.rows() * b.cols()) ? mul_parallel(F, a, b) : mul_serial(F, a, b);
}

Mat tensor(const Field& F, const Mat& a, const Mat& b) {
  return use_parallel(a.rows() * b.rows() * a.cols() * b.cols())
             ? tensor_parallel(F, a, b)
             : tensor_serial(F, a, b);
}

void eliminate_column(const Field& F, Mat& m, std::size_t pr, std::size_t pc) {
  if (use_parallel(m.rows() * m.cols()))
    eliminate_column_parallel(F, m, pr, pc);
  else
    eliminate_column_serial(F, m, pr, pc);
}

}  // namespace dualco::kernels
