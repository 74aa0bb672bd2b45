#include "dualco/matrix.hpp"

#include <sstream>

#include "dualco/kernels.hpp"

namespace dualco {

Mat::Mat(std::size_t rows, std::size_t cols, std::initializer_list<long> entries)
    : rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {
  if (entries.size() != rows * cols) throw check_error("matrix literal size mismatch");
  std::size_t k = 0;
  for (long v : entries) e_[k++] = Scalar(v);
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Mat::is_zero() const {
  for (const Scalar& v : e_)
    if (sgn(v.get_num()) != 0) return false;
  return true;
}

Mat Mat::vstack(const Mat& b) const {
  if (empty() && rows_ == 0) {
    if (cols_ == 0 || cols_ == b.cols()) return b;
  }
  if (b.rows() == 0) return *this;
  if (cols_ != b.cols()) throw check_error("vstack: column mismatch");
  Mat r(rows_ + b.rows_, cols_);
  r.e_ = e_;
  r.e_.insert(r.e_.end(), b.e_.begin(), b.e_.end());
  return r;
}

Mat Mat::hstack(const Mat& b) const {
  if (rows_ != b.rows_) throw check_error("hstack: row mismatch");
  Mat r(rows_, cols_ + b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, cols_ + j) = b.at(i, j);
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::submatrix(std::size_t i0, std::size_t j0, std::size_t nrows, std::size_t ncols) const {
  if (i0 + nrows > rows_ || j0 + ncols > cols_) throw check_error("submatrix out of range");
  Mat r(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
  return r;
}

Mat Mat::select_cols(const std::vector<std::size_t>& js) const {
  Mat r(rows_, js.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < js.size(); ++j) r.at(i, j) = at(i, js[j]);
  return r;
}

Mat Mat::select_rows(const std::vector<std::size_t>& is) const {
  Mat r(is.size(), cols_);
  for (std::size_t i = 0; i < is.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(is[i], j);
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

Mat mat_add(const Field& F, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw check_error("add: shape mismatch");
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  return r;
}

Mat mat_sub(const Field& F, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw check_error("sub: shape mismatch");
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
  return r;
}

Mat mat_scale(const Field& F, const Scalar& c, const Mat& a) {
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = F.mul(c, a.at(i, j));
  return r;
}

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) { return kernels::mul(F, a, b); }

Mat mat_tensor(const Field& F, const Mat& a, const Mat& b) { return kernels::tensor(F, a, b); }

Vec mat_apply(const Field& F, const Mat& a, const Vec& x) {
  if (a.cols() != x.size()) throw check_error("apply: shape mismatch");
  Vec y(a.rows(), Scalar(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a.at(i, j).get_num()) == 0 || sgn(x[j].get_num()) == 0) continue;
      y[i] = F.add(y[i], F.mul(a.at(i, j), x[j]));
    }
  return y;
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw check_error("vec_add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw check_error("vec_sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& F, const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const Scalar& v : a)
    if (sgn(v.get_num()) != 0) return false;
  return true;
}

RrefResult rref(const Field& F, Mat a) {
  RrefResult res;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pr = r;
    while (pr < a.rows() && F.is_zero(a.at(pr, c))) ++pr;
    if (pr == a.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
    const Scalar piv_inv = F.inv(a.at(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = F.mul(piv_inv, a.at(r, j));
    kernels::eliminate_column(F, a, r, c);
    pivots.push_back(c);
    ++r;
  }
  res.mat = std::move(a);
  res.pivots = std::move(pivots);
  return res;
}

std::size_t rank(const Field& F, const Mat& a) { return rref(F, a).pivots.size(); }

bool solve(const Field& F, const Mat& a, const Mat& b, Mat& x) {
  if (a.rows() != b.rows()) throw check_error("solve: shape mismatch");
  RrefResult r = rref(F, a.hstack(b));
  x = Mat(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) return false;  // pivot in the rhs block: inconsistent
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(r.pivots[i], j) = r.mat.at(i, a.cols() + j);
  }
  return true;
}

}  // namespace dualco
