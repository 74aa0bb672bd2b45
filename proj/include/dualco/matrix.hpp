#pragma once
// Dense exact matrices.  Column convention throughout: an r x c matrix is a
// linear map k^c -> k^r acting by left multiplication, composition is the
// usual product.  Row vectors appear only inside Subspace, which stores its
// basis as the rows of an echelon matrix.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dualco/field.hpp"

namespace dualco {

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {}
  // Row-major literal, e.g. Mat(2, 2, {1, 2, 3, 4}).
  Mat(std::size_t rows, std::size_t cols, std::initializer_list<long> entries);

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Scalar* row_data(std::size_t i) { return e_.data() + i * cols_; }
  const Scalar* row_data(std::size_t i) const { return e_.data() + i * cols_; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const;

  // Stacks rows of b below this matrix (column counts must agree).
  Mat vstack(const Mat& b) const;
  // Places b to the right of this matrix (row counts must agree).
  Mat hstack(const Mat& b) const;
  Mat transpose() const;
  Mat submatrix(std::size_t i0, std::size_t j0, std::size_t nrows, std::size_t ncols) const;
  Mat select_cols(const std::vector<std::size_t>& js) const;
  Mat select_rows(const std::vector<std::size_t>& is) const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

// A column vector as a plain coefficient list.
using Vec = std::vector<Scalar>;

Mat mat_add(const Field& F, const Mat& a, const Mat& b);
Mat mat_sub(const Field& F, const Mat& a, const Mat& b);
Mat mat_scale(const Field& F, const Scalar& c, const Mat& a);
Mat mat_mul(const Field& F, const Mat& a, const Mat& b);
// Kronecker product: (a (x) b)((i1,i2),(j1,j2)) = a(i1,j1) b(i2,j2),
// row index i1 * b.rows + i2, column index j1 * b.cols + j2.
Mat mat_tensor(const Field& F, const Mat& a, const Mat& b);

Vec mat_apply(const Field& F, const Mat& a, const Vec& x);
Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_sub(const Field& F, const Vec& a, const Vec& b);
Vec vec_scale(const Field& F, const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);

struct RrefResult {
  Mat mat;                        // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Gauss-Jordan elimination; canonical over any field.
RrefResult rref(const Field& F, Mat a);
std::size_t rank(const Field& F, const Mat& a);

// Solves a * x = b for one x (cols(b) right-hand sides); returns false if any
// system is inconsistent.  x has shape cols(a) x cols(b).
bool solve(const Field& F, const Mat& a, const Mat& b, Mat& x);

}  // namespace dualco
