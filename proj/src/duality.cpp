#include "dualco/duality.hpp"

namespace dualco {

namespace {

Vec col(const Mat& m, std::size_t j) {
  Vec v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

}  // namespace

bool is_algebra_morphism(const FDAlgebra& A, const FDAlgebra& B, const Mat& f,
                         std::pair<std::size_t, std::size_t>* witness) {
  if (f.rows() != B.dim() || f.cols() != A.dim())
    throw input_error("is_algebra_morphism: matrix shape does not match the algebras");
  const Field& F = A.field;
  if (!vec_is_zero(vec_sub(F, mat_apply(F, f, A.unit), B.unit))) {
    if (witness) *witness = {A.dim(), A.dim()};
    return false;
  }
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec lhs = mat_apply(F, f, A.table[i][j]);
      Vec rhs = B.mul(col(f, i), col(f, j));
      if (!vec_is_zero(vec_sub(F, lhs, rhs))) {
        if (witness) *witness = {i, j};
        return false;
      }
    }
  }
  return true;
}

bool is_coalgebra_morphism(const Coalgebra& C, const Coalgebra& D, const Mat& f,
                           std::string* why) {
  if (f.rows() != D.dim() || f.cols() != C.dim())
    throw input_error("is_coalgebra_morphism: matrix shape does not match the coalgebras");
  const Field& F = C.field;
  for (std::size_t k = 0; k < C.dim(); ++k) {
    Scalar e = D.eps(col(f, k));
    if (!F.is_zero(F.sub(e, C.counit[k]))) {
      if (why) *why = "counit law at " + C.basis_names[k];
      return false;
    }
  }
  Mat lhs = mat_mul(F, D.delta, f);
  Mat rhs = mat_mul(F, mat_tensor(F, f, f), C.delta);
  for (std::size_t k = 0; k < C.dim(); ++k) {
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
      if (!F.is_zero(F.sub(lhs.at(i, k), rhs.at(i, k)))) {
        if (why) *why = "comultiplication law at " + C.basis_names[k];
        return false;
      }
    }
  }
  return true;
}

namespace {

[[noreturn]] void morphism_error(const FDAlgebra& A, const std::string& who,
                                 std::pair<std::size_t, std::size_t> w) {
  if (w.first == A.dim())
    throw input_error(who + ": map does not preserve the unit");
  throw input_error(who + ": map is not multiplicative on (" + A.basis_names[w.first] +
                    ", " + A.basis_names[w.second] + ")");
}

}  // namespace

Mat kostant_transpose(const FDAlgebra& a, const Coalgebra& c, const Mat& f) {
  FDAlgebra da = dual_algebra(c);
  std::pair<std::size_t, std::size_t> w;
  if (!is_algebra_morphism(a, da, f, &w)) morphism_error(a, "kostant_transpose", w);
  Mat g = f.transpose();
  std::string why;
  if (!is_coalgebra_morphism(c, dual_coalgebra_fd(a), g, &why))
    throw check_error("kostant_transpose: transpose violates the " + why);
  return g;
}

Mat dual_morphism(const FDAlgebra& a, const FDAlgebra& b, const Mat& phi) {
  std::pair<std::size_t, std::size_t> w;
  if (!is_algebra_morphism(a, b, phi, &w)) morphism_error(a, "dual_morphism", w);
  Mat g = phi.transpose();
  std::string why;
  if (!is_coalgebra_morphism(dual_coalgebra_fd(b), dual_coalgebra_fd(a), g, &why))
    throw check_error("dual_morphism: transpose violates the " + why);
  return g;
}

}  // namespace dualco
