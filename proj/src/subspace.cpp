#include "dualco/subspace.hpp"

#include <numeric>

namespace dualco {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(ambient);
  s.pivots_.resize(ambient);
  std::iota(s.pivots_.begin(), s.pivots_.end(), 0);
  return s;
}

Subspace Subspace::from_rows(const Field& F, const Mat& rows) {
  RrefResult r = rref(F, rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = r.mat.submatrix(0, 0, r.pivots.size(), rows.cols());
  s.pivots_ = r.pivots;
  return s;
}

Vec Subspace::basis_vec(std::size_t i) const {
  Vec v(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) v[j] = basis_.at(i, j);
  return v;
}

bool Subspace::contains(const Field& F, const Vec& v) const {
  return coords(F, v).has_value();
}

bool Subspace::contains(const Field& F, const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(F, other.basis_vec(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coords(const Field& F, const Vec& v) const {
  if (v.size() != ambient_) throw check_error("coords: ambient mismatch");
  // Echelon basis: the coefficient on row i is forced to be v[pivot_i].
  Vec c(dim());
  Vec rem = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    c[i] = rem[pivots_[i]];
    if (F.is_zero(c[i])) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      rem[j] = F.sub(rem[j], F.mul(c[i], basis_.at(i, j)));
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return c;
}

Subspace kernel(const Field& F, const Mat& m) {
  RrefResult r = rref(F, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  Mat rows(m.cols() - r.pivots.size(), m.cols());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    rows.at(k, f) = Scalar(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      rows.at(k, r.pivots[i]) = F.neg(r.mat.at(i, f));
    ++k;
  }
  return Subspace::from_rows(F, rows);
}

Subspace image(const Field& F, const Mat& m) {
  return Subspace::from_rows(F, m.transpose());
}

Subspace sum(const Field& F, const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw check_error("sum: ambient mismatch");
  return Subspace::from_rows(F, u.basis().vstack(v.basis()));
}

Subspace intersect(const Field& F, const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw check_error("intersect: ambient mismatch");
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.ambient());
  // x in both spans iff x = a * U = b * V; solve U^T a - V^T b = 0.
  Mat m = u.basis().transpose().hstack(mat_scale(F, Scalar(-1), v.basis().transpose()));
  Subspace pairs = kernel(F, m);
  Mat rows(pairs.dim(), u.ambient());
  for (std::size_t i = 0; i < pairs.dim(); ++i)
    for (std::size_t j = 0; j < u.ambient(); ++j) {
      Scalar s(0);
      for (std::size_t a = 0; a < u.dim(); ++a)
        s = F.add(s, F.mul(pairs.basis().at(i, a), u.basis().at(a, j)));
      rows.at(i, j) = s;
    }
  return Subspace::from_rows(F, rows);
}

Subspace preimage(const Field& F, const Mat& f, const Subspace& w) {
  if (f.rows() != w.ambient()) throw check_error("preimage: shape mismatch");
  if (w.dim() == w.ambient()) return Subspace::full(f.cols());
  // Annihilator of w, as rows, then compose with f.
  Subspace ann = kernel(F, w.basis());
  return kernel(F, mat_mul(F, ann.basis(), f));
}

Subspace tensor_sub(const Field& F, const Subspace& u, const Subspace& v) {
  Mat rows(u.dim() * v.dim(), u.ambient() * v.ambient());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      for (std::size_t a = 0; a < u.ambient(); ++a)
        for (std::size_t b = 0; b < v.ambient(); ++b)
          rows.at(i * v.dim() + j, a * v.ambient() + b) =
              F.mul(u.basis().at(i, a), v.basis().at(j, b));
  return Subspace::from_rows(F, rows);
}

Subspace apply(const Field& F, const Mat& f, const Subspace& u) {
  if (f.cols() != u.ambient()) throw check_error("apply: shape mismatch");
  return Subspace::from_rows(F, mat_mul(F, f, u.basis().transpose()).transpose());
}

std::vector<Vec> extend_basis(const Field& F, const Subspace& inner, const Subspace& outer,
                              const std::vector<std::size_t>& order) {
  if (!outer.contains(F, inner)) throw check_error("extend_basis: inner not inside outer");
  std::vector<Vec> chosen;
  Subspace cur = inner;
  for (std::size_t idx : order) {
    if (cur.dim() == outer.dim()) break;
    Vec cand = outer.basis_vec(idx);
    if (cur.contains(F, cand)) continue;
    chosen.push_back(cand);
    Mat one(1, outer.ambient());
    for (std::size_t j = 0; j < outer.ambient(); ++j) one.at(0, j) = cand[j];
    cur = Subspace::from_rows(F, cur.basis().vstack(one));
  }
  if (cur.dim() != outer.dim()) throw check_error("extend_basis: order did not span");
  return chosen;
}

Quotient quotient(const Field& F, const Subspace& u, const Subspace& w) {
  std::vector<std::size_t> order(w.dim());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Vec> reps = extend_basis(F, u, w, order);
  Quotient q;
  q.sub = u;
  q.space = w;
  q.lift = Mat(reps.size(), w.ambient());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < w.ambient(); ++j) q.lift.at(i, j) = reps[i][j];
  return q;
}

Vec Quotient::project(const Field& F, const Vec& v) const {
  // Solve v = a * basis(u) + c * lift; return c.
  Mat m = sub.basis().vstack(lift).transpose();
  Mat b(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) b.at(i, 0) = v[i];
  Mat x;
  if (!solve(F, m, b, x)) throw check_error("quotient projection: vector outside space");
  Vec c(lift.rows());
  for (std::size_t i = 0; i < lift.rows(); ++i) c[i] = x.at(sub.dim() + i, 0);
  return c;
}

}  // namespace dualco
