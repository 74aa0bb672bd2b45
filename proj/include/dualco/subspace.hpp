#pragma once
// Subspaces of k^n in canonical form: the basis is stored as the rows of a
// reduced row echelon matrix, so two equal subspaces have identical
// representations and equality is a plain comparison.

#include <optional>
#include <vector>

#include "dualco/matrix.hpp"

namespace dualco {

class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  // Row span of the given matrix.
  static Subspace from_rows(const Field& F, const Mat& rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  // dim x ambient, reduced echelon.
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vec(std::size_t i) const;

  bool contains(const Field& F, const Vec& v) const;
  bool contains(const Field& F, const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Coefficients of v in the echelon basis; nullopt if v is outside.
  std::optional<Vec> coords(const Field& F, const Vec& v) const;

 private:
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

// Right null space {x : m x = 0}.
Subspace kernel(const Field& F, const Mat& m);
// Column span of m.
Subspace image(const Field& F, const Mat& m);
Subspace intersect(const Field& F, const Subspace& u, const Subspace& v);
Subspace sum(const Field& F, const Subspace& u, const Subspace& v);
// {x : f x in w}, f an (ambient of w) x n matrix.
Subspace preimage(const Field& F, const Mat& f, const Subspace& w);
// Span of u (x) v inside k^(ambient(u) * ambient(v)), Kronecker index order.
Subspace tensor_sub(const Field& F, const Subspace& u, const Subspace& v);
// f(u) for f acting on columns.
Subspace apply(const Field& F, const Mat& f, const Subspace& u);

// Greedily extends inner's basis to a basis of outer, drawing candidates
// from outer's basis rows in the given traversal order (a permutation of
// 0..dim(outer)-1).  Returns the chosen complement vectors.
std::vector<Vec> extend_basis(const Field& F, const Subspace& inner, const Subspace& outer,
                              const std::vector<std::size_t>& order);

// Finite-dimensional quotient w / u with a fixed set of lifted
// representatives, supporting projection of vectors of w.
struct Quotient {
  Subspace sub;    // u
  Subspace space;  // w
  Mat lift;        // q x ambient, rows are representatives of the quotient basis

  std::size_t dim() const { return lift.rows(); }
  // Coordinates of v + u in the quotient basis; v must lie in w.
  Vec project(const Field& F, const Vec& v) const;
};

Quotient quotient(const Field& F, const Subspace& u, const Subspace& w);

}  // namespace dualco
