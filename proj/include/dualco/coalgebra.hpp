#pragma once
// Coalgebras as structure constants.
//
// delta is a (d*d) x d matrix: column k holds the coefficients of
// Delta(b_k) in the flattened tensor basis b_i (x) b_j at index i*d + j,
// matching the Kronecker order of mat_tensor and tensor_sub.  Dualizing a
// finite-dimensional algebra transposes its multiplication table into delta
// (A° = A* in finite dimension: every ideal has finite codimension), and
// dualizing a coalgebra yields the convolution algebra with unit epsilon;
// the double dual is the identity on structure constants.

#include "dualco/algebra.hpp"

namespace dualco {

struct Coalgebra {
  Field field;
  std::vector<std::string> basis_names;
  Mat delta;   // (d*d) x d
  Vec counit;  // epsilon(b_k)

  std::size_t dim() const { return basis_names.size(); }
  Vec basis_vec(std::size_t i) const;
  // Delta(x), flattened.
  Vec comul(const Vec& x) const;
  Scalar eps(const Vec& x) const;
  std::string elem_str(const Vec& x) const;
};

// Coassociativity and both counit laws as matrix identities; throws
// check_error on violation.
void check_coalgebra(const Coalgebra& c);

Coalgebra dual_coalgebra_fd(const FDAlgebra& a);
FDAlgebra dual_algebra(const Coalgebra& c);

// The coalgebra structure induced on a Delta-closed subspace, in its echelon
// basis; throws check_error if Delta does not restrict.
Coalgebra sub_coalgebra(const Coalgebra& c, const Subspace& d);

// Annihilator of the radical of the dual algebra: the sum of all simple
// subcoalgebras.  Verified Delta-closed with semisimple dual.
Subspace coradical(const Coalgebra& c);

// Ascending wedge filtration C_n = Delta^{-1}(C (x) C_{n-1} + C_0 (x) C),
// C_0 the coradical.  layers.back() is the whole space; stable is the index
// at which the chain stops growing.
struct Filtration {
  std::vector<Subspace> layers;
  std::size_t stable = 0;
  std::vector<std::size_t> dims() const;
};
Filtration coradical_filtration(const Coalgebra& c);

// Largest subcoalgebra contained in w: descending iteration
// D <- D ∩ Delta^{-1}(D (x) C ∩ C (x) D) to its first fixed point.  The
// result is Delta-closed (asserted); it equals the sum of all subcoalgebras
// of c contained in w.
Subspace max_subcoalgebra_in(const Coalgebra& c, const Subspace& w);

// Decomposition of a pointed coalgebra into its irreducible components:
// group-likes are linked through nontrivial skew-primitives (the degree-one
// filtration layer), and each component is cut out by the corresponding
// block idempotent of the dual algebra acting on both sides.  Throws
// input_error when some simple subcoalgebra has dimension > 1.
struct PointedComponents {
  std::vector<Vec> grouplikes;                   // one per simple subcoalgebra
  std::vector<std::vector<std::size_t>> groups;  // partition of group-like indices
  std::vector<Subspace> components;              // direct summands, same order
};
PointedComponents pointed_components(const Coalgebra& c);

}  // namespace dualco
