#pragma once
// Wedderburn machinery for split algebras: simple modules, primitive
// idempotents, basic algebra.  Splitting is done by exact idempotent
// arithmetic: minimal polynomials of candidate elements, rational/F_p root
// enumeration, CRT idempotents, Newton lifting along the radical.  Algebras
// whose semisimple quotient is not split over the ground field are rejected
// with an unsupported-field error; no division-algebra (species) handling.

#include "dualco/algebra.hpp"

namespace dualco {

struct SimpleDescriptor {
  std::size_t index = 0;
  std::string label;
  std::size_t dim = 0;            // n_S
  std::vector<Mat> action;        // action[i]: n x n matrix of basis b_i
  Vec idem;                       // a lifted primitive idempotent of this class, in A
};

struct SimplesResult {
  Subspace rad;
  std::vector<SimpleDescriptor> simples;
};

// One descriptor per isomorphism class of simple left modules.
SimplesResult simples(const FDAlgebra& a);

// eAe for e a sum of one primitive idempotent per simple class.  Returns the
// input unchanged when it is already basic.
FDAlgebra basic_algebra(const FDAlgebra& a);

// Data underpinning projective covers over a basic algebra.
struct BasicData {
  std::size_t nsimple = 0;
  std::vector<std::string> labels;
  std::vector<Vec> idem;                       // orthogonal primitives summing to 1
  Subspace rad;                                // J
  std::vector<Subspace> proj;                  // proj[v] = A·e_v
  std::vector<std::vector<Subspace>> corner;   // corner[u][v] = e_u·A·e_v
};

// Throws input_error if a is not basic.
BasicData basic_data(const FDAlgebra& a);

// Decomposes the idempotent e of the commutative subalgebra spanned by
// comm_basis (all elements commuting, e acting as unit on them) into
// primitive idempotents of that subalgebra.  Blocks that admit no further
// split over the ground field are returned as they are.
std::vector<Vec> split_idempotents_commutative(const FDAlgebra& a,
                                               const std::vector<Vec>& comm_basis, const Vec& e);

// Minimal polynomial (monic, ascending coefficients) of z in a unital
// subalgebra of a with unit u; z must satisfy u·z = z·u = z.
Vec minimal_polynomial(const FDAlgebra& a, const Vec& z, const Vec& u);

// Monic squarefree part; handles the m' = 0 case over F_p.
Vec poly_squarefree(const Field& F, Vec m);
// Roots in the ground field of a monic polynomial.
std::vector<Scalar> poly_roots(const Field& F, const Vec& m);

}  // namespace dualco
