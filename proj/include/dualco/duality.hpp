#pragma once
// Kostant duality at finite-dimensional scale: transposing an algebra
// morphism A -> C* yields a coalgebra morphism C -> A* and vice versa, a
// bijection alg(A, C*) = coalg(C, A*).  Morphism predicates return the
// first violated pair so rejections carry a witness.

#include "dualco/coalgebra.hpp"

namespace dualco {

// f is a dim(B) x dim(A) matrix.  On failure, *witness holds the violating
// basis pair (i, j), or (dim A, dim A) for the unit.
bool is_algebra_morphism(const FDAlgebra& A, const FDAlgebra& B, const Mat& f,
                         std::pair<std::size_t, std::size_t>* witness = nullptr);

// f is a dim(D) x dim(C) matrix; checks Delta ∘ f = (f (x) f) ∘ Delta and
// epsilon ∘ f = epsilon.  On failure *why names the broken law.
bool is_coalgebra_morphism(const Coalgebra& C, const Coalgebra& D, const Mat& f,
                           std::string* why = nullptr);

// f: A -> dual_algebra(c) as a dim(c) x dim(A) matrix, verified
// multiplicative and unital (input_error with witness otherwise).  Returns
// the transpose c -> dual_coalgebra_fd(A), verified to be a coalgebra
// morphism; transposing back recovers f.
Mat kostant_transpose(const FDAlgebra& a, const Coalgebra& c, const Mat& f);

// phi: A -> B verified algebra morphism (input_error otherwise); returns
// the transpose B* -> A*, verified to be a coalgebra morphism.
// Contravariant: dual_morphism(psi ∘ phi) = dual_morphism(phi) ∘
// dual_morphism(psi).
Mat dual_morphism(const FDAlgebra& a, const FDAlgebra& b, const Mat& phi);

}  // namespace dualco
