#pragma once
// Finite-dimensional associative algebras as structure constants.
//
// Product convention: for a quiver algebra, basis classes are paths and
// b·c = [concat(path(c), path(b))], the function-composition order.  Under
// this convention A·e_v is spanned by paths with source v, and e_u·A·e_v by
// paths from v to u; left modules and Ext directions follow from it (see
// docs/conventions.md).

#include <optional>
#include <string>
#include <vector>

#include "dualco/quiver.hpp"
#include "dualco/subspace.hpp"

namespace dualco {

struct QuiverProvenance {
  Quiver quiver;
  std::size_t truncate = 0;       // N: ideal contains all paths of length >= N
  std::vector<Path> basis_paths;  // representative path of each basis class
};

struct FDAlgebra {
  Field field;
  std::vector<std::string> basis_names;
  // table[i][j] = coordinates of b_i · b_j
  std::vector<std::vector<Vec>> table;
  Vec unit;
  std::optional<QuiverProvenance> prov;

  std::size_t dim() const { return basis_names.size(); }

  Vec basis_vec(std::size_t i) const;
  Vec mul(const Vec& x, const Vec& y) const;
  // Matrix of a ↦ x·a.
  Mat left_mult(const Vec& x) const;
  // Matrix of a ↦ a·x.
  Mat right_mult(const Vec& x) const;
  Scalar trace_left_mult(const Vec& x) const;

  std::string elem_str(const Vec& x) const;
};

// Structural checks (throw check_error on violation).
void check_unital(const FDAlgebra& a);
void check_associative(const FDAlgebra& a);

// Jacobson radical.  Quiver provenance: span of positive-length classes.
// Generic over Q: radical of the trace form.  Generic over F_p: unsupported.
Subspace radical(const FDAlgebra& a);

// J^k from an ideal subspace (k >= 1), and the nilpotency index of J
// (smallest m with J^m = 0).
Subspace ideal_power(const FDAlgebra& a, const Subspace& j, std::size_t k);
std::size_t nilpotency_index(const FDAlgebra& a, const Subspace& j);

// Left/right multiplication stability of a subspace: x·W ⊆ W and W·x ⊆ W
// for all basis x (two-sided ideal test when W ⊆ A).
bool is_two_sided_ideal(const FDAlgebra& a, const Subspace& w);

// Smallest two-sided ideal containing the span of the given vectors.
Subspace ideal_closure(const FDAlgebra& a, const Subspace& seed);

// The quotient algebra A/I for a two-sided ideal I, with the projection
// matrix (dim(A/I) x dim A) and a lift of the quotient basis.
struct QuotientAlgebra {
  FDAlgebra alg;
  Mat proj;  // coordinates map A -> A/I
  Mat lift;  // rows: representatives in A of the quotient basis
};
QuotientAlgebra quotient_algebra(const FDAlgebra& a, const Subspace& ideal,
                                 const std::string& name_prefix);

}  // namespace dualco
