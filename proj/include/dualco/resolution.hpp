#pragma once
// Left modules, projective covers and minimal projective resolutions over a
// basic algebra.
//
// A morphism between direct sums of the indecomposable projectives P(v) =
// A·e_v is stored as an AlgMat: entry[t][s] is the image of the slot-s
// generator in the summand A·e_{dst_t}, an algebra element x with
// e_{src_s}·x = x and x·e_{dst_t} = x.  The morphism acts by right
// multiplication, so composition concatenates entries with the algebra
// product; alg_expand turns an AlgMat into the scalar matrix on projective
// coordinates and intertwines composition with matrix product.

#include "dualco/semisimple.hpp"

namespace dualco {

struct LeftModule {
  std::size_t dim = 0;
  std::vector<Mat> action;  // one dim x dim matrix per algebra basis element
};

// Throws check_error unless the action is a unital homomorphism.
void check_module(const FDAlgebra& a, const LeftModule& m);
// Action of an arbitrary algebra element.
Mat module_act(const FDAlgebra& a, const LeftModule& m, const Vec& x);
// A as a left module over itself.
LeftModule regular_module(const FDAlgebra& a);
// Restriction of the action to an invariant subspace, in its echelon basis.
LeftModule restrict_module(const FDAlgebra& a, const LeftModule& m, const Subspace& w);

// A finite direct sum of indecomposable projectives, by summand vertices.
struct ProjSum {
  std::vector<std::size_t> verts;
};

std::size_t proj_dim(const BasicData& bd, const ProjSum& p);
std::vector<std::size_t> proj_offsets(const BasicData& bd, const ProjSum& p);
LeftModule proj_module(const FDAlgebra& a, const BasicData& bd, const ProjSum& p);

struct AlgMat {
  std::vector<std::size_t> dst, src;  // summand vertices
  std::vector<std::vector<Vec>> e;    // e[t][s], an element of e_{src_s}·A·e_{dst_t}
};

AlgMat alg_zero(const FDAlgebra& a, std::vector<std::size_t> dst, std::vector<std::size_t> src);
AlgMat alg_add(const FDAlgebra& a, const AlgMat& x, const AlgMat& y);
AlgMat alg_scale(const FDAlgebra& a, const Scalar& c, const AlgMat& x);
// psi after phi; requires phi.dst == psi.src.
AlgMat alg_compose(const FDAlgebra& a, const AlgMat& psi, const AlgMat& phi);
bool alg_is_zero(const AlgMat& m);
// Scalar matrix on projective coordinates (proj_dim(dst) x proj_dim(src)).
Mat alg_expand(const FDAlgebra& a, const BasicData& bd, const AlgMat& m);
// Throws check_error unless every entry satisfies its corner constraints.
void alg_check(const FDAlgebra& a, const BasicData& bd, const AlgMat& m);

// The functional A·e_v -> k picking the coefficient of e_v modulo J·e_v
// (top of the projective), as a 1 x dim(A·e_v) row on projective coordinates.
Mat top_row(const FDAlgebra& a, const BasicData& bd, std::size_t v);

struct CoverResult {
  ProjSum p;
  Mat sur;                // dim(M) x proj_dim(p), surjective with kernel in J·P
  std::vector<Vec> gens;  // image of each slot generator, in M coordinates
};

// Projective cover P(top M) ->> M; gens[k] is e_{w_k}-weighted.
CoverResult projective_cover(const FDAlgebra& a, const BasicData& bd, const LeftModule& m);

struct Resolution {
  std::size_t simple = 0;        // vertex v of the resolved simple S_v
  std::vector<ProjSum> mods;     // P_0 .. P_L
  std::vector<AlgMat> d;         // d[i] : P_{i+1} -> P_i
  Mat aug;                       // P_0 = A·e_v ->> S_v, normalized so e_v -> 1
};

// Minimal resolution of S_v to homological degree L (L >= 1).  Exactness,
// minimality and d∘d = 0 are asserted at every computed stage.
Resolution minimal_resolution(const FDAlgebra& a, const BasicData& bd, std::size_t v,
                              std::size_t L);

}  // namespace dualco
