#pragma once
// The dg-algebra E of chain endomorphisms of the total minimal resolution
// P = ⊕_v P_•(S_v), materialized in cohomological degrees 0..top.
//
// A degree-n element has components comp[j]: P_{n+j} -> P_j stored as
// AlgMats over the total summand lists; the differential is the graded
// commutator D(f) = d∘f − (−1)^n f∘d and the product is composition (right
// factor applied first).  Flat coordinates enumerate, per component, the
// corner space e_{src}·A·e_{dst} of every slot pair; cocycle classes are
// read off the degree-0 component through the top functionals, which kills
// boundaries because minimal differentials have radical entries.

#include "dualco/ext.hpp"

namespace dualco {

// Flat coordinates on the Yoneda space ⊕_{v,w} Ext^n(S_v, S_w): the (v, w)
// block starts at yoneda_offset and has length dims[n][v][w].
std::size_t yoneda_dim(const ExtData& ed, std::size_t n);
std::size_t yoneda_offset(const ExtData& ed, std::size_t n, std::size_t v, std::size_t w);

struct HomComplex {
  std::size_t L = 0;    // homological cutoff of the resolutions
  std::size_t top = 0;  // highest dg degree with flat coordinates
  std::vector<ProjSum> tot;                     // tot[k] = ⊕_v P_k(res v)
  std::vector<AlgMat> dtot;                     // tot[k+1] -> tot[k], block diagonal
  std::vector<std::vector<std::size_t>> block;  // block[k][v] = first slot of res v

  struct Block {
    std::size_t j = 0, t = 0, s = 0;       // component and slot pair
    std::size_t src_v = 0, dst_v = 0;      // corner e_{src_v}·A·e_{dst_v}
    std::size_t offset = 0, dim = 0;       // flat coordinate range
  };
  std::vector<std::vector<Block>> blocks;  // per degree n = 0..top
  std::vector<std::size_t> dim;            // dim E^n, n = 0..top
};

// Requires top <= L.
HomComplex hom_complex(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                       std::size_t top);

struct DgElem {
  std::size_t deg = 0;
  std::vector<AlgMat> comp;  // comp[j]: tot[deg+j] -> tot[j], j = 0..L-deg
};

DgElem dg_zero(const FDAlgebra& a, const HomComplex& hc, std::size_t n);
DgElem dg_add(const FDAlgebra& a, const DgElem& f, const DgElem& g);
DgElem dg_scale(const FDAlgebra& a, const Scalar& c, const DgElem& f);
bool dg_is_zero(const DgElem& f);
// f∘g, g applied first; degrees add (sum <= L).
DgElem dg_mul(const FDAlgebra& a, const HomComplex& hc, const DgElem& f, const DgElem& g);
// D(f); requires deg f < L.
DgElem dg_diff(const FDAlgebra& a, const HomComplex& hc, const DgElem& f);

Vec dg_to_vec(const FDAlgebra& a, const BasicData& bd, const HomComplex& hc, const DgElem& f);
DgElem dg_from_vec(const FDAlgebra& a, const BasicData& bd, const HomComplex& hc, std::size_t n,
                   const Vec& x);
// Matrix of D: E^n -> E^{n+1} in flat coordinates (n < top).
Mat dg_diff_matrix(const FDAlgebra& a, const BasicData& bd, const HomComplex& hc, std::size_t n);

// Class of a cocycle (defined on all of E^n, kills boundaries).
Vec dg_class(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, const HomComplex& hc,
             const DgElem& f);
// Canonical cocycle embedding of a Yoneda vector: ext_rep lifts, with the
// components twisted by (−1)^{n·j} to turn strict chain maps into D-cocycles.
DgElem dg_include(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                  const HomComplex& hc, std::size_t n, const Vec& x);

}  // namespace dualco
