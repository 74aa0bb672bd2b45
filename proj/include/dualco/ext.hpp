#pragma once
// Ext between simples via minimal resolutions, Yoneda products, and the
// Ext^1 quiver.
//
// A degree-n class in Ext(S_v, S_w) is represented by a chain map from the
// resolution of S_v, shifted down by n, to the resolution of S_w.  Because
// the resolutions are minimal, dim Ext^n(S_v, S_w) is the number of summands
// P(w) in the n-th term of the resolution of S_v, and the class of a chain
// map is read off from its degree-zero component through the top functional;
// any two lifts of the same bottom component give the same class.

#include "dualco/resolution.hpp"

namespace dualco {

struct ChainMap {
  std::size_t src = 0, dst = 0;  // simple indices
  std::size_t deg = 0;
  // comp[j] : P_{deg+j}(res src) -> P_j(res dst), j = 0 .. L-deg.
  std::vector<AlgMat> comp;
};

struct ExtData {
  std::size_t L = 0;
  std::vector<Resolution> res;  // one minimal resolution per simple
  // dims[n][v][w] = dim Ext^n(S_v, S_w), n = 0..L.
  std::vector<std::vector<std::vector<std::size_t>>> dims;
};

ExtData ext_data(const FDAlgebra& a, const BasicData& bd, std::size_t L);

// Convenience: Ext dimensions of an arbitrary split algebra, reduced to its
// basic algebra first.
std::vector<std::vector<std::vector<std::size_t>>> ext_dims(const FDAlgebra& a, std::size_t L);

// Slot positions of P(w) summands inside the n-th term of the resolution
// of S_v; its length is dims[n][v][w].
std::vector<std::size_t> ext_slots(const ExtData& ed, std::size_t n, std::size_t v,
                                   std::size_t w);

// Throws check_error unless f is a chain map (all squares commute).
void check_chain_map(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                     const ChainMap& f);

// The canonical representative of the k-th basis class of Ext^n(S_v, S_w):
// bottom component the slot projection P_n(res v) ->> P(w) at ext_slots' k-th
// position, lifted to a full chain map.
ChainMap ext_rep(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, std::size_t n,
                 std::size_t v, std::size_t w, std::size_t k);

// Class vector of a chain map in the basis dual to ext_slots(deg, src, dst).
Vec chain_class(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, const ChainMap& f);

struct YonedaClass {
  Vec coeffs;          // class of the composite in Ext^{deg_f+deg_g}(src f, dst g)
  ChainMap composite;  // strict composite chain map g after f
};

// Yoneda product g·f for f in Ext(S, T) and g in Ext(T, U); requires
// f.dst == g.src and deg f + deg g <= L.
YonedaClass yoneda_product(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                           const ChainMap& f, const ChainMap& g);

// The identity class of Ext^0(S_v, S_v) as a chain map.
ChainMap ext_identity(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, std::size_t v);

struct ExtArrowInfo {
  std::size_t v = 0, w = 0;  // arrow v -> w
  std::size_t k = 0;         // basis position within Ext^1(S_v, S_w)
};

struct ExtQuiverResult {
  Quiver quiver;                      // vertices are the simple labels
  std::vector<ExtArrowInfo> info;     // per arrow, in quiver arrow order
  std::vector<ChainMap> arrow_reps;   // canonical representative per arrow
};

// Gabriel quiver: dim Ext^1(S_v, S_w) arrows from v to w.  Arrow labels are
// generated fresh and never collide with vertex labels.
ExtQuiverResult ext_quiver(const FDAlgebra& a, const BasicData& bd, const ExtData& ed);

}  // namespace dualco
