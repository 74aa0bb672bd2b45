#pragma once
// Homotopy transfer from the endomorphism dg-algebra of the total minimal
// resolution onto its cohomology, the Yoneda algebra.
//
// The contraction splits each materialized degree as E^n = B ⊕ i(Ext^n) ⊕ C
// with C a seeded complement of B inside the kernel of the class read-off;
// the homotopy inverts the differential from C back onto B and vanishes on
// the other two summands, which makes all side conditions hold on the nose.
// Products are transferred by Merkulov's summation over planar binary trees,
// evaluated by dynamic programming over argument intervals.  Signs follow
// the shift convention: arguments carry degree (ext degree − 1), the product
// b2(u, w) = (−1)^{deg u} u∘w, and no other signs enter the recursion.  The
// exponent is normalized so that m2 on a pair of degree-one classes equals
// the composition product exactly; on general pairs m2(x, y) differs from
// the composition class by (−1)^{deg x · (deg y + 1)}.

#include "dualco/homcomplex.hpp"

namespace dualco {

struct Contraction {
  std::uint64_t seed = 0;
  std::vector<Mat> proj;  // class read-off K_n: ydim(n) x dimE(n), n = 0..top
  std::vector<Mat> incl;  // canonical cocycles: dimE(n) x ydim(n)
  std::vector<Mat> hmat;  // hmat[n]: dimE(n-1) x dimE(n) for n >= 1; hmat[0] empty
  std::vector<Subspace> bnd;  // B^n (degree 0: null-homotopic chain endomorphisms)
  std::vector<Subspace> cmp;  // C^n, inside ker K_n
};

Contraction build_contraction(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                              const HomComplex& hc, std::uint64_t seed);

// Verifies p∘i = id (all degrees), the side conditions h∘i = 0, p∘h = 0,
// h∘h = 0, and i∘p − id = D∘h + h∘D on degrees 1..top−1.  Throws check_error.
// Degree 0 satisfies only the side conditions: the truncation has no
// degree −1 part, so null-homotopic chain endomorphisms are not split off
// by D∘h there.  The transfer never evaluates the homotopy identity at
// degree 0 because products of positive-degree elements sit in degree >= 2.
void check_contraction(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                       const HomComplex& hc, const Contraction& c);

struct AInfinity {
  HomComplex hc;
  Contraction con;
};

AInfinity a_infinity(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, std::size_t top,
                     std::uint64_t seed);

// An element of the Yoneda space in flat coordinates at one ext degree.
struct YClass {
  std::size_t deg = 0;
  Vec coeffs;
};

// Transferred product m_n (shift convention), arity n >= 2, on positive
// ext degrees.  Output degree is (sum of input degrees) − n + 2; the
// evaluation requires that to be <= hc.top.  Throws check_error otherwise.
YClass m_eval(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, const AInfinity& ai,
              const std::vector<YClass>& args);

struct StasheffReport {
  bool ok = true;
  std::size_t arity_max = 0;
  std::size_t tuples_checked = 0;
  std::size_t tuples_skipped = 0;  // out of the materialized degree window
  std::string first_violation;     // empty when ok
};

// Verifies sum_{r+s+t=n} (−1)^{|y_1|+..+|y_r|} m_{r+1+t}(y_1..y_r, m_s(..), ..) = 0
// (shifted degrees |y| = deg y − 1, m_1 = 0 terms dropped) for every arity
// n <= n_max on all tuples of positive-degree basis classes that fit the
// materialized window.
StasheffReport stasheff_check(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                              const AInfinity& ai, std::size_t n_max);

struct MaurerCartan {
  std::size_t max_len = 0;
  std::vector<Path> paths;  // paths of the ext quiver, lengths 0..max_len
  Mat mu;                   // ydim(Ext^2) x #paths
};

// mu on the basis path p = a_1 ... a_m (traversal order) is
// m_m(x_{a_m}, ..., x_{a_1}): composition order is function order, so the
// first arrow of the path is applied first.  Lengths 0 and 1 map to zero.
MaurerCartan maurer_cartan(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                           const AInfinity& ai, const ExtQuiverResult& eq, std::size_t max_len);

}  // namespace dualco
