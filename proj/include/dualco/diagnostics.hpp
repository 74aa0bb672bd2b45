#pragma once
// Diagnostics from the duality dictionary: coradical (non-)functoriality,
// the Zariski topology on simples, the evaluation measuring, and the proper
// diagnostic (how much of A the truncated dual still separates).

#include "dualco/dagger.hpp"
#include "dualco/duality.hpp"

namespace dualco {

// Tests phi*(corad(B*)) ⊆ corad(A*) for a verified morphism phi: A -> B.
// On failure, witness_src is a coradical functional of B* whose transpose
// witness_img lies outside corad(A*).
struct CoradPreservation {
  bool preserved = false;
  Vec witness_src;
  Vec witness_img;
};
CoradPreservation corad_preservation_check(const FDAlgebra& a, const FDAlgebra& b,
                                           const Mat& phi);

// Indices of the simples on which elem acts as zero: the basic closed set
// V(elem) of the Zariski topology on simp(A).
std::vector<std::size_t> zariski_closed(const FDAlgebra& a, const Vec& elem);

// Verifies ev(f (x) aa') = sum f_(1)(a) f_(2)(a') and ev(f (x) 1) =
// epsilon(f) over every dual-basis functional and every basis pair, plus
// the coradical basis functionals when the coradical is computable over the
// field.  first_violation is empty on success.
struct MeasuringReport {
  bool ok = false;
  std::size_t checked = 0;
  bool corad_checked = false;
  std::string first_violation;
};
MeasuringReport measuring_check(const FDAlgebra& a);

// Finite-dimensional side: the canonical map A -> (A*)* is the identity on
// structure constants (recorded).  Truncated side: pairs A against the
// length-cutoff layer of the coradical filtration of A* (the same dimension
// vector as the dagger truncation) and reports the kernel of evaluation;
// injective iff the layer separates A.
struct ProperReport {
  bool bijective_fd = false;
  bool injective_truncated = false;
  std::size_t layer_dim = 0;
  Subspace eval_kernel;
};
ProperReport proper_check(const FDAlgebra& a, std::size_t cutoff);

}  // namespace dualco
