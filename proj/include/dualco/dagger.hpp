#pragma once
// The pointed coalgebra A† inside the truncated path coalgebra of the
// Ext^1-quiver: the maximal subcoalgebra contained in ker(mu), mu the
// homotopy Maurer-Cartan map of the transferred A-infinity structure.
// Cross-validated against the direct dualization of the basic algebra
// (the Takeuchi representative of A°).
//
// ker(mu) need not be graded by path length, so the result is reported
// through the length filtration: graded[n] = dim(A† ∩ paths of length <= n)
// minus the previous layer.  The A-infinity data is built at hom-complex
// truncation 2: mu only evaluates on degree-one classes, and the transferred
// products on those inputs only involve the contraction in degrees <= 2.

#include "dualco/ext.hpp"
#include "dualco/pathcoalg.hpp"
#include "dualco/transfer.hpp"

namespace dualco {

struct DaggerResult {
  PathCoalgebra pc;
  ExtQuiverResult eq;
  MaurerCartan mc;
  Subspace sub;                      // A† inside pc
  std::vector<std::size_t> graded;   // length-filtration increments, size max_len+1
  std::vector<std::string> grouplikes;  // vertex labels, one per simple

  std::size_t total_dim() const { return sub.dim(); }
};

// max_len >= 2.  The coradical of the result is the span of the vertices,
// one group-like per simple (asserted).
DaggerResult dagger(const FDAlgebra& a, std::size_t max_len, std::uint64_t seed);

// The other side of the cross-validation: (eAe)* for e a basic idempotent.
Coalgebra oracle_dagger(const FDAlgebra& a);

enum class CheckStatus { pass, fail, skipped };

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct DaggerCompare {
  bool ok = true;  // no failed items (skipped ones do not count)
  std::vector<CheckItem> items;
};

// Four checks: total dimension, coradical dimension, coradical-filtration
// dimension vector, and dual algebras identified through the Segal
// comparison map.  Checks that need the truncation to see all of A (total
// dimension, filtration, Segal) are skipped when the radical nilpotency of
// the basic algebra exceeds max_len.
DaggerCompare compare_dagger(const FDAlgebra& a, const DaggerResult& d, const Coalgebra& o);

}  // namespace dualco
