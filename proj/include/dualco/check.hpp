#pragma once
// The full invariant sweep behind the `check` command: algebra axioms,
// semisimple bookkeeping, dual coalgebra axioms, double duality, the
// evaluation measuring, chain-level ext certificates, contraction side
// conditions, Stasheff identities, the dagger cross-validation and the
// proper diagnostic.  Checks whose prerequisites are not computable over
// the input field are reported as skipped, never silently dropped.

#include "dualco/dagger.hpp"

namespace dualco {

struct CheckSuite {
  bool ok = true;  // no failed items
  std::vector<CheckItem> items;
};

CheckSuite run_check_suite(const FDAlgebra& a, std::size_t ext_cutoff, std::size_t arity,
                           std::uint64_t seed);

}  // namespace dualco
