#pragma once
// Quiver presentations kQ/(relations + paths of length >= N) and their
// quotient algebras as structure constants.

#include "dualco/algebra.hpp"
#include "dualco/quiver.hpp"

namespace dualco {

struct Relation {
  // Linear combination of parallel paths, every term of length >= 2.
  std::vector<std::pair<Scalar, Path>> terms;
};

struct QuiverPresentation {
  Field field;
  Quiver quiver;
  std::vector<Relation> relations;
  std::size_t truncate = 0;  // N >= 1

  // Throws input_error on inadmissible relations or bad truncation.
  void validate() const;
};

// The quotient algebra on the surviving path-class basis, in canonical path
// order.  Basis classes are represented by single paths; vertices and arrows
// always survive (admissibility).
FDAlgebra build_algebra(const QuiverPresentation& p);

}  // namespace dualco
