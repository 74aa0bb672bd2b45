#pragma once
// Path coalgebras: deconcatenation comultiplication on the paths of a quiver
// up to a length cutoff.  Splitting a path never produces anything longer
// than the path itself, so the truncation is consistent: Delta(p) =
// sum of front (x) back over all cuts, epsilon(p) = [p trivial].  Vertices
// are group-like and an arrow a: v -> w satisfies Delta(a) = v(x)a + a(x)w.
//
// Convolution turns the dual of the truncation into the path algebra with
// reading-order product p*.q* = (p then q)*; the presentation machinery
// (build_algebra) multiplies in function-composition order, so the two are
// opposite algebras with identical two-sided ideals.  truncated_path_algebra
// returns the build_algebra form, kQ modulo paths of length > max_len.

#include "dualco/coalgebra.hpp"
#include "dualco/quiver.hpp"

namespace dualco {

struct PathCoalgebra {
  Coalgebra c;
  Quiver quiver;
  std::vector<Path> paths;  // canonical order; basis i is paths[i]
  std::size_t max_len = 0;

  std::size_t path_index(const Path& p) const;
  // Span of the paths of length <= n.
  Subspace length_le(std::size_t n) const;
};

PathCoalgebra path_coalgebra(const Field& F, const Quiver& q, std::size_t max_len);

FDAlgebra truncated_path_algebra(const Field& F, const Quiver& q, std::size_t max_len);

}  // namespace dualco
