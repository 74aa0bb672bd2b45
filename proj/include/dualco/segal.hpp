#pragma once
// Segal comparison: the truncated path algebra of the Ext^1-quiver maps onto
// a basic algebra by sending each arrow to the radical lift dual to its
// cocycle class and extending multiplicatively; the kernel is the two-sided
// ideal generated by the image of mu's transpose (long paths are already
// zero in the truncation).  Lifts are pinned by the pairing
// <alpha, x> = top coefficient of alpha_0(xi) where d(xi) = x in P_1 of the
// source simple; a singular pairing or a kernel mismatch signals a
// convention inconsistency, not a mathematical failure, and is reported as
// such.

#include "dualco/dagger.hpp"

namespace dualco {

struct SegalMap {
  FDAlgebra palg;          // truncated path algebra of the ext^1-quiver
  std::vector<Vec> lifts;  // per ext-arrow, dual radical lift in a
  Mat to_a;                // dim(a) x dim(palg), paths to products of lifts
};

// a must be basic.  Throws check_error if the class/lift pairing is
// singular.
SegalMap segal_map(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                   const ExtQuiverResult& eq, const MaurerCartan& mc);

struct SegalReport {
  bool ok = false;
  std::vector<CheckItem> items;          // surjective, kernel, graded dims
  std::vector<std::size_t> graded_a;     // radical layers of a
  std::vector<std::size_t> graded_path;  // length layers of palg / ideal
};

// Requires a basic (reduce first) with radical nilpotency <= max_len.
SegalReport segal_compare(const FDAlgebra& a, std::size_t max_len, std::uint64_t seed);

}  // namespace dualco
