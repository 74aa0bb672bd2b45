#pragma once
// Line-oriented input format.  Statements are separated by newlines or
// semicolons; '#' starts a comment.  Quiver form:
//
//   field Q            (or F<p>)
//   vertices 1 2
//   arrows a: 1->2
//   relations a*a - b*a
//   truncate 3
//
// Path words read left to right in traversal order.  Structure-constant
// form: `algebra dim <n>` introduces basis b0..b<n-1>, then `mult <i> <j> =
// <combo>` rows (omitted products are zero) and `unit = <combo>`.
// Errors carry the one-based line number of the offending statement.

#include "dualco/presentation.hpp"

#include <optional>
#include <string>

namespace dualco {

struct ParsedInput {
  FDAlgebra algebra;
  std::optional<QuiverPresentation> pres;  // set for quiver inputs
};

ParsedInput parse_input(const std::string& text,
                        const std::optional<std::string>& field_override = {});

}  // namespace dualco
