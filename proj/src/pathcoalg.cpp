#include "dualco/pathcoalg.hpp"

#include "dualco/presentation.hpp"

namespace dualco {

std::size_t PathCoalgebra::path_index(const Path& p) const {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].source == p.source && paths[i].arrows == p.arrows) return i;
  }
  throw check_error("path_index: path outside the truncation");
}

Subspace PathCoalgebra::length_le(std::size_t n) const {
  Mat rows(0, c.dim());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].length() <= n) {
      Mat row(1, c.dim());
      row.at(0, i) = Scalar(1);
      rows = rows.vstack(row);
    }
  }
  return Subspace::from_rows(c.field, rows);
}

PathCoalgebra path_coalgebra(const Field& F, const Quiver& q, std::size_t max_len) {
  q.validate();
  PathCoalgebra pc;
  pc.quiver = q;
  pc.max_len = max_len;
  pc.paths = enumerate_paths(q, max_len);
  const std::size_t d = pc.paths.size();

  pc.c.field = F;
  pc.c.basis_names.reserve(d);
  for (const Path& p : pc.paths) pc.c.basis_names.push_back(path_name(q, p));
  pc.c.delta = Mat(d * d, d);
  pc.c.counit.assign(d, Scalar(0));

  for (std::size_t k = 0; k < d; ++k) {
    const Path& p = pc.paths[k];
    if (p.trivial()) pc.c.counit[k] = F.one();
    // Every cut gives a distinct front length, hence a distinct summand.
    for (std::size_t cut = 0; cut <= p.length(); ++cut) {
      Path front{p.source, {p.arrows.begin(), p.arrows.begin() + cut}};
      std::size_t mid = cut == 0 ? p.source : q.arrows[p.arrows[cut - 1]].dst;
      Path back{mid, {p.arrows.begin() + cut, p.arrows.end()}};
      pc.c.delta.at(pc.path_index(front) * d + pc.path_index(back), k) = F.one();
    }
  }

  check_coalgebra(pc.c);
  return pc;
}

FDAlgebra truncated_path_algebra(const Field& F, const Quiver& q, std::size_t max_len) {
  QuiverPresentation p;
  p.field = F;
  p.quiver = q;
  p.truncate = max_len + 1;
  return build_algebra(p);
}

}  // namespace dualco
