#include "dualco/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dualco {

void QuiverPresentation::validate() const {
  quiver.validate();
  if (truncate < 1) throw input_error("truncation must be >= 1");
  for (const Relation& r : relations) {
    if (r.terms.empty()) throw input_error("empty relation");
    std::size_t src = path_source(quiver, r.terms[0].second);
    std::size_t dst = path_target(quiver, r.terms[0].second);
    for (const auto& [c, p] : r.terms) {
      (void)c;
      if (p.length() < 2)
        throw input_error("relation not admissible: contains a path of length " +
                          std::to_string(p.length()) + " (need length >= 2)");
      if (path_source(quiver, p) != src || path_target(quiver, p) != dst)
        throw input_error("relation mixes non-parallel paths");
    }
  }
}

FDAlgebra build_algebra(const QuiverPresentation& pres) {
  pres.validate();
  const Field& F = pres.field;
  const Quiver& q = pres.quiver;
  const std::size_t N = pres.truncate;

  // Truncated path algebra T: basis all paths of length < N, canonical order.
  std::vector<Path> paths = enumerate_paths(q, N - 1);
  const std::size_t tdim = paths.size();
  std::map<std::string, std::size_t> index;
  auto key = [&](const Path& p) {
    return std::to_string(p.source) + "|" + path_name(q, p);
  };
  for (std::size_t i = 0; i < tdim; ++i) index[key(paths[i])] = i;
  auto path_vec = [&](const Path& p) {
    Vec v(tdim, Scalar(0));
    if (p.length() < N) v[index.at(key(p))] = F.one();
    return v;  // zero when truncated away
  };

  // Relation ideal inside T: close each relation under left/right
  // concatenation by paths, projecting to T.
  Mat rows(0, tdim);
  for (const Relation& r : pres.relations) {
    std::size_t rsrc = path_source(q, r.terms[0].second);
    std::size_t rdst = path_target(q, r.terms[0].second);
    for (const Path& left : paths) {
      if (path_target(q, left) != rsrc) continue;
      for (const Path& right : paths) {
        if (path_source(q, right) != rdst) continue;
        Vec v(tdim, Scalar(0));
        bool nonzero = false;
        for (const auto& [c, term] : r.terms) {
          Path full = path_concat(q, path_concat(q, left, term), right);
          if (full.length() >= N) continue;
          std::size_t k = index.at(key(full));
          v[k] = F.add(v[k], F.reduce(c));
          nonzero = true;
        }
        if (!nonzero) continue;
        Mat one(1, tdim);
        for (std::size_t k = 0; k < tdim; ++k) one.at(0, k) = v[k];
        rows = rows.vstack(one);
      }
    }
  }
  Subspace ideal = Subspace::from_rows(F, rows.rows() ? rows : Mat(0, tdim));

  // Quotient basis: surviving paths in canonical order.  The ideal has no
  // component on paths of length < 2, so vertices and arrows always survive
  // and every quotient class is represented by a single path.
  Quotient quo = quotient(F, ideal, Subspace::full(tdim));
  std::vector<std::size_t> rep_path(quo.dim());
  for (std::size_t i = 0; i < quo.dim(); ++i) {
    std::size_t nz = tdim, count = 0;
    for (std::size_t j = 0; j < tdim; ++j)
      if (!F.is_zero(quo.lift.at(i, j))) {
        nz = j;
        ++count;
      }
    if (count != 1 || !F.eq(quo.lift.at(i, nz), F.one()))
      throw check_error("quotient representative is not a single path");
    rep_path[i] = nz;
  }

  // Projection T -> quotient coordinates, all columns at once.
  Mat proj(quo.dim(), tdim);
  for (std::size_t j = 0; j < tdim; ++j) {
    Vec col(tdim, Scalar(0));
    col[j] = F.one();
    Vec c = quo.project(F, col);
    for (std::size_t i = 0; i < quo.dim(); ++i) proj.at(i, j) = c[i];
  }

  FDAlgebra a;
  a.field = F;
  QuiverProvenance prov;
  prov.quiver = q;
  prov.truncate = N;
  for (std::size_t i = 0; i < quo.dim(); ++i) {
    prov.basis_paths.push_back(paths[rep_path[i]]);
    a.basis_names.push_back(path_name(q, paths[rep_path[i]]));
  }
  const std::size_t d = quo.dim();
  a.table.assign(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const Path& pi = prov.basis_paths[i];
    for (std::size_t j = 0; j < d; ++j) {
      const Path& pj = prov.basis_paths[j];
      // b_i · b_j = class of "p_j then p_i" (function-composition order).
      if (path_target(q, pj) != path_source(q, pi)) {
        a.table[i][j] = Vec(d, Scalar(0));
        continue;
      }
      Path prod = path_concat(q, pj, pi);
      a.table[i][j] = mat_apply(F, proj, path_vec(prod));
    }
  }
  a.unit = Vec(d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i)
    if (prov.basis_paths[i].trivial()) a.unit[i] = F.one();
  a.prov = std::move(prov);
  return a;
}

}  // namespace dualco
