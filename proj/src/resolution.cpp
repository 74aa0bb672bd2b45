#include "dualco/resolution.hpp"

namespace dualco {

namespace {

Mat row_of(const Vec& v) {
  Mat m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m.at(0, i) = v[i];
  return m;
}

Vec col_of(const Mat& m, std::size_t j) {
  Vec v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

Vec row_vec(const Mat& m, std::size_t i) {
  Vec v(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
  return v;
}

// Algebra element from its coordinates in the echelon basis of a corner or
// projective subspace.
Vec elem_from_coords(const Field& F, const Subspace& s, const Vec& c) {
  Vec x(s.ambient(), Scalar(0));
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!F.is_zero(c[i]))
      for (std::size_t j = 0; j < s.ambient(); ++j)
        x[j] = F.add(x[j], F.mul(c[i], s.basis().at(i, j)));
  return x;
}

}  // namespace

void check_module(const FDAlgebra& a, const LeftModule& m) {
  const Field& F = a.field;
  if (m.action.size() != a.dim()) throw check_error("module: one action matrix per basis element");
  if (!(module_act(a, m, a.unit) == Mat::identity(m.dim)))
    throw check_error("module: unit does not act as identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Mat lhs = mat_mul(F, m.action[i], m.action[j]);
      if (!(lhs == module_act(a, m, a.table[i][j])))
        throw check_error("module: action is not a homomorphism");
    }
}

Mat module_act(const FDAlgebra& a, const LeftModule& m, const Vec& x) {
  Mat r(m.dim, m.dim);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.field.is_zero(x[i])) r = mat_add(a.field, r, mat_scale(a.field, x[i], m.action[i]));
  return r;
}

LeftModule regular_module(const FDAlgebra& a) {
  LeftModule m;
  m.dim = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left_mult(a.basis_vec(i)));
  return m;
}

LeftModule restrict_module(const FDAlgebra& a, const LeftModule& m, const Subspace& w) {
  const Field& F = a.field;
  LeftModule r;
  r.dim = w.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Mat act(w.dim(), w.dim());
    for (std::size_t j = 0; j < w.dim(); ++j) {
      Vec img = mat_apply(F, m.action[i], w.basis_vec(j));
      auto c = w.coords(F, img);
      if (!c) throw check_error("restrict_module: subspace is not invariant");
      for (std::size_t k = 0; k < w.dim(); ++k) act.at(k, j) = (*c)[k];
    }
    r.action.push_back(act);
  }
  return r;
}

std::size_t proj_dim(const BasicData& bd, const ProjSum& p) {
  std::size_t d = 0;
  for (std::size_t v : p.verts) d += bd.proj[v].dim();
  return d;
}

std::vector<std::size_t> proj_offsets(const BasicData& bd, const ProjSum& p) {
  std::vector<std::size_t> off;
  std::size_t d = 0;
  for (std::size_t v : p.verts) {
    off.push_back(d);
    d += bd.proj[v].dim();
  }
  return off;
}

LeftModule proj_module(const FDAlgebra& a, const BasicData& bd, const ProjSum& p) {
  const Field& F = a.field;
  LeftModule m;
  m.dim = proj_dim(bd, p);
  std::vector<std::size_t> off = proj_offsets(bd, p);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Mat act(m.dim, m.dim);
    Vec b = a.basis_vec(i);
    for (std::size_t s = 0; s < p.verts.size(); ++s) {
      const Subspace& pv = bd.proj[p.verts[s]];
      for (std::size_t j = 0; j < pv.dim(); ++j) {
        Vec img = a.mul(b, pv.basis_vec(j));
        auto c = pv.coords(F, img);
        if (!c) throw check_error("projective summand not stable under left action");
        for (std::size_t k = 0; k < pv.dim(); ++k) act.at(off[s] + k, off[s] + j) = (*c)[k];
      }
    }
    m.action.push_back(act);
  }
  return m;
}

AlgMat alg_zero(const FDAlgebra& a, std::vector<std::size_t> dst, std::vector<std::size_t> src) {
  AlgMat m;
  m.dst = std::move(dst);
  m.src = std::move(src);
  m.e.assign(m.dst.size(), std::vector<Vec>(m.src.size(), Vec(a.dim(), Scalar(0))));
  return m;
}

AlgMat alg_add(const FDAlgebra& a, const AlgMat& x, const AlgMat& y) {
  if (x.dst != y.dst || x.src != y.src) throw check_error("alg_add: shape mismatch");
  AlgMat r = x;
  for (std::size_t t = 0; t < r.dst.size(); ++t)
    for (std::size_t s = 0; s < r.src.size(); ++s) r.e[t][s] = vec_add(a.field, x.e[t][s], y.e[t][s]);
  return r;
}

AlgMat alg_scale(const FDAlgebra& a, const Scalar& c, const AlgMat& x) {
  AlgMat r = x;
  for (auto& rowv : r.e)
    for (auto& v : rowv) v = vec_scale(a.field, c, v);
  return r;
}

AlgMat alg_compose(const FDAlgebra& a, const AlgMat& psi, const AlgMat& phi) {
  if (phi.dst != psi.src) throw check_error("alg_compose: middle summands disagree");
  AlgMat r = alg_zero(a, psi.dst, phi.src);
  for (std::size_t t = 0; t < psi.dst.size(); ++t)
    for (std::size_t s = 0; s < phi.src.size(); ++s)
      for (std::size_t k = 0; k < psi.src.size(); ++k) {
        if (vec_is_zero(phi.e[k][s]) || vec_is_zero(psi.e[t][k])) continue;
        // Right multiplications compose by concatenating: x·m_phi·m_psi.
        r.e[t][s] = vec_add(a.field, r.e[t][s], a.mul(phi.e[k][s], psi.e[t][k]));
      }
  return r;
}

bool alg_is_zero(const AlgMat& m) {
  for (const auto& rowv : m.e)
    for (const auto& v : rowv)
      if (!vec_is_zero(v)) return false;
  return true;
}

Mat alg_expand(const FDAlgebra& a, const BasicData& bd, const AlgMat& m) {
  const Field& F = a.field;
  ProjSum ds{m.dst}, ss{m.src};
  Mat r(proj_dim(bd, ds), proj_dim(bd, ss));
  std::vector<std::size_t> doff = proj_offsets(bd, ds), soff = proj_offsets(bd, ss);
  for (std::size_t s = 0; s < m.src.size(); ++s) {
    const Subspace& ps = bd.proj[m.src[s]];
    for (std::size_t j = 0; j < ps.dim(); ++j) {
      Vec y = ps.basis_vec(j);
      for (std::size_t t = 0; t < m.dst.size(); ++t) {
        if (vec_is_zero(m.e[t][s])) continue;
        Vec img = a.mul(y, m.e[t][s]);
        auto c = bd.proj[m.dst[t]].coords(F, img);
        if (!c) throw check_error("alg_expand: image leaves the target summand");
        for (std::size_t k = 0; k < c->size(); ++k) r.at(doff[t] + k, soff[s] + j) = (*c)[k];
      }
    }
  }
  return r;
}

void alg_check(const FDAlgebra& a, const BasicData& bd, const AlgMat& m) {
  for (std::size_t t = 0; t < m.dst.size(); ++t)
    for (std::size_t s = 0; s < m.src.size(); ++s) {
      const Vec& x = m.e[t][s];
      if (a.mul(bd.idem[m.src[s]], x) != x || a.mul(x, bd.idem[m.dst[t]]) != x)
        throw check_error("alg_check: entry violates its corner constraint");
    }
}

Mat top_row(const FDAlgebra& a, const BasicData& bd, std::size_t v) {
  const Field& F = a.field;
  const Subspace& pv = bd.proj[v];
  Subspace jev = intersect(F, bd.rad, pv);
  if (jev.dim() + 1 != pv.dim()) throw check_error("top of a projective is not one-dimensional");
  // The functional vanishing on J·e_v with value 1 on e_v, in projective
  // coordinates: solve B r^T = unit for B = [J·e_v coords; e_v coords].
  Mat b(0, pv.dim());
  for (std::size_t i = 0; i < jev.dim(); ++i) {
    auto c = pv.coords(F, jev.basis_vec(i));
    if (!c) throw check_error("radical slice escapes the projective");
    b = b.vstack(row_of(*c));
  }
  auto ce = pv.coords(F, bd.idem[v]);
  if (!ce) throw check_error("idempotent missing from its own projective");
  b = b.vstack(row_of(*ce));
  Mat rhs(b.rows(), 1);
  rhs.at(b.rows() - 1, 0) = F.one();
  Mat x;
  if (!solve(F, b, rhs, x)) throw check_error("top functional has no solution");
  return x.transpose();
}

CoverResult projective_cover(const FDAlgebra& a, const BasicData& bd, const LeftModule& m) {
  const Field& F = a.field;
  CoverResult out;
  if (m.dim == 0) {
    out.sur = Mat(0, 0);
    return out;
  }
  // J·M
  Mat rows(0, m.dim);
  for (std::size_t r = 0; r < bd.rad.dim(); ++r) {
    Mat act = module_act(a, m, bd.rad.basis_vec(r));
    for (std::size_t j = 0; j < m.dim; ++j) rows = rows.vstack(row_of(col_of(act, j)));
  }
  Subspace jm = Subspace::from_rows(F, rows);
  Quotient top = quotient(F, jm, Subspace::full(m.dim));

  // Isotypic pieces of the top under the orthogonal idempotents.
  for (std::size_t w = 0; w < bd.nsimple; ++w) {
    Mat ew(top.dim(), top.dim());
    Mat act = module_act(a, m, bd.idem[w]);
    for (std::size_t j = 0; j < top.dim(); ++j) {
      Vec img = mat_apply(F, act, row_vec(top.lift, j));
      Vec c = top.project(F, img);
      for (std::size_t i = 0; i < top.dim(); ++i) ew.at(i, j) = c[i];
    }
    Subspace part = image(F, ew);
    for (std::size_t i = 0; i < part.dim(); ++i) {
      // Lift the top vector, then force the weight; e_w acts as the identity
      // on its own isotypic piece of the top, so the class is unchanged.
      Vec t = part.basis_vec(i);
      Vec g(m.dim, Scalar(0));
      for (std::size_t j = 0; j < top.dim(); ++j)
        if (!F.is_zero(t[j])) g = vec_add(F, g, vec_scale(F, t[j], row_vec(top.lift, j)));
      g = mat_apply(F, act, g);
      out.p.verts.push_back(w);
      out.gens.push_back(g);
    }
  }
  if (out.p.verts.size() != top.dim()) throw check_error("cover has redundant slots");

  // Surjection: slot (w, g) maps A·e_w by z -> z·g.
  out.sur = Mat(m.dim, proj_dim(bd, out.p));
  std::vector<std::size_t> off = proj_offsets(bd, out.p);
  for (std::size_t s = 0; s < out.p.verts.size(); ++s) {
    const Subspace& pw = bd.proj[out.p.verts[s]];
    for (std::size_t j = 0; j < pw.dim(); ++j) {
      Vec img = mat_apply(F, module_act(a, m, pw.basis_vec(j)), out.gens[s]);
      for (std::size_t i = 0; i < m.dim; ++i) out.sur.at(i, off[s] + j) = img[i];
    }
  }
  if (rank(F, out.sur) != m.dim) throw check_error("projective cover is not surjective");
  return out;
}

Resolution minimal_resolution(const FDAlgebra& a, const BasicData& bd, std::size_t v,
                              std::size_t L) {
  const Field& F = a.field;
  if (L < 1) throw input_error("resolution length must be >= 1");
  Resolution r;
  r.simple = v;
  r.mods.push_back(ProjSum{{v}});
  r.aug = top_row(a, bd, v);
  Subspace K = kernel(F, r.aug);
  Mat prev_expand;

  for (std::size_t i = 1; i <= L; ++i) {
    LeftModule P = proj_module(a, bd, r.mods.back());
    LeftModule MK = restrict_module(a, P, K);
    CoverResult cov = projective_cover(a, bd, MK);

    AlgMat d = alg_zero(a, r.mods.back().verts, cov.p.verts);
    std::vector<std::size_t> doff = proj_offsets(bd, r.mods.back());
    for (std::size_t s = 0; s < cov.p.verts.size(); ++s) {
      // Generator in the coordinates of P_{i-1}.
      Vec gP = elem_from_coords(F, K, cov.gens[s]);
      for (std::size_t t = 0; t < r.mods.back().verts.size(); ++t) {
        const Subspace& pt = bd.proj[r.mods.back().verts[t]];
        Vec slice(pt.dim());
        for (std::size_t k = 0; k < pt.dim(); ++k) slice[k] = gP[doff[t] + k];
        Vec x = elem_from_coords(F, pt, slice);
        // Minimality: every differential entry lies in the radical.
        if (!bd.rad.contains(F, x)) throw check_error("resolution differential has a unit entry");
        d.e[t][s] = x;
      }
    }
    alg_check(a, bd, d);
    Mat de = alg_expand(a, bd, d);
    if (!(image(F, de) == K)) throw check_error("resolution stage is not exact");
    if (i >= 2 && !mat_mul(F, prev_expand, de).is_zero())
      throw check_error("differentials do not square to zero");

    r.d.push_back(d);
    r.mods.push_back(cov.p);
    K = kernel(F, de);
    prev_expand = de;
  }
  return r;
}

}  // namespace dualco
