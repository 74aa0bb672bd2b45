#include "dualco/homcomplex.hpp"

#include <string>

namespace dualco {

namespace {

Scalar sign_of(const Field& F, bool negative) { return negative ? F.neg(F.one()) : F.one(); }

}  // namespace

std::size_t yoneda_dim(const ExtData& ed, std::size_t n) {
  std::size_t d = 0;
  for (const auto& row : ed.dims[n])
    for (std::size_t x : row) d += x;
  return d;
}

std::size_t yoneda_offset(const ExtData& ed, std::size_t n, std::size_t v, std::size_t w) {
  std::size_t off = 0;
  for (std::size_t vv = 0; vv < ed.dims[n].size(); ++vv)
    for (std::size_t ww = 0; ww < ed.dims[n][vv].size(); ++ww) {
      if (vv == v && ww == w) return off;
      off += ed.dims[n][vv][ww];
    }
  throw check_error("yoneda_offset: vertex pair out of range");
}

HomComplex hom_complex(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                       std::size_t top) {
  if (top > ed.L) throw check_error("hom_complex: degree window exceeds resolution cutoff");
  HomComplex hc;
  hc.L = ed.L;
  hc.top = top;
  const std::size_t ns = bd.nsimple;
  hc.tot.resize(hc.L + 1);
  hc.block.assign(hc.L + 1, std::vector<std::size_t>(ns, 0));
  for (std::size_t k = 0; k <= hc.L; ++k) {
    for (std::size_t v = 0; v < ns; ++v) {
      hc.block[k][v] = hc.tot[k].verts.size();
      const auto& part = ed.res[v].mods[k].verts;
      hc.tot[k].verts.insert(hc.tot[k].verts.end(), part.begin(), part.end());
    }
  }
  for (std::size_t k = 0; k + 1 <= hc.L; ++k) {
    AlgMat d = alg_zero(a, hc.tot[k].verts, hc.tot[k + 1].verts);
    for (std::size_t v = 0; v < ns; ++v) {
      const AlgMat& dv = ed.res[v].d[k];
      for (std::size_t t = 0; t < dv.dst.size(); ++t)
        for (std::size_t s = 0; s < dv.src.size(); ++s)
          d.e[hc.block[k][v] + t][hc.block[k + 1][v] + s] = dv.e[t][s];
    }
    hc.dtot.push_back(std::move(d));
  }
  hc.blocks.resize(top + 1);
  hc.dim.assign(top + 1, 0);
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t off = 0;
    for (std::size_t j = 0; n + j <= hc.L; ++j) {
      const auto& dst = hc.tot[j].verts;
      const auto& src = hc.tot[n + j].verts;
      for (std::size_t t = 0; t < dst.size(); ++t)
        for (std::size_t s = 0; s < src.size(); ++s) {
          HomComplex::Block b;
          b.j = j;
          b.t = t;
          b.s = s;
          b.src_v = src[s];
          b.dst_v = dst[t];
          b.offset = off;
          b.dim = bd.corner[b.src_v][b.dst_v].dim();
          off += b.dim;
          hc.blocks[n].push_back(b);
        }
    }
    hc.dim[n] = off;
  }
  return hc;
}

DgElem dg_zero(const FDAlgebra& a, const HomComplex& hc, std::size_t n) {
  DgElem f;
  f.deg = n;
  for (std::size_t j = 0; n + j <= hc.L; ++j)
    f.comp.push_back(alg_zero(a, hc.tot[j].verts, hc.tot[n + j].verts));
  return f;
}

DgElem dg_add(const FDAlgebra& a, const DgElem& f, const DgElem& g) {
  if (f.deg != g.deg || f.comp.size() != g.comp.size())
    throw check_error("dg_add: degree mismatch");
  DgElem r = f;
  for (std::size_t j = 0; j < r.comp.size(); ++j) r.comp[j] = alg_add(a, r.comp[j], g.comp[j]);
  return r;
}

DgElem dg_scale(const FDAlgebra& a, const Scalar& c, const DgElem& f) {
  DgElem r = f;
  for (auto& m : r.comp) m = alg_scale(a, c, m);
  return r;
}

bool dg_is_zero(const DgElem& f) {
  for (const auto& m : f.comp)
    if (!alg_is_zero(m)) return false;
  return true;
}

DgElem dg_mul(const FDAlgebra& a, const HomComplex& hc, const DgElem& f, const DgElem& g) {
  if (f.deg + g.deg > hc.L) throw check_error("dg_mul: degree sum exceeds resolution cutoff");
  DgElem r;
  r.deg = f.deg + g.deg;
  for (std::size_t j = 0; r.deg + j <= hc.L; ++j)
    r.comp.push_back(alg_compose(a, f.comp[j], g.comp[f.deg + j]));
  return r;
}

DgElem dg_diff(const FDAlgebra& a, const HomComplex& hc, const DgElem& f) {
  if (f.deg >= hc.L) throw check_error("dg_diff: degree at resolution cutoff");
  const Field& F = a.field;
  DgElem r;
  r.deg = f.deg + 1;
  const Scalar sgn = sign_of(F, f.deg % 2 == 0);  // -(-1)^deg
  for (std::size_t j = 0; r.deg + j <= hc.L; ++j) {
    AlgMat left = alg_compose(a, hc.dtot[j], f.comp[j + 1]);
    AlgMat right = alg_compose(a, f.comp[j], hc.dtot[f.deg + j]);
    r.comp.push_back(alg_add(a, left, alg_scale(a, sgn, right)));
  }
  return r;
}

Vec dg_to_vec(const FDAlgebra& a, const BasicData& bd, const HomComplex& hc, const DgElem& f) {
  const Field& F = a.field;
  Vec out(hc.dim[f.deg], F.zero());
  for (const auto& b : hc.blocks[f.deg]) {
    if (b.dim == 0) continue;
    const Vec& entry = f.comp[b.j].e[b.t][b.s];
    auto c = bd.corner[b.src_v][b.dst_v].coords(F, entry);
    if (!c) throw check_error("dg_to_vec: entry escapes its corner space");
    for (std::size_t i = 0; i < b.dim; ++i) out[b.offset + i] = (*c)[i];
  }
  return out;
}

DgElem dg_from_vec(const FDAlgebra& a, const BasicData& bd, const HomComplex& hc, std::size_t n,
                   const Vec& x) {
  if (x.size() != hc.dim[n]) throw check_error("dg_from_vec: coordinate size mismatch");
  const Field& F = a.field;
  DgElem f = dg_zero(a, hc, n);
  for (const auto& b : hc.blocks[n]) {
    const Subspace& corner = bd.corner[b.src_v][b.dst_v];
    Vec entry(a.dim(), F.zero());
    for (std::size_t i = 0; i < b.dim; ++i) {
      if (F.is_zero(x[b.offset + i])) continue;
      entry = vec_add(F, entry, vec_scale(F, x[b.offset + i], corner.basis_vec(i)));
    }
    f.comp[b.j].e[b.t][b.s] = entry;
  }
  return f;
}

Mat dg_diff_matrix(const FDAlgebra& a, const BasicData& bd, const HomComplex& hc, std::size_t n) {
  if (n >= hc.top) throw check_error("dg_diff_matrix: degree at materialized top");
  const Field& F = a.field;
  Mat m(hc.dim[n + 1], hc.dim[n]);
  for (std::size_t col = 0; col < hc.dim[n]; ++col) {
    Vec x(hc.dim[n], F.zero());
    x[col] = F.one();
    Vec y = dg_to_vec(a, bd, hc, dg_diff(a, hc, dg_from_vec(a, bd, hc, n, x)));
    for (std::size_t row = 0; row < y.size(); ++row) m.at(row, col) = y[row];
  }
  return m;
}

Vec dg_class(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, const HomComplex& hc,
             const DgElem& f) {
  const Field& F = a.field;
  const std::size_t n = f.deg;
  Vec out(yoneda_dim(ed, n), F.zero());
  for (std::size_t v = 0; v < bd.nsimple; ++v)
    for (std::size_t w = 0; w < bd.nsimple; ++w) {
      const auto slots = ext_slots(ed, n, v, w);
      if (slots.empty()) continue;
      Mat tw = top_row(a, bd, w);
      const std::size_t row = hc.block[0][w];  // P_0(res w) is the single slot A·e_w
      const std::size_t base = yoneda_offset(ed, n, v, w);
      for (std::size_t k = 0; k < slots.size(); ++k) {
        const Vec& entry = f.comp[0].e[row][hc.block[n][v] + slots[k]];
        auto c = bd.proj[w].coords(F, entry);
        if (!c) throw check_error("dg_class: entry escapes its projective");
        Scalar val = F.zero();
        for (std::size_t i = 0; i < c->size(); ++i)
          val = F.add(val, F.mul(tw.at(0, i), (*c)[i]));
        out[base + k] = val;
      }
    }
  return out;
}

DgElem dg_include(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                  const HomComplex& hc, std::size_t n, const Vec& x) {
  const Field& F = a.field;
  if (x.size() != yoneda_dim(ed, n)) throw check_error("dg_include: coordinate size mismatch");
  DgElem out = dg_zero(a, hc, n);
  for (std::size_t v = 0; v < bd.nsimple; ++v)
    for (std::size_t w = 0; w < bd.nsimple; ++w) {
      const std::size_t base = yoneda_offset(ed, n, v, w);
      for (std::size_t k = 0; k < ed.dims[n][v][w]; ++k) {
        const Scalar& c = x[base + k];
        if (F.is_zero(c)) continue;
        ChainMap cm = (n == 0) ? ext_identity(a, bd, ed, v) : ext_rep(a, bd, ed, n, v, w, k);
        for (std::size_t j = 0; j < out.comp.size(); ++j) {
          // (−1)^{n·j} turns the strict chain map into a D-cocycle.
          Scalar cj = (n % 2 == 1 && j % 2 == 1) ? F.neg(c) : c;
          const AlgMat& part = cm.comp[j];
          for (std::size_t t = 0; t < part.dst.size(); ++t)
            for (std::size_t s = 0; s < part.src.size(); ++s) {
              Vec& slot = out.comp[j].e[hc.block[j][w] + t][hc.block[n + j][v] + s];
              slot = vec_add(F, slot, vec_scale(F, cj, part.e[t][s]));
            }
        }
      }
    }
  return out;
}

}  // namespace dualco
