#include "dualco/ext.hpp"

namespace dualco {

namespace {

Vec elem_from_coords(const Field& F, const Subspace& s, const Vec& c) {
  Vec x(s.ambient(), Scalar(0));
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!F.is_zero(c[i]))
      for (std::size_t j = 0; j < s.ambient(); ++j)
        x[j] = F.add(x[j], F.mul(c[i], s.basis().at(i, j)));
  return x;
}

// Solves d ∘ x = rhs for the next chain-map component, d the differential
// P_{j+1} -> P_j of the target resolution.  Solvable by exactness: the
// expanded rhs lands in ker of the previous differential (or in J·P_0 at the
// bottom), which is exactly the image of d.
AlgMat lift_step(const FDAlgebra& a, const BasicData& bd, const AlgMat& d, const AlgMat& rhs) {
  const Field& F = a.field;
  Mat de = alg_expand(a, bd, d);
  Mat re = alg_expand(a, bd, rhs);

  // One column per source slot: the image of its generator.
  std::vector<std::size_t> soff = proj_offsets(bd, ProjSum{rhs.src});
  Mat gens(re.cols(), rhs.src.size());
  for (std::size_t s = 0; s < rhs.src.size(); ++s) {
    std::size_t u = rhs.src[s];
    auto c = bd.proj[u].coords(F, bd.idem[u]);
    if (!c) throw check_error("idempotent missing from its own projective");
    for (std::size_t i = 0; i < c->size(); ++i) gens.at(soff[s] + i, s) = (*c)[i];
  }
  Mat rg = mat_mul(F, re, gens);
  Mat x;
  if (!solve(F, de, rg, x)) throw check_error("chain-map lift is not solvable");

  AlgMat out = alg_zero(a, d.src, rhs.src);
  std::vector<std::size_t> toff = proj_offsets(bd, ProjSum{d.src});
  for (std::size_t s = 0; s < rhs.src.size(); ++s)
    for (std::size_t t = 0; t < d.src.size(); ++t) {
      const Subspace& pt = bd.proj[d.src[t]];
      Vec slice(pt.dim());
      for (std::size_t i = 0; i < pt.dim(); ++i) slice[i] = x.at(toff[t] + i, s);
      // Weight by the source idempotent; still a solution since d is a left
      // module map and the generator is already weighted.
      out.e[t][s] = a.mul(bd.idem[rhs.src[s]], elem_from_coords(F, pt, slice));
    }
  alg_check(a, bd, out);

  AlgMat back = alg_compose(a, d, out);
  for (std::size_t t = 0; t < back.dst.size(); ++t)
    for (std::size_t s = 0; s < back.src.size(); ++s)
      if (back.e[t][s] != rhs.e[t][s]) throw check_error("chain-map lift does not close");
  return out;
}

// Extends a bottom component to a full chain map by repeated lifting.
void lift_all(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, ChainMap& f) {
  const Resolution& rs = ed.res[f.src];
  const Resolution& rd = ed.res[f.dst];
  for (std::size_t j = 0; f.deg + j + 1 <= ed.L; ++j) {
    AlgMat rhs = alg_compose(a, f.comp[j], rs.d[f.deg + j]);
    f.comp.push_back(lift_step(a, bd, rd.d[j], rhs));
  }
}

}  // namespace

ExtData ext_data(const FDAlgebra& a, const BasicData& bd, std::size_t L) {
  ExtData ed;
  ed.L = L;
  for (std::size_t v = 0; v < bd.nsimple; ++v)
    ed.res.push_back(minimal_resolution(a, bd, v, L));
  ed.dims.assign(L + 1, std::vector<std::vector<std::size_t>>(
                            bd.nsimple, std::vector<std::size_t>(bd.nsimple, 0)));
  for (std::size_t n = 0; n <= L; ++n)
    for (std::size_t v = 0; v < bd.nsimple; ++v)
      for (std::size_t w : ed.res[v].mods[n].verts) ed.dims[n][v][w] += 1;
  return ed;
}

std::vector<std::vector<std::vector<std::size_t>>> ext_dims(const FDAlgebra& a, std::size_t L) {
  FDAlgebra b = basic_algebra(a);
  BasicData bd = basic_data(b);
  return ext_data(b, bd, L).dims;
}

std::vector<std::size_t> ext_slots(const ExtData& ed, std::size_t n, std::size_t v,
                                   std::size_t w) {
  std::vector<std::size_t> out;
  const std::vector<std::size_t>& verts = ed.res[v].mods[n].verts;
  for (std::size_t k = 0; k < verts.size(); ++k)
    if (verts[k] == w) out.push_back(k);
  return out;
}

void check_chain_map(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                     const ChainMap& f) {
  if (f.comp.size() != ed.L - f.deg + 1) throw check_error("chain map has wrong length");
  const Resolution& rs = ed.res[f.src];
  const Resolution& rd = ed.res[f.dst];
  for (std::size_t j = 0; f.deg + j + 1 <= ed.L; ++j) {
    AlgMat lhs = alg_compose(a, rd.d[j], f.comp[j + 1]);
    AlgMat rhs = alg_compose(a, f.comp[j], rs.d[f.deg + j]);
    Mat diff = mat_sub(a.field, alg_expand(a, bd, lhs), alg_expand(a, bd, rhs));
    if (!diff.is_zero()) throw check_error("chain-map square does not commute");
  }
}

ChainMap ext_rep(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, std::size_t n,
                 std::size_t v, std::size_t w, std::size_t k) {
  std::vector<std::size_t> slots = ext_slots(ed, n, v, w);
  if (k >= slots.size()) throw check_error("ext class index out of range");
  ChainMap f;
  f.src = v;
  f.dst = w;
  f.deg = n;
  AlgMat bottom = alg_zero(a, {w}, ed.res[v].mods[n].verts);
  bottom.e[0][slots[k]] = bd.idem[w];
  f.comp.push_back(bottom);
  lift_all(a, bd, ed, f);
  return f;
}

Vec chain_class(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, const ChainMap& f) {
  const Field& F = a.field;
  Mat tr = top_row(a, bd, f.dst);
  std::vector<std::size_t> slots = ext_slots(ed, f.deg, f.src, f.dst);
  Vec out(slots.size(), Scalar(0));
  for (std::size_t k = 0; k < slots.size(); ++k) {
    auto c = bd.proj[f.dst].coords(F, f.comp[0].e[0][slots[k]]);
    if (!c) throw check_error("bottom entry leaves its corner");
    Scalar s(0);
    for (std::size_t i = 0; i < c->size(); ++i) s = F.add(s, F.mul(tr.at(0, i), (*c)[i]));
    out[k] = s;
  }
  return out;
}

YonedaClass yoneda_product(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                           const ChainMap& f, const ChainMap& g) {
  if (f.dst != g.src) throw check_error("yoneda product of non-composable classes");
  if (f.deg + g.deg > ed.L) throw check_error("yoneda product exceeds resolution length");
  YonedaClass y;
  y.composite.src = f.src;
  y.composite.dst = g.dst;
  y.composite.deg = f.deg + g.deg;
  for (std::size_t m = 0; y.composite.deg + m <= ed.L; ++m)
    y.composite.comp.push_back(alg_compose(a, g.comp[m], f.comp[g.deg + m]));
  y.coeffs = chain_class(a, bd, ed, y.composite);
  return y;
}

ChainMap ext_identity(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                      std::size_t v) {
  ChainMap f;
  f.src = f.dst = v;
  f.deg = 0;
  for (std::size_t j = 0; j <= ed.L; ++j) {
    const std::vector<std::size_t>& verts = ed.res[v].mods[j].verts;
    AlgMat id = alg_zero(a, verts, verts);
    for (std::size_t s = 0; s < verts.size(); ++s) id.e[s][s] = bd.idem[verts[s]];
    f.comp.push_back(id);
  }
  return f;
}

ExtQuiverResult ext_quiver(const FDAlgebra& a, const BasicData& bd, const ExtData& ed) {
  ExtQuiverResult out;
  out.quiver.vertices = bd.labels;
  std::size_t counter = 1;
  auto fresh_label = [&]() {
    for (;;) {
      std::string name = "a" + std::to_string(counter++);
      bool clash = false;
      for (const auto& v : out.quiver.vertices)
        if (v == name) clash = true;
      if (!clash) return name;
    }
  };
  for (std::size_t v = 0; v < bd.nsimple; ++v)
    for (std::size_t w = 0; w < bd.nsimple; ++w) {
      std::size_t n = ed.dims.size() > 1 ? ed.dims[1][v][w] : 0;
      for (std::size_t k = 0; k < n; ++k) {
        out.quiver.arrows.push_back(Arrow{fresh_label(), v, w});
        out.info.push_back(ExtArrowInfo{v, w, k});
        out.arrow_reps.push_back(ext_rep(a, bd, ed, 1, v, w, k));
      }
    }
  out.quiver.validate();
  return out;
}

}  // namespace dualco
