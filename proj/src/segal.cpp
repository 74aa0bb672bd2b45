#include "dualco/segal.hpp"

#include "dualco/resolution.hpp"

#include <sstream>

namespace dualco {

namespace {

std::string dim_list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

SegalMap segal_map(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                   const ExtQuiverResult& eq, const MaurerCartan& mc) {
  const Field& F = a.field;
  const std::size_t nv = bd.nsimple;
  Subspace rad2 = ideal_power(a, bd.rad, 2);

  SegalMap sm;
  sm.palg = truncated_path_algebra(F, eq.quiver, mc.max_len);
  sm.lifts.assign(eq.quiver.arrows.size(), Vec(a.dim(), Scalar(0)));

  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t w = 0; w < nv; ++w) {
      std::vector<std::size_t> block;
      for (std::size_t j = 0; j < eq.info.size(); ++j) {
        if (eq.info[j].v == v && eq.info[j].w == w) block.push_back(j);
      }
      // (J ∩ e_w A e_v) / (J^2 ∩ e_w A e_v) is Ext^1(S_v, S_w)^*.
      Quotient layer = quotient(F, intersect(F, rad2, bd.corner[w][v]),
                                intersect(F, bd.rad, bd.corner[w][v]));
      if (layer.dim() != block.size())
        throw check_error("segal_map: radical layer does not match the arrow count");
      if (block.empty()) continue;
      const std::size_t m = block.size();

      // Lift every representative y through d_1: y lies in J e_v = im d_1.
      Mat d1 = alg_expand(a, bd, ed.res[v].d[0]);
      Mat rhs(d1.rows(), m);
      for (std::size_t t = 0; t < m; ++t) {
        Vec y(layer.lift.row_data(t), layer.lift.row_data(t) + a.dim());
        auto co = bd.proj[v].coords(F, y);
        if (!co) throw check_error("segal_map: representative outside A e_v");
        for (std::size_t i = 0; i < co->size(); ++i) rhs.at(i, t) = (*co)[i];
      }
      Mat xi(0, 0);
      if (!solve(F, d1, rhs, xi))
        throw check_error("segal_map: representative not in the radical of the projective");

      // Pairing of arrow classes against the lifts: top coefficient of
      // alpha_0(xi) in P_0 of the target simple.
      Mat top = top_row(a, bd, w);
      Mat pairing(m, m);
      for (std::size_t l = 0; l < m; ++l) {
        Mat row = mat_mul(F, top, alg_expand(a, bd, eq.arrow_reps[block[l]].comp[0]));
        for (std::size_t t = 0; t < m; ++t) {
          Scalar s(0);
          for (std::size_t i = 0; i < xi.rows(); ++i)
            s = F.add(s, F.mul(row.at(0, i), xi.at(i, t)));
          pairing.at(l, t) = s;
        }
      }
      Mat inv(0, 0);
      if (!solve(F, pairing, Mat::identity(m), inv))
        throw check_error("segal_map: singular class/lift pairing, convention mismatch");
      for (std::size_t l = 0; l < m; ++l) {
        Vec lift(a.dim(), Scalar(0));
        for (std::size_t t = 0; t < m; ++t) {
          Vec y(layer.lift.row_data(t), layer.lift.row_data(t) + a.dim());
          lift = vec_add(F, lift, vec_scale(F, inv.at(t, l), y));
        }
        sm.lifts[block[l]] = lift;
      }
    }
  }

  // Paths to products of lifts, last arrow leftmost (the product is in
  // function-composition order, so this extends arrow assignment
  // multiplicatively).
  sm.to_a = Mat(a.dim(), mc.paths.size());
  for (std::size_t p = 0; p < mc.paths.size(); ++p) {
    const Path& path = mc.paths[p];
    Vec val;
    if (path.trivial()) {
      val = bd.idem[path.source];
    } else {
      val = sm.lifts[path.arrows.back()];
      for (std::size_t i = path.arrows.size() - 1; i-- > 0;)
        val = a.mul(val, sm.lifts[path.arrows[i]]);
    }
    for (std::size_t i = 0; i < a.dim(); ++i) sm.to_a.at(i, p) = val[i];
  }
  return sm;
}

SegalReport segal_compare(const FDAlgebra& a, std::size_t max_len, std::uint64_t seed) {
  const Field& F = a.field;
  BasicData bd = basic_data(a);
  std::size_t nil = nilpotency_index(a, bd.rad);
  if (nil > max_len)
    throw input_error("segal_compare: max_len must be at least the radical nilpotency");

  ExtData ed = ext_data(a, bd, 2);
  ExtQuiverResult eq = ext_quiver(a, bd, ed);
  AInfinity ai = a_infinity(a, bd, ed, 2, seed);
  MaurerCartan mc = maurer_cartan(a, bd, ed, ai, eq, max_len);

  SegalReport r;
  r.ok = true;
  auto add = [&](const std::string& name, CheckStatus st, const std::string& detail) {
    r.items.push_back({name, st, detail});
    if (st == CheckStatus::fail) r.ok = false;
  };

  SegalMap sm;
  try {
    sm = segal_map(a, bd, ed, eq, mc);
  } catch (const check_error& e) {
    add("comparison map", CheckStatus::fail, e.what());
    r.ok = false;
    return r;
  }

  if (rank(F, sm.to_a) == a.dim())
    add("surjective", CheckStatus::pass, "");
  else
    add("surjective", CheckStatus::fail, "comparison map is not onto");

  Subspace I = ideal_closure(sm.palg, Subspace::from_rows(F, mc.mu));
  Subspace ker = kernel(F, sm.to_a);
  if (ker == I)
    add("kernel", CheckStatus::pass, "");
  else
    add("kernel", CheckStatus::fail,
        "kernel differs from the Maurer-Cartan ideal, convention mismatch");

  // Radical layers of a against length layers of the quotient.
  std::vector<std::size_t> layer_dims;
  Subspace jn = Subspace::full(a.dim());
  for (std::size_t n = 0;; ++n) {
    Subspace next = ideal_power(a, bd.rad, n + 1);
    layer_dims.push_back(jn.dim() - next.dim());
    if (next.dim() == 0) break;
    jn = next;
  }
  r.graded_a = layer_dims;

  std::vector<std::size_t> path_dims;
  std::size_t prev = 0;
  for (std::size_t n = 0; n <= max_len; ++n) {
    Mat rows(0, sm.palg.dim());
    for (std::size_t p = 0; p < mc.paths.size(); ++p) {
      if (mc.paths[p].length() <= n) {
        Mat row(1, sm.palg.dim());
        row.at(0, p) = Scalar(1);
        rows = rows.vstack(row);
      }
    }
    Subspace fn = Subspace::from_rows(F, rows);
    std::size_t cur = fn.dim() - intersect(F, fn, I).dim();
    path_dims.push_back(cur - prev);
    prev = cur;
  }
  r.graded_path = path_dims;

  std::vector<std::size_t> ga = r.graded_a, gp = r.graded_path;
  std::size_t len = std::max(ga.size(), gp.size());
  ga.resize(len, 0);
  gp.resize(len, 0);
  if (ga == gp)
    add("graded dimensions", CheckStatus::pass, dim_list(r.graded_a));
  else
    add("graded dimensions", CheckStatus::fail,
        dim_list(r.graded_a) + " vs " + dim_list(r.graded_path));

  return r;
}

}  // namespace dualco
