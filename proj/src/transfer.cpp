#include "dualco/transfer.hpp"

#include <algorithm>
#include <string>

namespace dualco {

namespace {

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed + 0x9E3779B97F4A7C15ull) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

std::vector<std::size_t> shuffled_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.next() % i]);
  return order;
}

Mat cols_from(const std::vector<Vec>& cols, std::size_t ambient) {
  Mat m(ambient, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < ambient; ++i) m.at(i, j) = cols[j][i];
  return m;
}

Mat subspace_cols(const Subspace& s) {
  Mat m(s.ambient(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Vec b = s.basis_vec(j);
    for (std::size_t i = 0; i < b.size(); ++i) m.at(i, j) = b[i];
  }
  return m;
}

}  // namespace

Contraction build_contraction(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                              const HomComplex& hc, std::uint64_t seed) {
  const Field& F = a.field;
  const std::size_t top = hc.top;
  Contraction c;
  c.seed = seed;
  c.proj.resize(top + 1);
  c.incl.resize(top + 1);
  c.hmat.resize(top + 1);
  c.bnd.resize(top + 1);
  c.cmp.resize(top + 1);

  std::vector<Mat> dmat(top);  // dmat[n]: E^n -> E^{n+1}
  for (std::size_t n = 0; n < top; ++n) dmat[n] = dg_diff_matrix(a, bd, hc, n);

  // Previous degree's complement basis, in the order D maps it onto B.
  std::vector<Vec> prev_cmp;
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t dim = hc.dim[n];
    const std::size_t ydim = yoneda_dim(ed, n);

    Mat K(ydim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      Vec x(dim, F.zero());
      x[col] = F.one();
      Vec y = dg_class(a, bd, ed, hc, dg_from_vec(a, bd, hc, n, x));
      for (std::size_t row = 0; row < ydim; ++row) K.at(row, col) = y[row];
    }
    c.proj[n] = K;

    Mat I(dim, ydim);
    for (std::size_t col = 0; col < ydim; ++col) {
      Vec x(ydim, F.zero());
      x[col] = F.one();
      DgElem rep = dg_include(a, bd, ed, hc, n, x);
      if (n < hc.L && !dg_is_zero(dg_diff(a, hc, rep)))
        throw check_error("contraction: canonical representative is not a cocycle");
      Vec y = dg_to_vec(a, bd, hc, rep);
      for (std::size_t row = 0; row < dim; ++row) I.at(row, col) = y[row];
    }
    c.incl[n] = I;
    if (mat_mul(F, K, I) != Mat::identity(ydim))
      throw check_error("contraction: class read-off does not split the inclusion");

    Subspace kerK = kernel(F, K);

    std::vector<Vec> bvecs;
    if (n == 0) {
      // Degree 0 has no differential from below; its null-homotopic cycles
      // are exactly the chain endomorphisms of zero class.
      Subspace z = (top == 0) ? Subspace::full(dim) : kernel(F, dmat[0]);
      c.bnd[0] = intersect(F, z, kerK);
    } else {
      for (const Vec& cv : prev_cmp) bvecs.push_back(mat_apply(F, dmat[n - 1], cv));
      Subspace bspan = Subspace::from_rows(F, cols_from(bvecs, dim).transpose());
      if (bspan.dim() != bvecs.size())
        throw check_error("contraction: differential is not injective on the complement");
      if (bspan.dim() != rank(F, dmat[n - 1]))
        throw check_error("contraction: boundary space misses part of the image");
      if (!kerK.contains(F, bspan))
        throw check_error("contraction: boundary with nonzero class");
      c.bnd[n] = bspan;
      if (n < top) {
        // dim H^n(E) must equal dim Ext^n in the window the homotopy uses.
        if (kernel(F, dmat[n]).dim() != c.bnd[n].dim() + ydim)
          throw check_error("contraction: cohomology does not match the ext space");
      }
    }

    std::vector<Vec> cvecs =
        extend_basis(F, c.bnd[n], kerK, shuffled_order(kerK.dim(), seed ^ (0x1000ull + n)));
    c.cmp[n] = cvecs.empty() ? Subspace::zero(dim)
                             : Subspace::from_rows(F, cols_from(cvecs, dim).transpose());
    if (c.cmp[n].dim() != cvecs.size())
      throw check_error("contraction: complement basis is dependent");

    if (n >= 1) {
      // E^n = B ⊕ i(Ext^n) ⊕ C; invert that decomposition once, then read
      // the B-coordinates and send the k-th boundary back to −prev_cmp[k].
      Mat M = cols_from(bvecs, dim);
      M = M.hstack(c.incl[n]).hstack(cols_from(cvecs, dim));
      if (M.rows() != M.cols()) throw check_error("contraction: summands do not fill the degree");
      Mat Minv;
      if (!solve(F, M, Mat::identity(dim), Minv) || mat_mul(F, M, Minv) != Mat::identity(dim))
        throw check_error("contraction: summands do not span the degree");
      Mat bcoords = Minv.submatrix(0, 0, bvecs.size(), dim);
      Mat cprev = cols_from(prev_cmp, hc.dim[n - 1]);
      c.hmat[n] = mat_scale(F, F.neg(F.one()), mat_mul(F, cprev, bcoords));
    } else {
      c.hmat[0] = Mat(0, dim);
    }
    prev_cmp = std::move(cvecs);
  }
  return c;
}

void check_contraction(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                       const HomComplex& hc, const Contraction& c) {
  const Field& F = a.field;
  const std::size_t top = hc.top;
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t ydim = yoneda_dim(ed, n);
    if (mat_mul(F, c.proj[n], c.incl[n]) != Mat::identity(ydim))
      throw check_error("contraction check: p∘i is not the identity");
    if (n >= 1) {
      if (!mat_mul(F, c.hmat[n], c.incl[n]).is_zero())
        throw check_error("contraction check: h∘i is nonzero");
      if (!mat_mul(F, c.proj[n - 1], c.hmat[n]).is_zero())
        throw check_error("contraction check: p∘h is nonzero");
    }
    if (n >= 2 && !mat_mul(F, c.hmat[n - 1], c.hmat[n]).is_zero())
      throw check_error("contraction check: h∘h is nonzero");
  }
  for (std::size_t n = 1; n + 1 <= top; ++n) {
    Mat dn = dg_diff_matrix(a, bd, hc, n);
    Mat dprev = dg_diff_matrix(a, bd, hc, n - 1);
    Mat lhs = mat_sub(F, mat_mul(F, c.incl[n], c.proj[n]), Mat::identity(hc.dim[n]));
    Mat rhs = mat_add(F, mat_mul(F, dprev, c.hmat[n]), mat_mul(F, c.hmat[n + 1], dn));
    if (lhs != rhs) throw check_error("contraction check: homotopy identity fails");
  }
}

AInfinity a_infinity(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, std::size_t top,
                     std::uint64_t seed) {
  AInfinity ai;
  ai.hc = hom_complex(a, bd, ed, top);
  ai.con = build_contraction(a, bd, ed, ai.hc, seed);
  return ai;
}

YClass m_eval(const FDAlgebra& a, const BasicData& bd, const ExtData& ed, const AInfinity& ai,
              const std::vector<YClass>& args) {
  const Field& F = a.field;
  const HomComplex& hc = ai.hc;
  const std::size_t n = args.size();
  if (n < 2) throw check_error("m_eval: arity at least 2");
  std::size_t total = 0;
  for (const YClass& y : args) {
    if (y.deg == 0) throw check_error("m_eval: arguments must have positive degree");
    if (y.coeffs.size() != yoneda_dim(ed, y.deg))
      throw check_error("m_eval: argument coordinate size mismatch");
    total += y.deg;
  }
  if (total < n) throw check_error("m_eval: degree bookkeeping broke");
  const std::size_t out_deg = total - n + 2;
  if (out_deg > hc.top) throw check_error("m_eval: evaluation exceeds the materialized window");

  // lam[i][j] is h(Λ) of the argument interval [i, j] (the bare cocycle for
  // singletons); the full interval keeps the product unprojected.
  std::vector<std::vector<DgElem>> lam(n, std::vector<DgElem>(n));
  for (std::size_t i = 0; i < n; ++i)
    lam[i][i] = dg_from_vec(a, bd, hc, args[i].deg,
                            mat_apply(F, ai.con.incl[args[i].deg], args[i].coeffs));
  DgElem root;
  for (std::size_t len = 2; len <= n; ++len)
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len - 1;
      DgElem acc;
      bool first = true;
      for (std::size_t s = i; s < j; ++s) {
        const DgElem& u = lam[i][s];
        const DgElem& w = lam[s + 1][j];
        DgElem prod = dg_mul(a, hc, u, w);
        if (u.deg % 2 == 1) prod = dg_scale(a, F.neg(F.one()), prod);  // (−1)^{deg u}
        acc = first ? prod : dg_add(a, acc, prod);
        first = false;
      }
      if (len == n) {
        root = std::move(acc);
      } else {
        lam[i][j] = dg_from_vec(a, bd, hc, acc.deg - 1,
                                mat_apply(F, ai.con.hmat[acc.deg], dg_to_vec(a, bd, hc, acc)));
      }
    }
  if (root.deg != out_deg) throw check_error("m_eval: degree bookkeeping broke");
  return YClass{out_deg, dg_class(a, bd, ed, hc, root)};
}

StasheffReport stasheff_check(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                              const AInfinity& ai, std::size_t n_max) {
  const Field& F = a.field;
  StasheffReport rep;
  rep.arity_max = n_max;

  // Positive-degree basis classes as (degree, flat index) pairs.
  std::vector<YClass> basis;
  for (std::size_t d = 1; d <= ai.hc.top; ++d) {
    const std::size_t yd = yoneda_dim(ed, d);
    for (std::size_t k = 0; k < yd; ++k) {
      Vec v(yd, F.zero());
      v[k] = F.one();
      basis.push_back(YClass{d, v});
    }
  }
  if (basis.empty()) return rep;  // semisimple: nothing to verify

  std::vector<std::size_t> pick;
  for (std::size_t n = 2; n <= n_max; ++n) {
    pick.assign(n, 0);
    while (true) {
      std::size_t total = 0;
      for (std::size_t i = 0; i < n; ++i) total += basis[pick[i]].deg;
      if (total + 3 <= ai.hc.top + n) {
        std::vector<YClass> args;
        for (std::size_t i = 0; i < n; ++i) args.push_back(basis[pick[i]]);
        const std::size_t id_deg = total - n + 3;
        Vec acc(yoneda_dim(ed, id_deg), F.zero());
        for (std::size_t r = 0; r + 2 <= n; ++r)
          for (std::size_t s = 2; r + s <= n && s + 1 <= n; ++s) {
            std::vector<YClass> window(args.begin() + r, args.begin() + r + s);
            YClass inner = m_eval(a, bd, ed, ai, window);
            if (vec_is_zero(inner.coeffs)) continue;
            std::vector<YClass> outer(args.begin(), args.begin() + r);
            outer.push_back(inner);
            outer.insert(outer.end(), args.begin() + r + s, args.end());
            YClass term = m_eval(a, bd, ed, ai, outer);
            std::size_t shift = 0;  // Koszul: m_s is odd in the shift convention
            for (std::size_t i = 0; i < r; ++i) shift += args[i].deg - 1;
            Vec tv = shift % 2 == 1 ? vec_scale(F, F.neg(F.one()), term.coeffs) : term.coeffs;
            acc = vec_add(F, acc, tv);
          }
        ++rep.tuples_checked;
        if (!vec_is_zero(acc)) {
          rep.ok = false;
          std::string desc = "arity " + std::to_string(n) + " degrees (";
          for (std::size_t i = 0; i < n; ++i)
            desc += (i ? "," : "") + std::to_string(args[i].deg);
          desc += ") indices (";
          for (std::size_t i = 0; i < n; ++i) desc += (i ? "," : "") + std::to_string(pick[i]);
          desc += ")";
          rep.first_violation = desc;
          return rep;
        }
      } else {
        ++rep.tuples_skipped;
      }
      std::size_t i = n;
      while (i > 0 && pick[i - 1] + 1 == basis.size()) pick[--i] = 0;
      if (i == 0) break;
      ++pick[i - 1];
    }
  }
  return rep;
}

MaurerCartan maurer_cartan(const FDAlgebra& a, const BasicData& bd, const ExtData& ed,
                           const AInfinity& ai, const ExtQuiverResult& eq, std::size_t max_len) {
  const Field& F = a.field;
  if (ai.hc.top < 2) throw check_error("maurer_cartan: needs the degree window up to 2");
  MaurerCartan mc;
  mc.max_len = max_len;
  mc.paths = enumerate_paths(eq.quiver, max_len);
  const std::size_t y1 = yoneda_dim(ed, 1);
  const std::size_t y2 = yoneda_dim(ed, 2);
  mc.mu = Mat(y2, mc.paths.size());
  for (std::size_t pi = 0; pi < mc.paths.size(); ++pi) {
    const Path& p = mc.paths[pi];
    if (p.length() < 2) continue;
    std::vector<YClass> args;
    for (std::size_t i = p.length(); i-- > 0;) {
      const ExtArrowInfo& info = eq.info[p.arrows[i]];
      Vec v(y1, F.zero());
      v[yoneda_offset(ed, 1, info.v, info.w) + info.k] = F.one();
      args.push_back(YClass{1, v});
    }
    YClass cls = m_eval(a, bd, ed, ai, args);
    for (std::size_t row = 0; row < y2; ++row) mc.mu.at(row, pi) = cls.coeffs[row];
  }
  return mc;
}

}  // namespace dualco
