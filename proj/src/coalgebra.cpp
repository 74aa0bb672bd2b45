#include "dualco/coalgebra.hpp"

#include <algorithm>
#include <sstream>

#include "dualco/semisimple.hpp"

namespace dualco {

namespace {

// x -> (f (x) id) Delta(x).
Mat contract_first(const Coalgebra& c, const Vec& f) {
  const Field& F = c.field;
  const std::size_t d = c.dim();
  Mat m(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      if (F.is_zero(f[i])) continue;
      for (std::size_t j = 0; j < d; ++j)
        m.at(j, k) = F.add(m.at(j, k), F.mul(f[i], c.delta.at(i * d + j, k)));
    }
  return m;
}

// x -> (id (x) f) Delta(x).
Mat contract_second(const Coalgebra& c, const Vec& f) {
  const Field& F = c.field;
  const std::size_t d = c.dim();
  Mat m(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) {
      if (F.is_zero(f[j])) continue;
      for (std::size_t i = 0; i < d; ++i)
        m.at(i, k) = F.add(m.at(i, k), F.mul(c.delta.at(i * d + j, k), f[j]));
    }
  return m;
}

void assert_delta_closed(const Coalgebra& c, const Subspace& d, const char* what) {
  Subspace tt = tensor_sub(c.field, d, d);
  for (std::size_t p = 0; p < d.dim(); ++p)
    if (!tt.contains(c.field, c.comul(d.basis_vec(p)))) throw check_error(what);
}

}  // namespace

Vec Coalgebra::basis_vec(std::size_t i) const {
  Vec v(dim(), Scalar(0));
  v[i] = field.one();
  return v;
}

Vec Coalgebra::comul(const Vec& x) const { return mat_apply(field, delta, x); }

Scalar Coalgebra::eps(const Vec& x) const {
  Scalar s = field.zero();
  for (std::size_t i = 0; i < dim(); ++i) s = field.add(s, field.mul(counit[i], x[i]));
  return s;
}

std::string Coalgebra::elem_str(const Vec& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (field.is_zero(x[i])) continue;
    if (!first) os << " + ";
    if (!field.eq(x[i], field.one())) os << field.str(x[i]) << "*";
    os << basis_names[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

void check_coalgebra(const Coalgebra& c) {
  const Field& F = c.field;
  const std::size_t d = c.dim();
  if (c.delta.rows() != d * d || c.delta.cols() != d || c.counit.size() != d)
    throw check_error("coalgebra structure constants have the wrong shape");
  // Coassociativity per basis element, walking nonzero terms only; a dense
  // (d^3 x d^2)(d^2 x d) product would be wasteful for sparse deltas.
  Vec lhs(d * d * d, Scalar(0)), rhs(d * d * d, Scalar(0));
  for (std::size_t k = 0; k < d; ++k) {
    std::fill(lhs.begin(), lhs.end(), Scalar(0));
    std::fill(rhs.begin(), rhs.end(), Scalar(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& cij = c.delta.at(i * d + j, k);
        if (F.is_zero(cij)) continue;
        for (std::size_t p = 0; p < d; ++p)
          for (std::size_t q = 0; q < d; ++q) {
            const Scalar& front = c.delta.at(p * d + q, i);
            if (!F.is_zero(front)) {
              std::size_t idx = (p * d + q) * d + j;
              lhs[idx] = F.add(lhs[idx], F.mul(cij, front));
            }
            const Scalar& back = c.delta.at(p * d + q, j);
            if (!F.is_zero(back)) {
              std::size_t idx = (i * d + p) * d + q;
              rhs[idx] = F.add(rhs[idx], F.mul(cij, back));
            }
          }
      }
    if (lhs != rhs)
      throw check_error("comultiplication is not coassociative at " + c.basis_names[k]);
  }
  // Counit laws: (eps (x) id)Delta = id = (id (x) eps)Delta.
  for (std::size_t k = 0; k < d; ++k) {
    Vec left(d, Scalar(0)), right(d, Scalar(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& cij = c.delta.at(i * d + j, k);
        if (F.is_zero(cij)) continue;
        left[j] = F.add(left[j], F.mul(c.counit[i], cij));
        right[i] = F.add(right[i], F.mul(cij, c.counit[j]));
      }
    if (left != c.basis_vec(k) || right != c.basis_vec(k))
      throw check_error("counit law fails at " + c.basis_names[k]);
  }
}

Coalgebra dual_coalgebra_fd(const FDAlgebra& a) {
  Coalgebra c;
  c.field = a.field;
  const std::size_t d = a.dim();
  for (const auto& n : a.basis_names) c.basis_names.push_back(n + "*");
  c.delta = Mat(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) c.delta.at(i * d + j, k) = a.table[i][j][k];
  c.counit = a.unit;
  check_coalgebra(c);
  return c;
}

FDAlgebra dual_algebra(const Coalgebra& c) {
  FDAlgebra a;
  a.field = c.field;
  const std::size_t d = c.dim();
  for (const auto& n : c.basis_names) a.basis_names.push_back(n + "*");
  a.table.assign(d, std::vector<Vec>(d, Vec(d, Scalar(0))));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) a.table[i][j][k] = c.delta.at(i * d + j, k);
  a.unit = c.counit;
  check_unital(a);
  check_associative(a);
  return a;
}

Coalgebra sub_coalgebra(const Coalgebra& c, const Subspace& d) {
  const Field& F = c.field;
  const std::size_t n = c.dim(), s = d.dim();
  if (d.ambient() != n) throw check_error("sub_coalgebra: ambient dimension mismatch");
  // Tensor products of basis pairs are independent, so structure constants
  // are the unique solution of K x = Delta(basis).
  Mat K(n * n, s * s);
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < s; ++q)
      for (std::size_t i = 0; i < n; ++i) {
        const Scalar& dpi = d.basis().at(p, i);
        if (F.is_zero(dpi)) continue;
        for (std::size_t j = 0; j < n; ++j)
          K.at(i * n + j, p * s + q) = F.mul(dpi, d.basis().at(q, j));
      }
  Mat B(n * n, s);
  for (std::size_t p = 0; p < s; ++p) {
    Vec dv = c.comul(d.basis_vec(p));
    for (std::size_t r = 0; r < n * n; ++r) B.at(r, p) = dv[r];
  }
  Mat X;
  if (!solve(F, K, B, X))
    throw check_error("sub_coalgebra: subspace is not closed under comultiplication");
  Coalgebra sub;
  sub.field = F;
  for (std::size_t p = 0; p < s; ++p) sub.basis_names.push_back(c.elem_str(d.basis_vec(p)));
  sub.delta = X;
  sub.counit.assign(s, Scalar(0));
  for (std::size_t p = 0; p < s; ++p) sub.counit[p] = c.eps(d.basis_vec(p));
  check_coalgebra(sub);
  return sub;
}

Subspace coradical(const Coalgebra& c) {
  const Field& F = c.field;
  Subspace rad = radical(dual_algebra(c));
  Subspace cor = kernel(F, rad.basis());
  assert_delta_closed(c, cor, "coradical is not a subcoalgebra");
  if (radical(dual_algebra(sub_coalgebra(c, cor))).dim() != 0)
    throw check_error("coradical has a non-semisimple dual");
  return cor;
}

std::vector<std::size_t> Filtration::dims() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers) out.push_back(l.dim());
  return out;
}

Filtration coradical_filtration(const Coalgebra& c) {
  const Field& F = c.field;
  const std::size_t d = c.dim();
  Filtration f;
  f.layers.push_back(coradical(c));
  Subspace full = Subspace::full(d);
  Subspace left = tensor_sub(F, f.layers.front(), full);  // C_0 (x) C
  while (f.layers.back() != full) {
    const Subspace& prev = f.layers.back();
    Subspace wedge = sum(F, tensor_sub(F, full, prev), left);
    Subspace next = preimage(F, c.delta, wedge);
    if (!next.contains(F, prev)) throw check_error("coradical filtration is not ascending");
    if (next == prev) throw check_error("coradical filtration stalls below the coalgebra");
    f.layers.push_back(next);
  }
  f.stable = f.layers.size() - 1;
  return f;
}

Subspace max_subcoalgebra_in(const Coalgebra& c, const Subspace& w) {
  const Field& F = c.field;
  if (w.ambient() != c.dim()) throw check_error("max_subcoalgebra_in: ambient mismatch");
  Subspace full = Subspace::full(c.dim());
  Subspace d = w;
  for (;;) {
    Subspace t = intersect(F, tensor_sub(F, d, full), tensor_sub(F, full, d));
    Subspace next = intersect(F, d, preimage(F, c.delta, t));
    if (next == d) break;
    d = next;
  }
  assert_delta_closed(c, d, "maximal subcoalgebra is not Delta-closed");
  return d;
}

PointedComponents pointed_components(const Coalgebra& c) {
  const Field& F = c.field;
  const std::size_t d = c.dim();
  FDAlgebra dual = dual_algebra(c);
  SimplesResult sr = simples(dual);
  for (const auto& s : sr.simples)
    if (s.dim > 1)
      throw input_error("coalgebra is not pointed: simple subcoalgebra dual to " + s.label +
                        " has dimension " + std::to_string(s.dim * s.dim));
  BasicData bd = basic_data(dual);
  const std::size_t m = bd.nsimple;

  // Group-likes: the coradical elements dual to the idempotent characters.
  Mat sys = bd.rad.basis();
  Mat esys(m, d);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < d; ++k) esys.at(j, k) = bd.idem[j][k];
  sys = sys.vstack(esys);
  Mat rhs(sys.rows(), m);
  for (std::size_t j = 0; j < m; ++j) rhs.at(bd.rad.dim() + j, j) = F.one();
  Mat G;
  if (!solve(F, sys, rhs, G)) throw check_error("group-like system is inconsistent");
  PointedComponents out;
  for (std::size_t s = 0; s < m; ++s) {
    Vec g(d, Scalar(0));
    for (std::size_t k = 0; k < d; ++k) g[k] = G.at(k, s);
    Vec gg(d * d, Scalar(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) gg[i * d + j] = F.mul(g[i], g[j]);
    if (c.comul(g) != gg || !F.eq(c.eps(g), F.one()))
      throw check_error("group-like equations fail for a coradical character");
    out.grouplikes.push_back(g);
  }

  // Link graph: nontrivial (g_s, g_t)-skew-primitives beyond span(g_s - g_t).
  std::vector<std::size_t> parent(m);
  for (std::size_t s = 0; s < m; ++s) parent[s] = s;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      const Vec &gs = out.grouplikes[s], &gt = out.grouplikes[t];
      Mat M(d * d, d);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            Scalar v = c.delta.at(i * d + j, k);
            if (j == k) v = F.sub(v, gs[i]);
            if (i == k) v = F.sub(v, gt[j]);
            M.at(i * d + j, k) = v;
          }
      Subspace prim = kernel(F, M);
      std::size_t trivial = 0;
      if (s != t) {
        if (!prim.contains(F, vec_sub(F, gs, gt)))
          throw check_error("g_s - g_t is not skew-primitive");
        trivial = 1;
      }
      if (prim.dim() > trivial) parent[find(s)] = find(t);
    }
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t s = 0; s < m; ++s) {
    if (find(s) != s) continue;
    std::vector<std::size_t> grp;
    for (std::size_t t = 0; t < m; ++t)
      if (find(t) == s) grp.push_back(t);
    groups.push_back(grp);
  }
  std::sort(groups.begin(), groups.end());

  // Components: two-sided cut by the block idempotent of the dual algebra.
  std::size_t total = 0;
  for (const auto& grp : groups) {
    Vec e(d, Scalar(0));
    for (std::size_t s : grp) e = vec_add(F, e, bd.idem[s]);
    if (dual.left_mult(e) != dual.right_mult(e))
      throw check_error("block idempotent is not central");
    Mat op = mat_mul(F, contract_second(c, e), contract_first(c, e));
    Subspace comp = image(F, op);
    assert_delta_closed(c, comp, "pointed component is not a subcoalgebra");
    for (std::size_t s : grp)
      if (!comp.contains(F, out.grouplikes[s]))
        throw check_error("pointed component misses its group-like");
    total += comp.dim();
    out.components.push_back(comp);
  }
  if (total != d) throw check_error("pointed components do not decompose the coalgebra");
  out.groups = std::move(groups);
  return out;
}

}  // namespace dualco
