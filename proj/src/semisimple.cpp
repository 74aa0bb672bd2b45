#include "dualco/semisimple.hpp"

#include <algorithm>

namespace dualco {

namespace {

// ---- polynomial helpers (ascending coefficients, over the given field) ----

void poly_trim(const Field& F, Vec& p) {
  while (!p.empty() && F.is_zero(p.back())) p.pop_back();
}

std::size_t poly_deg(const Vec& p) { return p.empty() ? 0 : p.size() - 1; }

Vec poly_mul(const Field& F, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  poly_trim(F, r);
  return r;
}

// num = q*den + r with deg r < deg den; den's leading coefficient invertible.
void poly_divmod(const Field& F, Vec num, const Vec& den, Vec& q, Vec& r) {
  if (den.empty()) throw check_error("poly division by zero");
  q.assign(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Scalar(0));
  const Scalar lead_inv = F.inv(den.back());
  while (num.size() >= den.size() && !num.empty()) {
    poly_trim(F, num);
    if (num.size() < den.size()) break;
    std::size_t shift = num.size() - den.size();
    Scalar c = F.mul(num.back(), lead_inv);
    q[shift] = F.add(q[shift], c);
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] = F.sub(num[shift + i], F.mul(c, den[i]));
  }
  poly_trim(F, num);
  r = num;
  poly_trim(F, q);
}

Vec poly_monic(const Field& F, Vec p) {
  poly_trim(F, p);
  if (p.empty()) return p;
  const Scalar inv = F.inv(p.back());
  for (Scalar& c : p) c = F.mul(inv, c);
  return p;
}

Vec poly_gcd(const Field& F, Vec a, Vec b) {
  poly_trim(F, a);
  poly_trim(F, b);
  while (!b.empty()) {
    Vec q, r;
    poly_divmod(F, a, b, q, r);
    a = b;
    b = r;
  }
  return poly_monic(F, a);
}

// g = gcd, with alpha*a + beta*b = g.
void poly_ext_gcd(const Field& F, Vec a, Vec b, Vec& g, Vec& alpha, Vec& beta) {
  Vec r0 = a, r1 = b;
  Vec s0{F.one()}, s1{}, t0{}, t1{F.one()};
  poly_trim(F, r0);
  poly_trim(F, r1);
  while (!r1.empty()) {
    Vec q, r;
    poly_divmod(F, r0, r1, q, r);
    r0 = r1;
    r1 = r;
    Vec s2 = s0, t2 = t0;
    Vec qs = poly_mul(F, q, s1), qt = poly_mul(F, q, t1);
    s2.resize(std::max(s2.size(), qs.size()), Scalar(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = F.sub(s2[i], qs[i]);
    t2.resize(std::max(t2.size(), qt.size()), Scalar(0));
    for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = F.sub(t2[i], qt[i]);
    poly_trim(F, s2);
    poly_trim(F, t2);
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.empty()) throw check_error("ext gcd of zero polynomials");
  const Scalar inv = F.inv(r0.back());
  auto scale = [&](Vec& p) {
    for (Scalar& c : p) c = F.mul(inv, c);
  };
  scale(r0);
  scale(s0);
  scale(t0);
  g = r0;
  alpha = s0;
  beta = t0;
}

Vec poly_derivative(const Field& F, const Vec& p) {
  Vec d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(F.mul(F.from_long((long)i), p[i]));
  poly_trim(F, d);
  return d;
}

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n == 0) return {};
  if (n > mpz_class("1000000000000"))
    throw unsupported_error("coefficient too large for exact root enumeration");
  std::vector<std::pair<mpz_class, unsigned>> fac;
  mpz_class m = n;
  for (mpz_class d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) fac.push_back({d, e});
  }
  if (m > 1) fac.push_back({m, 1});
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fac) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

Scalar poly_eval(const Field& F, const Vec& p, const Scalar& x) {
  Scalar v(0);
  for (std::size_t i = p.size(); i-- > 0;) v = F.add(F.mul(v, x), p[i]);
  return v;
}

// Horner evaluation of p at the algebra element z, with u as the unit.
Vec poly_eval_elem(const FDAlgebra& a, const Vec& p, const Vec& z, const Vec& u) {
  Vec v(a.dim(), Scalar(0));
  for (std::size_t i = p.size(); i-- > 0;) {
    v = a.mul(v, z);
    if (!a.field.is_zero(p[i]))
      for (std::size_t c = 0; c < a.dim(); ++c)
        v[c] = a.field.add(v[c], a.field.mul(p[i], u[c]));
  }
  return v;
}

Mat row_of(const Vec& v) {
  Mat m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m.at(0, i) = v[i];
  return m;
}

}  // namespace

Vec poly_squarefree(const Field& F, Vec m) {
  m = poly_monic(F, m);
  if (poly_deg(m) <= 1) return m;
  Vec d = poly_derivative(F, m);
  if (d.empty()) {
    // Characteristic p with m = u(t^p) = u(t)^p over F_p (Frobenius fixes
    // coefficients); take the squarefree part of u.
    const std::size_t p = F.characteristic();
    if (p == 0) throw check_error("zero derivative in characteristic 0");
    Vec u;
    for (std::size_t i = 0; i < m.size(); i += p) u.push_back(m[i]);
    return poly_squarefree(F, u);
  }
  Vec g = poly_gcd(F, m, d);
  if (poly_deg(g) == 0) return m;
  Vec q, r;
  poly_divmod(F, m, g, q, r);
  if (!r.empty()) throw check_error("squarefree division remainder");
  // q may still have multiple factors in characteristic p (inseparable
  // part); iterate until stable.
  Vec q2 = poly_squarefree(F, q);
  return q2;
}

std::vector<Scalar> poly_roots(const Field& F, const Vec& m_in) {
  Vec m = poly_monic(F, m_in);
  std::vector<Scalar> roots;
  if (poly_deg(m) == 0) return roots;
  if (F.is_prime()) {
    const unsigned long p = F.characteristic();
    if (p > 10000) throw unsupported_error("root search over large prime field");
    for (unsigned long r = 0; r < p; ++r) {
      Scalar x = F.from_long((long)r);
      if (F.is_zero(poly_eval(F, m, x))) roots.push_back(x);
    }
    return roots;
  }
  // Rational roots p/q with p | a0, q | lead, after integer scaling.
  mpz_class den_lcm = 1;
  for (const Scalar& c : m) {
    mpz_class d = c.get_den();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  std::vector<mpz_class> zc;
  for (const Scalar& c : m) {
    Scalar s = c * Scalar(den_lcm);
    s.canonicalize();
    zc.push_back(s.get_num());
  }
  std::size_t low = 0;
  while (low < zc.size() && zc[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar(0));
  if (low + 1 >= zc.size()) return roots;
  std::vector<mpz_class> nums = divisors_of(zc[low]);
  std::vector<mpz_class> dens = divisors_of(zc.back());
  for (const mpz_class& p : nums)
    for (const mpz_class& q : dens)
      for (int sign : {1, -1}) {
        Scalar cand(sign * p, q);
        cand.canonicalize();
        if (F.is_zero(poly_eval(F, m, cand))) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
  return roots;
}

Vec minimal_polynomial(const FDAlgebra& a, const Vec& z, const Vec& u) {
  const Field& F = a.field;
  std::vector<Vec> powers{u};
  Mat stack = row_of(u);
  while (true) {
    Vec next = a.mul(powers.back(), z);
    // Solve stack^T * c = next; dependence gives the minimal polynomial.
    Mat b(a.dim(), 1);
    for (std::size_t i = 0; i < a.dim(); ++i) b.at(i, 0) = next[i];
    Mat x;
    if (solve(F, stack.transpose(), b, x) && rank(F, stack) == stack.rows()) {
      Vec m(powers.size() + 1, Scalar(0));
      for (std::size_t i = 0; i < powers.size(); ++i) m[i] = F.neg(x.at(i, 0));
      m[powers.size()] = F.one();
      return m;
    }
    powers.push_back(next);
    stack = stack.vstack(row_of(next));
    if (powers.size() > a.dim() + 1) throw check_error("minimal polynomial search overflow");
  }
}

std::vector<Vec> split_idempotents_commutative(const FDAlgebra& a,
                                               const std::vector<Vec>& comm_basis, const Vec& e) {
  const Field& F = a.field;
  std::vector<Vec> idems{e};
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < idems.size() && !progress; ++k) {
      const Vec& u = idems[k];
      for (const Vec& zraw : comm_basis) {
        // Project into the corner uBu; u is the local unit.
        Vec z = a.mul(a.mul(u, zraw), u);
        Vec m = minimal_polynomial(a, z, u);
        if (poly_deg(m) <= 1) continue;
        Vec sf = poly_squarefree(F, m);
        std::vector<Scalar> roots = poly_roots(F, sf);
        bool split_done = false;
        for (const Scalar& lam : roots) {
          // m = (t - lam)^mult * g with g(lam) != 0.
          Vec lin{F.neg(lam), F.one()};
          Vec g = m, q, r;
          while (true) {
            poly_divmod(F, g, lin, q, r);
            if (!r.empty()) break;
            g = q;
          }
          if (poly_deg(g) == 0) continue;  // single-point spectrum, no split
          Vec primary, alpha, beta, gg;
          // primary = (t - lam)^mult = m / g.
          poly_divmod(F, m, g, primary, r);
          if (!r.empty()) throw check_error("primary factor division remainder");
          poly_ext_gcd(F, primary, g, gg, alpha, beta);
          if (poly_deg(gg) != 0) throw check_error("primary factors not coprime");
          Vec w = poly_eval_elem(a, poly_mul(F, beta, g), z, u);
          if (vec_is_zero(w)) continue;
          if (a.mul(w, w) != w) throw check_error("CRT element is not idempotent");
          Vec rest = vec_sub(F, u, w);
          if (vec_is_zero(rest)) continue;
          idems[k] = w;
          idems.push_back(rest);
          progress = true;
          split_done = true;
          break;
        }
        if (split_done) break;
      }
    }
  }
  return idems;
}

namespace {

// Subspace of A spanned by the given vectors.
Subspace span_of(const Field& F, std::size_t dim, const std::vector<Vec>& vs) {
  Mat rows(0, dim);
  for (const Vec& v : vs) rows = rows.vstack(row_of(v));
  return Subspace::from_rows(F, rows.rows() ? rows : Mat(0, dim));
}

// Center of the algebra: kernel of x -> [x, b_i] for all i.
Subspace center_of(const FDAlgebra& a) {
  Mat stacked(0, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec b = a.basis_vec(i);
    Mat comm = mat_sub(a.field, a.left_mult(b), a.right_mult(b));
    stacked = stacked.vstack(comm);
  }
  return kernel(a.field, stacked);
}

// Echelon basis of the corner u·A·u.
std::vector<Vec> corner_basis(const FDAlgebra& a, const Vec& u) {
  std::vector<Vec> imgs;
  for (std::size_t i = 0; i < a.dim(); ++i) imgs.push_back(a.mul(a.mul(u, a.basis_vec(i)), u));
  Subspace s = span_of(a.field, a.dim(), imgs);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.basis_vec(i));
  return out;
}

// A primitive idempotent under e, by repeated corner splitting.
Vec primitive_under(const FDAlgebra& a, Vec e) {
  const Field& F = a.field;
  while (true) {
    std::vector<Vec> cb = corner_basis(a, e);
    if (cb.size() == 1) return e;
    // Candidate splitting elements of eAe: basis, pairwise sums/products,
    // small integer combinations.
    std::vector<Vec> cands = cb;
    for (std::size_t i = 0; i < cb.size(); ++i)
      for (std::size_t j = i + 1; j < cb.size(); ++j) {
        cands.push_back(vec_add(F, cb[i], cb[j]));
        cands.push_back(a.mul(cb[i], cb[j]));
        cands.push_back(vec_add(F, cb[i], vec_scale(F, F.from_long(2), cb[j])));
        cands.push_back(vec_add(F, cb[i], vec_scale(F, F.from_long(3), cb[j])));
      }
    Vec next;
    for (const Vec& zraw : cands) {
      Vec z = a.mul(a.mul(e, zraw), e);
      Vec m = minimal_polynomial(a, z, e);
      if (poly_deg(m) <= 1) continue;
      std::vector<Scalar> roots = poly_roots(F, poly_squarefree(F, m));
      for (const Scalar& lam : roots) {
        Vec lin{F.neg(lam), F.one()};
        Vec g = m, q, r;
        while (true) {
          poly_divmod(F, g, lin, q, r);
          if (!r.empty()) break;
          g = q;
        }
        if (poly_deg(g) == 0) continue;
        Vec primary, alpha, beta, gg;
        poly_divmod(F, m, g, primary, r);
        poly_ext_gcd(F, primary, g, gg, alpha, beta);
        Vec w = poly_eval_elem(a, poly_mul(F, beta, g), z, e);
        if (vec_is_zero(w) || w == e) continue;
        if (a.mul(w, w) != w) throw check_error("corner split element not idempotent");
        next = w;
        break;
      }
      if (!next.empty()) break;
    }
    if (next.empty())
      throw unsupported_error(
          "semisimple block admits no split primitive idempotent over the ground field "
          "(division-algebra component; species are out of scope)");
    e = next;
  }
}

// Newton idempotent refinement of c (c^2 = c mod nilpotents) to an exact
// idempotent; stays inside any subalgebra containing c.
Vec newton_idempotent(const FDAlgebra& a, Vec c) {
  const Field& F = a.field;
  for (std::size_t it = 0; it <= a.dim() + 2; ++it) {
    Vec c2 = a.mul(c, c);
    if (c2 == c) return c;
    // c <- 3c^2 - 2c^3
    Vec c3 = a.mul(c2, c);
    Vec next = vec_sub(F, vec_scale(F, F.from_long(3), c2), vec_scale(F, F.from_long(2), c3));
    c = next;
  }
  throw check_error("Newton idempotent iteration did not converge");
}

}  // namespace

SimplesResult simples(const FDAlgebra& a) {
  const Field& F = a.field;
  SimplesResult out;

  if (a.prov) {
    // Basic quiver algebra: one 1-dimensional simple per vertex.
    out.rad = radical(a);
    const Quiver& q = a.prov->quiver;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      SimpleDescriptor s;
      s.index = v;
      s.label = q.vertices[v];
      s.dim = 1;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        const Path& p = a.prov->basis_paths[i];
        Mat m(1, 1);
        m.at(0, 0) = (p.trivial() && p.source == v) ? F.one() : F.zero();
        s.action.push_back(m);
      }
      for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.prov->basis_paths[i].trivial() && a.prov->basis_paths[i].source == v) {
          s.idem = a.basis_vec(i);
          break;
        }
      out.simples.push_back(std::move(s));
    }
    return out;
  }

  out.rad = radical(a);  // throws unsupported for generic F_p
  QuotientAlgebra qa = quotient_algebra(a, out.rad, "s");
  const FDAlgebra& S = qa.alg;

  // Split the center of the semisimple quotient.
  Subspace z = center_of(S);
  std::vector<Vec> zbasis;
  for (std::size_t i = 0; i < z.dim(); ++i) zbasis.push_back(z.basis_vec(i));
  std::vector<Vec> centrals = split_idempotents_commutative(S, zbasis, S.unit);

  // Reject residue-field extensions: each block's central part must be 1-dim.
  for (const Vec& c : centrals) {
    std::vector<Vec> zc;
    for (const Vec& zb : zbasis) zc.push_back(S.mul(c, zb));
    if (span_of(F, S.dim(), zc).dim() != 1)
      throw unsupported_error(
          "semisimple quotient has a block with residue field larger than the ground field "
          "(species are out of scope)");
  }

  // Deterministic block order: by the leading coordinate of the central
  // idempotent (the split order is already deterministic; sort for clarity).
  std::sort(centrals.begin(), centrals.end(), [&](const Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) {
        bool xz = F.is_zero(x[i]);
        bool yz = F.is_zero(y[i]);
        if (xz != yz) return !xz;  // earlier support first
        return x[i] < y[i];
      }
    }
    return false;
  });

  // One primitive idempotent per block; then lift them orthogonally to A.
  std::vector<Vec> prim_in_s;
  for (const Vec& c : centrals) prim_in_s.push_back(primitive_under(S, c));

  std::vector<Vec> lifted;
  Vec used(a.dim(), Scalar(0));  // sum of lifted idempotents so far
  for (const Vec& ps : prim_in_s) {
    // Any preimage of ps under the projection.
    Vec raw(a.dim(), Scalar(0));
    for (std::size_t i = 0; i < S.dim(); ++i)
      for (std::size_t cdx = 0; cdx < a.dim(); ++cdx)
        raw[cdx] = F.add(raw[cdx], F.mul(ps[i], qa.lift.at(i, cdx)));
    // Orthogonalize against previous lifts: c = f·raw·f, f = 1 - sum.
    Vec f = vec_sub(F, a.unit, used);
    Vec c = a.mul(a.mul(f, raw), f);
    Vec e = newton_idempotent(a, c);
    lifted.push_back(e);
    used = vec_add(F, used, e);
  }

  for (std::size_t bi = 0; bi < centrals.size(); ++bi) {
    SimpleDescriptor s;
    s.index = bi;
    s.label = "S" + std::to_string(bi + 1);
    s.idem = lifted[bi];
    // Simple module V = S · eps inside the semisimple quotient.
    std::vector<Vec> gen;
    for (std::size_t i = 0; i < S.dim(); ++i) gen.push_back(S.mul(S.basis_vec(i), prim_in_s[bi]));
    Subspace v = span_of(F, S.dim(), gen);
    s.dim = v.dim();
    // Block dimension must be n^2 (split simple block).
    std::vector<Vec> blk;
    for (std::size_t i = 0; i < S.dim(); ++i)
      blk.push_back(S.mul(S.mul(centrals[bi], S.basis_vec(i)), centrals[bi]));
    if (span_of(F, S.dim(), blk).dim() != s.dim * s.dim)
      throw unsupported_error("semisimple block is not a split matrix algebra");
    for (std::size_t i = 0; i < a.dim(); ++i) {
      // Action of b_i through A -> A/J.
      Vec bi_bar = mat_apply(F, qa.proj, a.basis_vec(i));
      Mat act(s.dim, s.dim);
      for (std::size_t col = 0; col < s.dim; ++col) {
        Vec img = S.mul(bi_bar, v.basis_vec(col));
        auto coords = v.coords(F, img);
        if (!coords) throw check_error("simple module not invariant");
        for (std::size_t row = 0; row < s.dim; ++row) act.at(row, col) = (*coords)[row];
      }
      s.action.push_back(act);
    }
    out.simples.push_back(std::move(s));
  }
  return out;
}

FDAlgebra basic_algebra(const FDAlgebra& a) {
  if (a.prov) return a;  // quiver algebras are basic
  SimplesResult sr = simples(a);
  const Field& F = a.field;
  Vec e(a.dim(), Scalar(0));
  for (const auto& s : sr.simples) e = vec_add(F, e, s.idem);
  if (e == a.unit) {
    bool all_one = true;
    for (const auto& s : sr.simples) all_one &= (s.dim == 1);
    if (all_one) return a;
  }
  // eAe as structure constants.
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.mul(a.mul(e, a.basis_vec(i)), e));
  Subspace sub = span_of(F, a.dim(), gens);
  FDAlgebra b;
  b.field = F;
  for (std::size_t i = 0; i < sub.dim(); ++i) b.basis_names.push_back("c" + std::to_string(i + 1));
  b.table.assign(sub.dim(), std::vector<Vec>(sub.dim()));
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (std::size_t j = 0; j < sub.dim(); ++j) {
      Vec prod = a.mul(sub.basis_vec(i), sub.basis_vec(j));
      auto c = sub.coords(F, prod);
      if (!c) throw check_error("corner algebra not closed under product");
      b.table[i][j] = *c;
    }
  auto ec = sub.coords(F, e);
  if (!ec) throw check_error("corner unit missing from corner span");
  b.unit = *ec;
  return b;
}

BasicData basic_data(const FDAlgebra& a) {
  const Field& F = a.field;
  BasicData bd;
  if (a.prov) {
    const Quiver& q = a.prov->quiver;
    bd.nsimple = q.vertices.size();
    bd.labels = q.vertices;
    bd.idem.assign(bd.nsimple, Vec(a.dim(), Scalar(0)));
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.prov->basis_paths[i].trivial()) bd.idem[a.prov->basis_paths[i].source][i] = F.one();
    bd.rad = radical(a);
  } else {
    SimplesResult sr = simples(a);
    Vec e(a.dim(), Scalar(0));
    for (const auto& s : sr.simples) {
      if (s.dim != 1)
        throw input_error("projective-resolution machinery requires a basic algebra; "
                          "apply the basic reduction first");
      bd.idem.push_back(s.idem);
      bd.labels.push_back(s.label);
      e = vec_add(F, e, s.idem);
    }
    if (e != a.unit)
      throw input_error("primitive idempotents do not sum to 1; algebra is not basic");
    bd.nsimple = sr.simples.size();
    bd.rad = sr.rad;
  }
  for (std::size_t v = 0; v < bd.nsimple; ++v) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.mul(a.basis_vec(i), bd.idem[v]));
    bd.proj.push_back(span_of(F, a.dim(), gens));
  }
  bd.corner.assign(bd.nsimple, std::vector<Subspace>(bd.nsimple));
  for (std::size_t u = 0; u < bd.nsimple; ++u)
    for (std::size_t v = 0; v < bd.nsimple; ++v) {
      std::vector<Vec> gens;
      for (std::size_t i = 0; i < a.dim(); ++i)
        gens.push_back(a.mul(a.mul(bd.idem[u], a.basis_vec(i)), bd.idem[v]));
      bd.corner[u][v] = span_of(F, a.dim(), gens);
    }
  return bd;
}

}  // namespace dualco
