#include "dualco/algebra.hpp"

#include <sstream>

namespace dualco {

Vec FDAlgebra::basis_vec(std::size_t i) const {
  Vec v(dim(), Scalar(0));
  v[i] = field.one();
  return v;
}

Vec FDAlgebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw check_error("mul: element size mismatch");
  Vec r(dim(), Scalar(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (field.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (field.is_zero(y[j])) continue;
      const Scalar c = field.mul(x[i], y[j]);
      const Vec& t = table[i][j];
      for (std::size_t k = 0; k < dim(); ++k) {
        if (field.is_zero(t[k])) continue;
        r[k] = field.add(r[k], field.mul(c, t[k]));
      }
    }
  }
  return r;
}

Mat FDAlgebra::left_mult(const Vec& x) const {
  Mat m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = mul(x, basis_vec(j));
    for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

Mat FDAlgebra::right_mult(const Vec& x) const {
  Mat m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = mul(basis_vec(j), x);
    for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

Scalar FDAlgebra::trace_left_mult(const Vec& x) const {
  Scalar t(0);
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = mul(x, basis_vec(j));
    t = field.add(t, col[j]);
  }
  return t;
}

std::string FDAlgebra::elem_str(const Vec& x) const {
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

void check_unital(const FDAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec b = a.basis_vec(i);
    if (a.mul(a.unit, b) != b || a.mul(b, a.unit) != b)
      throw check_error("unit axiom fails on basis element " + a.basis_names[i]);
  }
}

void check_associative(const FDAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec ij = a.table[i][j];
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vec lhs = a.mul(ij, a.basis_vec(k));
        Vec rhs = a.mul(a.basis_vec(i), a.table[j][k]);
        if (lhs != rhs)
          throw check_error("associativity fails on triple (" + a.basis_names[i] + ", " +
                            a.basis_names[j] + ", " + a.basis_names[k] + ")");
      }
    }
}

Subspace radical(const FDAlgebra& a) {
  const Field& F = a.field;
  if (a.prov) {
    Mat rows(0, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.prov->basis_paths[i].length() == 0) continue;
      Mat one(1, a.dim());
      one.at(0, i) = F.one();
      rows = rows.vstack(one);
    }
    return Subspace::from_rows(F, rows);
  }
  if (F.is_prime())
    throw unsupported_error(
        "radical of a generic algebra over F_p is not supported; "
        "provide a quiver presentation");
  // Characteristic 0: J = radical of the trace form (x,y) -> tr(L_{xy}).
  Mat gram(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      gram.at(i, j) = a.trace_left_mult(a.table[i][j]);
  Subspace j = kernel(F, gram);
  // The trace radical of a unital algebra in char 0 is exactly J; keep the
  // structural guarantee explicit.
  if (!is_two_sided_ideal(a, j)) throw check_error("trace radical is not an ideal");
  if (nilpotency_index(a, j) > a.dim() + 1) throw check_error("trace radical not nilpotent");
  return j;
}

Subspace ideal_power(const FDAlgebra& a, const Subspace& j, std::size_t k) {
  Subspace p = j;
  for (std::size_t m = 1; m < k; ++m) {
    Mat rows(0, a.dim());
    for (std::size_t i = 0; i < j.dim(); ++i)
      for (std::size_t l = 0; l < p.dim(); ++l) {
        Vec prod = a.mul(j.basis_vec(i), p.basis_vec(l));
        Mat one(1, a.dim());
        for (std::size_t c = 0; c < a.dim(); ++c) one.at(0, c) = prod[c];
        rows = rows.vstack(one);
      }
    p = Subspace::from_rows(a.field, rows);
    if (p.dim() == 0) break;
  }
  return p;
}

std::size_t nilpotency_index(const FDAlgebra& a, const Subspace& j) {
  Subspace p = j;
  std::size_t m = 1;
  while (p.dim() > 0) {
    if (m > a.dim() + 1) return m;  // not nilpotent within the possible range
    ++m;
    p = ideal_power(a, j, m);
  }
  return m;
}

bool is_two_sided_ideal(const FDAlgebra& a, const Subspace& w) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec b = a.basis_vec(i);
    for (std::size_t l = 0; l < w.dim(); ++l) {
      Vec v = w.basis_vec(l);
      if (!w.contains(a.field, a.mul(b, v))) return false;
      if (!w.contains(a.field, a.mul(v, b))) return false;
    }
  }
  return true;
}

Subspace ideal_closure(const FDAlgebra& a, const Subspace& seed) {
  Subspace cur = seed;
  while (true) {
    Mat rows = cur.basis();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec b = a.basis_vec(i);
      for (std::size_t l = 0; l < cur.dim(); ++l) {
        Vec v = cur.basis_vec(l);
        for (const Vec& prod : {a.mul(b, v), a.mul(v, b)}) {
          Mat one(1, a.dim());
          for (std::size_t c = 0; c < a.dim(); ++c) one.at(0, c) = prod[c];
          rows = rows.vstack(one);
        }
      }
    }
    Subspace next = Subspace::from_rows(a.field, rows);
    if (next == cur) return cur;
    cur = next;
  }
}

QuotientAlgebra quotient_algebra(const FDAlgebra& a, const Subspace& ideal,
                                 const std::string& name_prefix) {
  const Field& F = a.field;
  Quotient q = quotient(F, ideal, Subspace::full(a.dim()));
  const std::size_t qd = q.dim();
  QuotientAlgebra out;
  out.lift = q.lift;
  // Projection of all basis vectors at once.
  out.proj = Mat(qd, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vec c = q.project(F, Subspace::full(a.dim()).basis_vec(j));
    for (std::size_t i = 0; i < qd; ++i) out.proj.at(i, j) = c[i];
  }
  FDAlgebra& b = out.alg;
  b.field = F;
  for (std::size_t i = 0; i < qd; ++i) b.basis_names.push_back(name_prefix + std::to_string(i + 1));
  b.table.assign(qd, std::vector<Vec>(qd));
  for (std::size_t i = 0; i < qd; ++i)
    for (std::size_t j = 0; j < qd; ++j) {
      Vec ri(a.dim()), rj(a.dim());
      for (std::size_t c = 0; c < a.dim(); ++c) {
        ri[c] = out.lift.at(i, c);
        rj[c] = out.lift.at(j, c);
      }
      b.table[i][j] = mat_apply(F, out.proj, a.mul(ri, rj));
    }
  b.unit = mat_apply(F, out.proj, a.unit);
  return out;
}

}  // namespace dualco
