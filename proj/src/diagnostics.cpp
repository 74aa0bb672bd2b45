#include "dualco/diagnostics.hpp"

#include "dualco/semisimple.hpp"

namespace dualco {

CoradPreservation corad_preservation_check(const FDAlgebra& a, const FDAlgebra& b,
                                           const Mat& phi) {
  const Field& F = a.field;
  std::pair<std::size_t, std::size_t> w;
  if (!is_algebra_morphism(a, b, phi, &w))
    throw input_error("corad_preservation_check: phi is not an algebra morphism");

  Subspace corB = coradical(dual_coalgebra_fd(b));
  Subspace corA = coradical(dual_coalgebra_fd(a));
  Mat phiT = phi.transpose();

  CoradPreservation r;
  r.preserved = true;
  for (std::size_t i = 0; i < corB.dim(); ++i) {
    Vec f = corB.basis_vec(i);
    Vec img = mat_apply(F, phiT, f);
    if (!corA.contains(F, img)) {
      r.preserved = false;
      r.witness_src = f;
      r.witness_img = img;
      break;
    }
  }
  return r;
}

std::vector<std::size_t> zariski_closed(const FDAlgebra& a, const Vec& elem) {
  if (elem.size() != a.dim()) throw input_error("zariski_closed: element has wrong length");
  const Field& F = a.field;
  SimplesResult sr = simples(a);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < sr.simples.size(); ++s) {
    const SimpleDescriptor& sd = sr.simples[s];
    Mat m(sd.dim, sd.dim);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (F.is_zero(elem[i])) continue;
      m = mat_add(F, m, mat_scale(F, elem[i], sd.action[i]));
    }
    if (m.is_zero()) out.push_back(s);
  }
  return out;
}

MeasuringReport measuring_check(const FDAlgebra& a) {
  const Field& F = a.field;
  Coalgebra c = dual_coalgebra_fd(a);
  const std::size_t d = a.dim();

  MeasuringReport r;
  r.ok = true;

  auto eval = [&](const Vec& f, const Vec& x) {
    Scalar s(0);
    for (std::size_t k = 0; k < d; ++k) s = F.add(s, F.mul(f[k], x[k]));
    return s;
  };
  auto run = [&](const Vec& f, const std::string& fname) {
    Vec df = c.comul(f);
    for (std::size_t i = 0; i < d && r.ok; ++i) {
      for (std::size_t j = 0; j < d && r.ok; ++j) {
        // ev(f (x) b_i b_j) against sum f_(1)(b_i) f_(2)(b_j); on the dual
        // basis both sides reduce to structure constants.
        Scalar lhs = eval(f, a.table[i][j]);
        Scalar rhs = df[i * d + j];
        ++r.checked;
        if (!F.is_zero(F.sub(lhs, rhs))) {
          r.ok = false;
          r.first_violation = fname + " on (" + a.basis_names[i] + ", " + a.basis_names[j] + ")";
        }
      }
    }
    if (r.ok) {
      ++r.checked;
      if (!F.is_zero(F.sub(eval(f, a.unit), c.eps(f)))) {
        r.ok = false;
        r.first_violation = fname + " on the unit";
      }
    }
  };

  for (std::size_t k = 0; k < d && r.ok; ++k) {
    Vec f(d, Scalar(0));
    f[k] = F.one();
    run(f, c.basis_names[k]);
  }
  try {
    Subspace cor = coradical(c);
    for (std::size_t i = 0; i < cor.dim() && r.ok; ++i)
      run(cor.basis_vec(i), "coradical functional " + std::to_string(i));
    r.corad_checked = true;
  } catch (const unsupported_error&) {
    r.corad_checked = false;
  }
  return r;
}

ProperReport proper_check(const FDAlgebra& a, std::size_t cutoff) {
  const Field& F = a.field;
  Coalgebra c = dual_coalgebra_fd(a);
  FDAlgebra dd = dual_algebra(c);

  ProperReport r;
  r.bijective_fd = dd.unit == a.unit;
  for (std::size_t i = 0; i < a.dim() && r.bijective_fd; ++i)
    for (std::size_t j = 0; j < a.dim() && r.bijective_fd; ++j)
      r.bijective_fd = dd.table[i][j] == a.table[i][j];

  Filtration fil = coradical_filtration(c);
  const Subspace& layer = fil.layers[std::min(cutoff, fil.stable)];
  r.layer_dim = layer.dim();
  r.eval_kernel = kernel(F, layer.basis());
  r.injective_truncated = r.eval_kernel.dim() == 0;
  return r;
}

}  // namespace dualco
