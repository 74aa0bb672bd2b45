#include "dualco/dagger.hpp"

#include "dualco/segal.hpp"
#include "dualco/semisimple.hpp"

#include <sstream>

namespace dualco {

namespace {

bool same_paths(const std::vector<Path>& a, const std::vector<Path>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].source != b[i].source || a[i].arrows != b[i].arrows) return false;
  }
  return true;
}

std::string dim_list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

DaggerResult dagger(const FDAlgebra& a, std::size_t max_len, std::uint64_t seed) {
  if (max_len < 2) throw input_error("dagger: max_len must be at least 2");
  const Field& F = a.field;

  FDAlgebra b = basic_algebra(a);
  BasicData bd = basic_data(b);
  // mu only evaluates the products on degree-one classes, so hom-complex
  // truncation 2 already determines it.
  ExtData ed = ext_data(b, bd, 2);
  ExtQuiverResult eq = ext_quiver(b, bd, ed);
  AInfinity ai = a_infinity(b, bd, ed, 2, seed);

  DaggerResult r;
  r.mc = maurer_cartan(b, bd, ed, ai, eq, max_len);
  r.eq = std::move(eq);
  r.pc = path_coalgebra(F, r.eq.quiver, max_len);
  if (!same_paths(r.pc.paths, r.mc.paths))
    throw check_error("dagger: path enumerations disagree");

  r.sub = max_subcoalgebra_in(r.pc.c, kernel(F, r.mc.mu));

  // Vertices span a subcoalgebra inside ker(mu), so maximality forces them
  // into the result; they are exactly its coradical.
  const std::size_t nv = r.eq.quiver.vertices.size();
  for (std::size_t v = 0; v < nv; ++v) {
    Vec g(r.pc.c.dim(), Scalar(0));
    g[r.pc.path_index(Path{v, {}})] = F.one();
    if (!r.sub.contains(F, g))
      throw check_error("dagger: vertex " + r.eq.quiver.vertices[v] +
                        " missing from the subcoalgebra");
    r.grouplikes.push_back(r.eq.quiver.vertices[v]);
  }

  std::size_t prev = 0;
  for (std::size_t n = 0; n <= max_len; ++n) {
    std::size_t cur = intersect(F, r.sub, r.pc.length_le(n)).dim();
    r.graded.push_back(cur - prev);
    prev = cur;
  }
  return r;
}

Coalgebra oracle_dagger(const FDAlgebra& a) {
  return dual_coalgebra_fd(basic_algebra(a));
}

DaggerCompare compare_dagger(const FDAlgebra& a, const DaggerResult& d, const Coalgebra& o) {
  DaggerCompare r;
  const Field& F = a.field;
  auto add = [&](const std::string& name, CheckStatus st, const std::string& detail) {
    r.items.push_back({name, st, detail});
    if (st == CheckStatus::fail) r.ok = false;
  };

  FDAlgebra b = basic_algebra(a);
  BasicData bd = basic_data(b);
  std::size_t nil = nilpotency_index(b, bd.rad);
  bool sees_all = nil <= d.pc.max_len;
  const std::string too_short = "truncation shorter than the radical nilpotency";

  if (!sees_all) {
    add("total dimension", CheckStatus::skipped, too_short);
  } else if (d.sub.dim() == o.dim()) {
    add("total dimension", CheckStatus::pass, dim_list({d.sub.dim()}));
  } else {
    add("total dimension", CheckStatus::fail,
        dim_list({d.sub.dim()}) + " vs " + dim_list({o.dim()}));
  }

  try {
    std::size_t cd = coradical(o).dim();
    if (cd == d.grouplikes.size())
      add("coradical dimension", CheckStatus::pass, dim_list({cd}));
    else
      add("coradical dimension", CheckStatus::fail,
          dim_list({d.grouplikes.size()}) + " vs " + dim_list({cd}));
  } catch (const unsupported_error& e) {
    add("coradical dimension", CheckStatus::skipped, e.what());
  }

  if (!sees_all) {
    add("coradical filtration", CheckStatus::skipped, too_short);
  } else {
    try {
      Coalgebra sc = sub_coalgebra(d.pc.c, d.sub);
      std::vector<std::size_t> fd = coradical_filtration(sc).dims();
      std::vector<std::size_t> fo = coradical_filtration(o).dims();
      if (fd == fo)
        add("coradical filtration", CheckStatus::pass, dim_list(fd));
      else
        add("coradical filtration", CheckStatus::fail, dim_list(fd) + " vs " + dim_list(fo));
    } catch (const unsupported_error& e) {
      add("coradical filtration", CheckStatus::skipped, e.what());
    }
  }

  // The dual-algebra identification: the comparison map of the truncated
  // path algebra must be onto b with kernel the annihilator of A†, which
  // exhibits dual_algebra(A†) = b = dual_algebra(oracle).
  if (!sees_all) {
    add("dual algebra", CheckStatus::skipped, too_short);
  } else {
    try {
      ExtData ed = ext_data(b, bd, 2);
      SegalMap sm = segal_map(b, bd, ed, d.eq, d.mc);
      if (rank(F, sm.to_a) != b.dim()) {
        add("dual algebra", CheckStatus::fail, "comparison map is not onto");
      } else {
        Subspace ker = kernel(F, sm.to_a);
        Subspace ann = kernel(F, d.sub.basis());
        if (ker == ann)
          add("dual algebra", CheckStatus::pass, "");
        else
          add("dual algebra", CheckStatus::fail,
              "kernel of the comparison map is not the annihilator of the subcoalgebra");
      }
    } catch (const check_error& e) {
      add("dual algebra", CheckStatus::fail, e.what());
    } catch (const unsupported_error& e) {
      add("dual algebra", CheckStatus::skipped, e.what());
    }
  }

  return r;
}

}  // namespace dualco
