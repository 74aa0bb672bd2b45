#include "dualco/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "dualco/check.hpp"
#include "dualco/diagnostics.hpp"
#include "dualco/segal.hpp"

namespace dualco {

namespace {

using ojson = nlohmann::ordered_json;

std::string field_name(const Field& F) {
  return F.is_rationals() ? "Q" : "F" + std::to_string(F.characteristic());
}

std::string size_list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

// Length-filtration increments past the support carry no information; keep a
// single trailing zero as the stability witness.
std::vector<std::size_t> trim_graded(std::vector<std::size_t> g) {
  while (g.size() >= 2 && g.back() == 0 && g[g.size() - 2] == 0) g.pop_back();
  return g;
}

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

ojson items_json(const std::vector<CheckItem>& items) {
  ojson arr = ojson::array();
  for (const CheckItem& it : items) {
    ojson o;
    o["name"] = it.name;
    o["status"] = status_str(it.status);
    o["detail"] = it.detail;
    arr.push_back(o);
  }
  return arr;
}

void items_text(const std::vector<CheckItem>& items, std::ostringstream& txt) {
  for (const CheckItem& it : items) {
    txt << it.name << ": " << status_str(it.status);
    if (!it.detail.empty()) txt << " (" << it.detail << ")";
    txt << "\n";
  }
}

// Depth the input presents itself with: the truncation bound for quiver
// input, the radical nilpotency of the basic algebra otherwise.
std::size_t natural_depth(const ParsedInput& in) {
  if (in.pres) return in.pres->truncate;
  FDAlgebra b = basic_algebra(in.algebra);
  return nilpotency_index(b, radical(b));
}

struct Payload {
  int exit_code = 0;
  ojson res;
  std::ostringstream txt;
};

Payload cmd_info(const ParsedInput& in) {
  Payload p;
  const FDAlgebra& a = in.algebra;
  p.res["dim"] = a.dim();
  p.res["field"] = field_name(a.field);
  p.res["basis"] = a.basis_names;
  if (a.prov) {
    ojson prov;
    prov["vertices"] = a.prov->quiver.vertices.size();
    prov["arrows"] = a.prov->quiver.arrows.size();
    prov["truncate"] = a.prov->truncate;
    p.res["provenance"] = prov;
  } else {
    p.res["provenance"] = nullptr;
  }
  p.txt << "dim: " << a.dim() << "\n";
  p.txt << "field: " << field_name(a.field) << "\n";
  p.txt << "basis: " << join(a.basis_names, " ") << "\n";
  if (a.prov)
    p.txt << "provenance: quiver, " << a.prov->quiver.vertices.size() << " vertices, "
          << a.prov->quiver.arrows.size() << " arrows, truncate " << a.prov->truncate << "\n";
  else
    p.txt << "provenance: none\n";
  return p;
}

Payload cmd_simples(const ParsedInput& in) {
  Payload p;
  SimplesResult sr = simples(in.algebra);
  p.res["radical_dim"] = sr.rad.dim();
  p.res["count"] = sr.simples.size();
  ojson arr = ojson::array();
  for (const SimpleDescriptor& s : sr.simples) {
    ojson o;
    o["label"] = s.label;
    o["dim"] = s.dim;
    arr.push_back(o);
  }
  p.res["simples"] = arr;
  p.txt << "radical dim: " << sr.rad.dim() << "\n";
  p.txt << "simples: " << sr.simples.size() << "\n";
  for (const SimpleDescriptor& s : sr.simples) p.txt << "  " << s.label << ": dim " << s.dim << "\n";
  return p;
}

Payload cmd_ext(const ParsedInput& in, std::size_t L) {
  Payload p;
  FDAlgebra b = basic_algebra(in.algebra);
  BasicData bd = basic_data(b);
  ExtData ed = ext_data(b, bd, L);
  p.res["cutoff"] = L;
  p.res["labels"] = bd.labels;
  p.res["dims"] = ed.dims;
  p.txt << "cutoff: " << L << "\n";
  p.txt << "labels: " << join(bd.labels, " ") << "\n";
  for (std::size_t n = 0; n <= L; ++n) {
    p.txt << "ext^" << n << ":\n";
    for (std::size_t v = 0; v < bd.nsimple; ++v) p.txt << "  " << size_list(ed.dims[n][v]) << "\n";
  }
  return p;
}

YClass basis_class(const Field& F, const ExtData& ed, std::size_t deg, std::size_t v,
                   std::size_t w, std::size_t k) {
  Vec c(yoneda_dim(ed, deg), F.zero());
  c[yoneda_offset(ed, deg, v, w) + k] = F.one();
  return YClass{deg, c};
}

Payload cmd_ainfty(const ParsedInput& in, std::size_t L, std::size_t arity, std::uint64_t seed) {
  Payload p;
  const Field& F = in.algebra.field;
  FDAlgebra b = basic_algebra(in.algebra);
  BasicData bd = basic_data(b);
  ExtData ed = ext_data(b, bd, L);
  AInfinity ai = a_infinity(b, bd, ed, L, seed);
  StasheffReport sr = stasheff_check(b, bd, ed, ai, arity);

  // m2 against the composition product: exact agreement on degree-one pairs.
  bool m2_ok = true;
  std::size_t pairs = 0;
  const std::size_t ns = bd.nsimple;
  for (std::size_t v1 = 0; v1 < ns && m2_ok; ++v1)
    for (std::size_t w1 = 0; w1 < ns && m2_ok; ++w1)
      for (std::size_t k1 = 0; k1 < ed.dims[1][v1][w1] && m2_ok; ++k1)
        for (std::size_t v2 = 0; v2 < ns && m2_ok; ++v2)
          for (std::size_t w2 = 0; w2 < ns && m2_ok; ++w2)
            for (std::size_t k2 = 0; k2 < ed.dims[1][v2][w2] && m2_ok; ++k2) {
              YClass outer = basis_class(F, ed, 1, v1, w1, k1);
              YClass inner = basis_class(F, ed, 1, v2, w2, k2);
              YClass prod = m_eval(b, bd, ed, ai, {outer, inner});
              ++pairs;
              if (w2 != v1) {
                m2_ok = vec_is_zero(prod.coeffs);
                continue;
              }
              ChainMap f = ext_rep(b, bd, ed, 1, v2, w2, k2);
              ChainMap g = ext_rep(b, bd, ed, 1, v1, w1, k1);
              YonedaClass yc = yoneda_product(b, bd, ed, f, g);
              Vec expect(yoneda_dim(ed, 2), F.zero());
              const std::size_t base = yoneda_offset(ed, 2, v2, w1);
              for (std::size_t i = 0; i < yc.coeffs.size(); ++i) expect[base + i] = yc.coeffs[i];
              m2_ok = prod.coeffs == expect;
            }

  ojson st;
  st["ok"] = sr.ok;
  st["tuples_checked"] = sr.tuples_checked;
  st["tuples_skipped"] = sr.tuples_skipped;
  st["first_violation"] = sr.first_violation;
  p.res["top"] = L;
  p.res["arity"] = arity;
  p.res["stasheff"] = st;
  p.res["m2_matches_composition"] = m2_ok;
  p.res["ext1_pairs"] = pairs;
  p.txt << "top: " << L << "\n";
  p.txt << "arity: " << arity << "\n";
  p.txt << "stasheff: " << (sr.ok ? "pass" : "fail") << " (" << sr.tuples_checked << " checked, "
        << sr.tuples_skipped << " skipped)\n";
  if (!sr.first_violation.empty()) p.txt << "first violation: " << sr.first_violation << "\n";
  p.txt << "m2 vs composition: " << (m2_ok ? "pass" : "fail") << " (" << pairs << " pairs)\n";
  p.exit_code = (sr.ok && m2_ok) ? 0 : 1;
  return p;
}

Payload cmd_dagger(const ParsedInput& in, std::size_t max_len, std::uint64_t seed) {
  Payload p;
  DaggerResult d = dagger(in.algebra, max_len, seed);
  std::vector<std::size_t> graded = trim_graded(d.graded);
  p.res["total_dim"] = d.total_dim();
  p.res["graded"] = graded;
  p.res["grouplike_count"] = d.grouplikes.size();
  p.res["grouplikes"] = d.grouplikes;
  p.txt << "total dim: " << d.total_dim() << "\n";
  p.txt << "graded dims: " << size_list(graded) << "\n";
  p.txt << "group-likes: " << d.grouplikes.size() << " (" << join(d.grouplikes, " ") << ")\n";
  return p;
}

Payload cmd_dual(const ParsedInput& in) {
  Payload p;
  const Field& F = in.algebra.field;
  Coalgebra c = dual_coalgebra_fd(in.algebra);
  const std::size_t d = c.dim();
  p.res["dim"] = d;
  p.res["basis"] = c.basis_names;
  ojson eps = ojson::array();
  for (std::size_t k = 0; k < d; ++k) eps.push_back(F.str(c.counit[k]));
  p.res["counit"] = eps;
  ojson comul = ojson::array();
  p.txt << "dim: " << d << "\n";
  p.txt << "basis: " << join(c.basis_names, " ") << "\n";
  for (std::size_t k = 0; k < d; ++k)
    p.txt << "eps(" << c.basis_names[k] << ") = " << F.str(c.counit[k]) << "\n";
  for (std::size_t k = 0; k < d; ++k) {
    ojson terms = ojson::array();
    std::string line;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& cf = c.delta.at(i * d + j, k);
        if (F.is_zero(cf)) continue;
        ojson t;
        t["c"] = F.str(cf);
        t["left"] = c.basis_names[i];
        t["right"] = c.basis_names[j];
        terms.push_back(t);
        if (!line.empty()) line += " + ";
        if (!F.eq(cf, F.one())) line += F.str(cf) + "*";
        line += c.basis_names[i] + "(x)" + c.basis_names[j];
      }
    ojson entry;
    entry["of"] = c.basis_names[k];
    entry["terms"] = terms;
    comul.push_back(entry);
    p.txt << "Delta(" << c.basis_names[k] << ") = " << (line.empty() ? "0" : line) << "\n";
  }
  p.res["comul"] = comul;
  return p;
}

Payload cmd_corad(const ParsedInput& in) {
  Payload p;
  Coalgebra c = dual_coalgebra_fd(in.algebra);
  Subspace cr = coradical(c);
  p.res["dim"] = cr.dim();
  ojson basis = ojson::array();
  p.txt << "dim: " << cr.dim() << "\n";
  p.txt << "basis:\n";
  for (std::size_t i = 0; i < cr.dim(); ++i) {
    std::string s = c.elem_str(cr.basis_vec(i));
    basis.push_back(s);
    p.txt << "  " << s << "\n";
  }
  p.res["basis"] = basis;
  return p;
}

Payload cmd_filtration(const ParsedInput& in) {
  Payload p;
  Filtration fl = coradical_filtration(dual_coalgebra_fd(in.algebra));
  p.res["stable"] = fl.stable;
  p.res["dims"] = fl.dims();
  p.txt << "stable: " << fl.stable << "\n";
  p.txt << "dims: " << size_list(fl.dims()) << "\n";
  return p;
}

Payload cmd_components(const ParsedInput& in) {
  Payload p;
  Coalgebra c = dual_coalgebra_fd(in.algebra);
  PointedComponents pc = pointed_components(c);
  p.res["grouplike_count"] = pc.grouplikes.size();
  ojson comps = ojson::array();
  p.txt << "group-likes: " << pc.grouplikes.size() << "\n";
  for (std::size_t t = 0; t < pc.components.size(); ++t) {
    std::vector<std::string> names;
    for (std::size_t g : pc.groups[t]) names.push_back(c.elem_str(pc.grouplikes[g]));
    ojson o;
    o["dim"] = pc.components[t].dim();
    o["grouplikes"] = names;
    comps.push_back(o);
    p.txt << "component " << t << ": dim " << pc.components[t].dim() << ", group-likes {"
          << join(names, ", ") << "}\n";
  }
  p.res["components"] = comps;
  return p;
}

Payload cmd_kostant(const ParsedInput& in) {
  Payload p;
  const FDAlgebra& a = in.algebra;
  const Field& F = a.field;
  Coalgebra c = dual_coalgebra_fd(a);
  FDAlgebra cstar = dual_algebra(c);
  if (F.is_prime() && F.characteristic() == 2 && a.dim() <= 3) {
    // Small enough to sweep every matrix on both sides of the adjunction.
    const std::size_t cells = a.dim() * c.dim();
    std::size_t alg_count = 0, coalg_count = 0;
    bool forward_ok = true, reverse_ok = true, roundtrip_ok = true;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << cells); ++bits) {
      Mat f(c.dim(), a.dim());
      for (std::size_t t = 0; t < cells; ++t)
        if ((bits >> t) & 1) f.at(t / a.dim(), t % a.dim()) = F.one();
      if (is_algebra_morphism(a, cstar, f)) {
        ++alg_count;
        Mat g = kostant_transpose(a, c, f);
        if (!is_coalgebra_morphism(c, c, g)) forward_ok = false;
        if (!(g.transpose() == f)) roundtrip_ok = false;
      }
      Mat g(a.dim(), c.dim());
      for (std::size_t t = 0; t < cells; ++t)
        if ((bits >> t) & 1) g.at(t / c.dim(), t % c.dim()) = F.one();
      if (is_coalgebra_morphism(c, c, g)) {
        ++coalg_count;
        if (!is_algebra_morphism(a, cstar, g.transpose())) reverse_ok = false;
      }
    }
    const bool bijection = forward_ok && reverse_ok && alg_count == coalg_count;
    p.res["mode"] = "exhaustive";
    p.res["algebra_morphisms"] = alg_count;
    p.res["coalgebra_morphisms"] = coalg_count;
    p.res["bijection"] = bijection;
    p.res["roundtrip"] = roundtrip_ok;
    p.txt << "mode: exhaustive\n";
    p.txt << "algebra morphisms: " << alg_count << "\n";
    p.txt << "coalgebra morphisms: " << coalg_count << "\n";
    p.txt << "bijection: " << (bijection ? "yes" : "no") << "\n";
    p.txt << "round-trip: " << (roundtrip_ok ? "yes" : "no") << "\n";
    p.exit_code = (bijection && roundtrip_ok) ? 0 : 1;
    return p;
  }
  // General fields: transpose the canonical A -> (A*)* (the identity on
  // structure constants) and check the round trip.
  Mat id = Mat::identity(a.dim());
  Mat g = kostant_transpose(a, c, id);
  const bool rt = g.transpose() == id;
  p.res["mode"] = "roundtrip";
  p.res["roundtrip"] = rt;
  p.txt << "mode: roundtrip\n";
  p.txt << "round-trip: " << (rt ? "yes" : "no") << "\n";
  p.exit_code = rt ? 0 : 1;
  return p;
}

Payload cmd_zariski(const ParsedInput& in) {
  Payload p;
  const FDAlgebra& a = in.algebra;
  SimplesResult sr = simples(a);
  std::vector<std::string> labels;
  for (const SimpleDescriptor& s : sr.simples) labels.push_back(s.label);
  p.res["points"] = labels;
  p.txt << "points: " << join(labels, " ") << "\n";
  std::vector<std::pair<std::string, Vec>> elems;
  elems.emplace_back("0", Vec(a.dim(), a.field.zero()));
  elems.emplace_back("1", a.unit);
  for (std::size_t i = 0; i < a.dim(); ++i) elems.emplace_back(a.basis_names[i], a.basis_vec(i));
  ojson sets = ojson::array();
  for (const auto& [name, elem] : elems) {
    std::vector<std::string> set;
    for (std::size_t idx : zariski_closed(a, elem)) set.push_back(labels[idx]);
    ojson o;
    o["elem"] = name;
    o["set"] = set;
    sets.push_back(o);
    p.txt << "V(" << name << ") = {" << join(set, ", ") << "}\n";
  }
  p.res["closed_sets"] = sets;
  return p;
}

Payload cmd_measuring(const ParsedInput& in) {
  Payload p;
  MeasuringReport r = measuring_check(in.algebra);
  p.res["ok"] = r.ok;
  p.res["checked"] = r.checked;
  p.res["corad_checked"] = r.corad_checked;
  p.res["first_violation"] = r.first_violation;
  p.txt << "ok: " << (r.ok ? "yes" : "no") << "\n";
  p.txt << "checked: " << r.checked << "\n";
  p.txt << "coradical functionals: " << (r.corad_checked ? "included" : "skipped") << "\n";
  if (!r.first_violation.empty()) p.txt << "first violation: " << r.first_violation << "\n";
  p.exit_code = r.ok ? 0 : 1;
  return p;
}

Payload cmd_proper(const ParsedInput& in, std::size_t cutoff) {
  Payload p;
  ProperReport r = proper_check(in.algebra, cutoff);
  p.res["bijective_fd"] = r.bijective_fd;
  p.res["cutoff"] = cutoff;
  p.res["layer_dim"] = r.layer_dim;
  p.res["injective_truncated"] = r.injective_truncated;
  p.res["eval_kernel_dim"] = r.eval_kernel.dim();
  p.txt << "double dual identity: " << (r.bijective_fd ? "pass" : "fail") << "\n";
  p.txt << "cutoff: " << cutoff << "\n";
  p.txt << "layer dim: " << r.layer_dim << "\n";
  p.txt << "evaluation kernel dim: " << r.eval_kernel.dim() << "\n";
  p.txt << "injective: " << (r.injective_truncated ? "yes" : "no") << "\n";
  p.exit_code = r.bijective_fd ? 0 : 1;
  return p;
}

Payload cmd_segal(const ParsedInput& in, std::size_t max_len, std::uint64_t seed) {
  Payload p;
  SegalReport r = segal_compare(basic_algebra(in.algebra), max_len, seed);
  p.res["ok"] = r.ok;
  p.res["items"] = items_json(r.items);
  p.res["graded_algebra"] = r.graded_a;
  p.res["graded_paths"] = r.graded_path;
  p.txt << "ok: " << (r.ok ? "yes" : "no") << "\n";
  items_text(r.items, p.txt);
  p.txt << "graded dims: " << size_list(r.graded_a) << "\n";
  p.exit_code = r.ok ? 0 : 1;
  return p;
}

Payload cmd_check(const ParsedInput& in, std::size_t L, std::size_t arity, std::uint64_t seed) {
  Payload p;
  CheckSuite s = run_check_suite(in.algebra, L, arity, seed);
  p.res["ok"] = s.ok;
  p.res["items"] = items_json(s.items);
  items_text(s.items, p.txt);
  p.txt << "ok: " << (s.ok ? "yes" : "no") << "\n";
  p.exit_code = s.ok ? 0 : 1;
  return p;
}

RunResult make_error(const JobSpec& job, const std::string& kind, const std::string& message) {
  RunResult r;
  r.exit_code = kind == "input" ? 2 : kind == "unsupported" ? 3 : 1;
  if (job.format == "doc") {
    ojson doc;
    doc["command"] = job.command;
    doc["input"] = job.input_path.empty() ? "-" : job.input_path;
    ojson err;
    err["kind"] = kind;
    err["message"] = message;
    doc["error"] = err;
    r.output = doc.dump(2) + "\n";
  } else {
    r.output = "error (" + kind + "): " + message + "\n";
  }
  return r;
}

}  // namespace

RunResult run_on_text(const JobSpec& job, const std::string& text) {
  try {
    if (job.format != "text" && job.format != "doc")
      throw input_error("unknown format: " + job.format);
    ParsedInput in = parse_input(text, job.field_override);
    ojson params;
    Payload p;
    const std::string& cmd = job.command;
    if (cmd == "info") {
      p = cmd_info(in);
    } else if (cmd == "simples") {
      p = cmd_simples(in);
    } else if (cmd == "ext") {
      std::size_t L = job.ext_cutoff ? *job.ext_cutoff : 2 * natural_depth(in);
      params["ext_cutoff"] = L;
      p = cmd_ext(in, L);
    } else if (cmd == "ainfty") {
      std::size_t L = job.ext_cutoff ? *job.ext_cutoff : 2 * natural_depth(in);
      params["ext_cutoff"] = L;
      params["arity"] = job.arity;
      p = cmd_ainfty(in, L, job.arity, job.seed);
    } else if (cmd == "dagger") {
      std::size_t ml = job.max_len ? *job.max_len : std::max<std::size_t>(2, natural_depth(in));
      params["max_len"] = ml;
      p = cmd_dagger(in, ml, job.seed);
    } else if (cmd == "dual") {
      p = cmd_dual(in);
    } else if (cmd == "corad") {
      p = cmd_corad(in);
    } else if (cmd == "filtration") {
      p = cmd_filtration(in);
    } else if (cmd == "components") {
      p = cmd_components(in);
    } else if (cmd == "kostant") {
      p = cmd_kostant(in);
    } else if (cmd == "zariski") {
      p = cmd_zariski(in);
    } else if (cmd == "measuring") {
      p = cmd_measuring(in);
    } else if (cmd == "proper") {
      std::size_t cutoff = job.max_len ? *job.max_len : natural_depth(in);
      params["max_len"] = cutoff;
      p = cmd_proper(in, cutoff);
    } else if (cmd == "segal") {
      std::size_t ml = job.max_len ? *job.max_len : std::max<std::size_t>(2, natural_depth(in));
      params["max_len"] = ml;
      p = cmd_segal(in, ml, job.seed);
    } else if (cmd == "check") {
      std::size_t L = job.ext_cutoff ? *job.ext_cutoff : 2 * natural_depth(in);
      params["ext_cutoff"] = L;
      params["arity"] = job.arity;
      p = cmd_check(in, L, job.arity, job.seed);
    } else {
      throw input_error("unknown command: " + cmd);
    }
    params["seed"] = job.seed;
    if (job.format == "doc") {
      ojson doc;
      doc["command"] = cmd;
      doc["input"] = job.input_path.empty() ? "-" : job.input_path;
      doc["field"] = field_name(in.algebra.field);
      doc["parameters"] = params;
      doc["result"] = p.res;
      return {p.exit_code, doc.dump(2) + "\n"};
    }
    return {p.exit_code, p.txt.str()};
  } catch (const input_error& e) {
    return make_error(job, "input", e.what());
  } catch (const unsupported_error& e) {
    return make_error(job, "unsupported", e.what());
  } catch (const check_error& e) {
    return make_error(job, "check", e.what());
  }
}

RunResult run(const JobSpec& job) {
  RunResult r;
  std::ifstream f(job.input_path, std::ios::binary);
  if (!f) {
    r = make_error(job, "input", "cannot read input file: " + job.input_path);
  } else {
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    r = run_on_text(job, text);
  }
  if (job.out_path) {
    std::ofstream o(*job.out_path, std::ios::binary);
    if (!o) return make_error(job, "input", "cannot write output file: " + *job.out_path);
    o << r.output;
  }
  return r;
}

}  // namespace dualco
