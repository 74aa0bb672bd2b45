#include "dualco/check.hpp"

#include "dualco/diagnostics.hpp"
#include "dualco/semisimple.hpp"

namespace dualco {

namespace {

// Runs one named check, converting exceptions into fail/skip records.
template <typename Fn>
void item(CheckSuite& s, const std::string& name, Fn&& fn) {
  CheckItem it;
  it.name = name;
  try {
    it.detail = fn();
    it.status = CheckStatus::pass;
  } catch (const unsupported_error& e) {
    it.status = CheckStatus::skipped;
    it.detail = e.what();
  } catch (const check_error& e) {
    it.status = CheckStatus::fail;
    it.detail = e.what();
  } catch (const input_error& e) {
    it.status = CheckStatus::fail;
    it.detail = e.what();
  }
  if (it.status == CheckStatus::fail) s.ok = false;
  s.items.push_back(it);
}

std::string list_str(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

CheckSuite run_check_suite(const FDAlgebra& a, std::size_t ext_cutoff, std::size_t arity,
                           std::uint64_t seed) {
  CheckSuite s;

  item(s, "unital", [&] {
    check_unital(a);
    return "";
  });
  item(s, "associative", [&] {
    check_associative(a);
    return "";
  });
  item(s, "semisimple quotient", [&] {
    SimplesResult sr = simples(a);
    std::size_t sq = 0;
    for (const auto& sd : sr.simples) sq += sd.dim * sd.dim;
    if (sq + sr.rad.dim() != a.dim())
      throw check_error("simple squares and radical do not fill the algebra");
    return std::to_string(sr.simples.size()) + " simples";
  });

  Coalgebra dual = dual_coalgebra_fd(a);
  item(s, "dual coalgebra axioms", [&] {
    check_coalgebra(dual);
    return "";
  });
  item(s, "double dual", [&] {
    FDAlgebra dd = dual_algebra(dual);
    if (dd.unit != a.unit) throw check_error("double dual changed the unit");
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (dd.table[i][j] != a.table[i][j])
          throw check_error("double dual changed the structure constants");
    return "";
  });
  item(s, "measuring", [&] {
    MeasuringReport r = measuring_check(a);
    if (!r.ok) throw check_error("violated at " + r.first_violation);
    return std::to_string(r.checked) + " identities" +
           (r.corad_checked ? "" : " (dual basis only)");
  });

  // The homological half runs on the basic reduction.
  item(s, "ext chain maps", [&] {
    FDAlgebra b = basic_algebra(a);
    BasicData bd = basic_data(b);
    ExtData ed = ext_data(b, bd, ext_cutoff);
    ExtQuiverResult eq = ext_quiver(b, bd, ed);
    for (const ChainMap& f : eq.arrow_reps) check_chain_map(b, bd, ed, f);
    return std::to_string(eq.quiver.arrows.size()) + " arrows";
  });
  item(s, "contraction side conditions", [&] {
    FDAlgebra b = basic_algebra(a);
    BasicData bd = basic_data(b);
    ExtData ed = ext_data(b, bd, ext_cutoff);
    AInfinity ai = a_infinity(b, bd, ed, ext_cutoff, seed);
    check_contraction(b, bd, ed, ai.hc, ai.con);
    return "";
  });
  item(s, "stasheff identities", [&] {
    FDAlgebra b = basic_algebra(a);
    BasicData bd = basic_data(b);
    ExtData ed = ext_data(b, bd, ext_cutoff);
    AInfinity ai = a_infinity(b, bd, ed, ext_cutoff, seed);
    StasheffReport r = stasheff_check(b, bd, ed, ai, arity);
    if (!r.ok) throw check_error("violated at " + r.first_violation);
    return std::to_string(r.tuples_checked) + " tuples to arity " + std::to_string(arity);
  });

  item(s, "dagger cross-validation", [&] {
    FDAlgebra b = basic_algebra(a);
    BasicData bd = basic_data(b);
    std::size_t ml = std::max<std::size_t>(2, nilpotency_index(b, bd.rad));
    DaggerResult d = dagger(a, ml, seed);
    DaggerCompare cmp = compare_dagger(a, d, oracle_dagger(a));
    std::size_t skipped = 0;
    for (const CheckItem& it : cmp.items) {
      if (it.status == CheckStatus::fail)
        throw check_error(it.name + ": " + it.detail);
      if (it.status == CheckStatus::skipped) ++skipped;
    }
    return "graded " + list_str(d.graded) +
           (skipped ? ", " + std::to_string(skipped) + " skipped" : "");
  });
  item(s, "proper diagnostic", [&] {
    FDAlgebra b = basic_algebra(a);
    BasicData bd = basic_data(b);
    std::size_t cutoff = nilpotency_index(b, bd.rad);
    ProperReport r = proper_check(a, cutoff);
    if (!r.bijective_fd) throw check_error("double dual is not the identity");
    if (!r.injective_truncated)
      throw check_error("stable filtration layer does not separate the algebra");
    return "layer dimension " + std::to_string(r.layer_dim);
  });
  item(s, "zariski sanity", [&] {
    SimplesResult sr = simples(a);
    if (zariski_closed(a, Vec(a.dim(), Scalar(0))).size() != sr.simples.size())
      throw check_error("V(0) is not everything");
    if (!zariski_closed(a, a.unit).empty()) throw check_error("V(1) is not empty");
    return std::to_string(sr.simples.size()) + " points";
  });

  return s;
}

}  // namespace dualco
