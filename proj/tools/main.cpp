// dualco: dual-coalgebra computations for finite-dimensional algebras
// presented by a quiver with relations or by structure constants.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "dualco/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dual coalgebra toolkit"};
  dualco::JobSpec job;
  std::size_t max_len = 0, ext_cutoff = 0;
  std::string out_path, field_override;

  app.add_option("--input", job.input_path, "input file (quiver presentation or structure constants)")
      ->required();
  app.add_option("--cmd", job.command,
                 "command: info simples ext ainfty dagger dual corad filtration components "
                 "kostant zariski measuring proper segal check")
      ->required();
  auto* ml = app.add_option("--max-len", max_len, "path-length truncation (dagger, segal, proper)");
  auto* ec = app.add_option("--ext-cutoff", ext_cutoff, "homological cutoff (ext, ainfty, check)");
  app.add_option("--arity", job.arity, "highest Stasheff arity checked");
  app.add_option("--seed", job.seed, "gauge seed for the transfer");
  app.add_option("--format", job.format, "text | doc")->check(CLI::IsMember({"text", "doc"}));
  auto* out = app.add_option("--out", out_path, "write output to a file instead of stdout");
  auto* fo = app.add_option("--field", field_override, "override the input's field, e.g. Q or F5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (ml->count()) job.max_len = max_len;
  if (ec->count()) job.ext_cutoff = ext_cutoff;
  if (out->count()) job.out_path = out_path;
  if (fo->count()) job.field_override = field_override;

  dualco::RunResult r = dualco::run(job);
  if (!job.out_path) std::cout << r.output;
  return r.exit_code;
}
