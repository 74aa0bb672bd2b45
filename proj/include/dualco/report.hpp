#pragma once
// Job execution behind the command-line driver: command dispatch, default
// parameter resolution, and rendering to text or a single self-describing
// JSON document.  Output is byte-identical for a fixed (input, parameters,
// seed) triple.  Every failure produces a structured error record; exit
// codes are 0 success, 1 failed check, 2 bad input, 3 unsupported field.

#include "dualco/parse.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace dualco {

struct JobSpec {
  std::string input_path;
  std::string command;
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> ext_cutoff;
  std::size_t arity = 4;
  std::uint64_t seed = 0;
  std::string format = "text";  // "text" | "doc"
  std::optional<std::string> out_path;
  std::optional<std::string> field_override;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

// Reads the input file and runs the command; when out_path is set the
// rendered output is also written there.
RunResult run(const JobSpec& job);

// Same on in-memory input text; out_path is ignored.
RunResult run_on_text(const JobSpec& job, const std::string& text);

}  // namespace dualco
