#pragma once

#include "fdiag/base.hpp"

#include <cstdint>
#include <string>

namespace fdiag {

// Run-wide knobs shared by every command; any run is reproducible from the
// command line plus this struct.
struct run_config {
  std::uint64_t seed = 42;
  long long box_bound = 0;  // 0: per-command default
  enumeration_budget budgets;
  std::string format = "text";  // text | json | jsonl | latex
  std::string output;           // empty: standard output
  int workers = 0;              // 0: all available cores
};

void check_config(const run_config& c);

// Applies "key = value" lines over `base`. Blank lines and lines starting
// with '#' are skipped; unknown keys are errors. Keys: seed, box_bound,
// max_templates, max_lattice_points, format, output, workers.
run_config apply_config_text(const std::string& text, run_config base);

run_config load_config_file(const std::string& path, run_config base);

// Defaults, overridden by the file named in FDIAG_CONFIG when that is set.
run_config default_config();

}  // namespace fdiag
