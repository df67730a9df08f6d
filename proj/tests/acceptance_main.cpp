// Acceptance runner: one line per criterion, `--only N` restricts to one.
// Exit 0 iff every executed criterion passes.

#include "fdiag/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr std::uint64_t kSeed = 42;

struct criterion {
  int number;
  std::string name;
  std::function<fdiag::suite_result()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
      ++i;
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }

  // criteria 4 and 5 share one sweep; run it at most once
  std::optional<fdiag::sweep_outcome> sweep;
  auto shared_sweep = [&]() -> const fdiag::sweep_outcome& {
    if (!sweep) sweep = fdiag::run_degree_parity_sweep(kSeed, 0);
    return *sweep;
  };

  const std::vector<criterion> criteria = {
      {1, "reference-values", [] { return fdiag::verify_reference_values(); }},
      {2, "example-diagram", [] { return fdiag::verify_example_diagram(); }},
      {3, "table-rows", [] { return fdiag::verify_table_rows(kSeed, 0); }},
      {4, "piece-degree", [&] { return fdiag::verify_degree(shared_sweep()); }},
      {5, "piece-parity", [&] { return fdiag::verify_parity(shared_sweep(), kSeed, 0); }},
      {6, "gamma-closed-forms", [] { return fdiag::verify_gamma(); }},
      {7, "inclusion-exclusion", [] { return fdiag::verify_inclusion_exclusion(100, kSeed); }},
      {8, "reciprocity", [] { return fdiag::verify_reciprocity(kSeed, 0); }},
      {9, "enumeration-oracle", [] { return fdiag::verify_oracle(50, kSeed); }},
      {10, "symmetry-vanishing", [] { return fdiag::verify_symmetry(kSeed); }},
  };

  bool all_pass = true;
  for (const criterion& c : criteria) {
    if (only != 0 && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    fdiag::suite_result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.name = c.name;
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s (%.2fs): %s\n", r.pass ? "PASS" : "FAIL", c.number,
                c.name.c_str(), secs, r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
