#include "fdiag/config.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace fdiag;

TEST_CASE("defaults") {
  unsetenv("FDIAG_CONFIG");
  const run_config c = default_config();
  CHECK(c.seed == 42);
  CHECK(c.box_bound == 0);
  CHECK(c.budgets.max_templates == 1'000'000);
  CHECK(c.budgets.max_lattice_points == 10'000'000);
  CHECK(c.format == "text");
  CHECK(c.output.empty());
  CHECK(c.workers == 0);
}

TEST_CASE("apply_config_text sets every key and keeps the rest") {
  run_config base;
  base.box_bound = 7;  // untouched below, must survive
  const run_config c = apply_config_text(
      "# comment\n"
      "\n"
      "seed = 7\n"
      "max_templates = 500\n"
      "  max_lattice_points=2000  \n"
      "format = jsonl\n"
      "output = out.json\n"
      "workers = 3\n",
      base);
  CHECK(c.seed == 7);
  CHECK(c.box_bound == 7);
  CHECK(c.budgets.max_templates == 500);
  CHECK(c.budgets.max_lattice_points == 2000);
  CHECK(c.format == "jsonl");
  CHECK(c.output == "out.json");
  CHECK(c.workers == 3);
}

TEST_CASE("apply_config_text rejects bad input") {
  const run_config base;
  CHECK_THROWS_AS(apply_config_text("colour = blue\n", base), error);
  CHECK_THROWS_AS(apply_config_text("seed\n", base), error);
  CHECK_THROWS_AS(apply_config_text("seed = twelve\n", base), error);
  CHECK_THROWS_AS(apply_config_text("seed = 12x\n", base), error);
  CHECK_THROWS_AS(apply_config_text("format = yaml\n", base), error);
  CHECK_THROWS_AS(apply_config_text("workers = -1\n", base), error);
  CHECK_THROWS_AS(apply_config_text("max_templates = 0\n", base), error);
  try {
    apply_config_text("box_bound = -3\n", base);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::invalid_query);
  }
}

TEST_CASE("config files load and layer over the environment") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "fdiag_test_config.cfg";
  {
    std::ofstream out(path);
    out << "seed = 99\nformat = json\n";
  }
  const run_config c = load_config_file(path.string(), run_config{});
  CHECK(c.seed == 99);
  CHECK(c.format == "json");

  setenv("FDIAG_CONFIG", path.string().c_str(), 1);
  const run_config env = default_config();
  CHECK(env.seed == 99);
  CHECK(env.format == "json");
  unsetenv("FDIAG_CONFIG");
  CHECK(default_config().seed == 42);

  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_config_file(path.string(), run_config{}), error);
}
