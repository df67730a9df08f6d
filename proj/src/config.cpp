#include "fdiag/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace fdiag {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(errc::invalid_query, "config key " + key + ": not an integer: " + value);
  }
}

std::uint64_t to_uint(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(errc::invalid_query, "config key " + key + ": not an integer: " + value);
  }
}

}  // namespace

void check_config(const run_config& c) {
  if (c.box_bound < 0) fail(errc::invalid_query, "box_bound must be nonnegative");
  if (c.workers < 0) fail(errc::invalid_query, "workers must be nonnegative");
  if (c.budgets.max_templates < 1 || c.budgets.max_lattice_points < 1)
    fail(errc::invalid_query, "budgets must be positive");
  if (c.format != "text" && c.format != "json" && c.format != "jsonl" &&
      c.format != "latex")
    fail(errc::invalid_query, "format must be one of text, json, jsonl, latex");
}

run_config apply_config_text(const std::string& text, run_config base) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      fail(errc::invalid_query, "config line is not key = value: " + t);
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key == "seed")
      base.seed = to_uint(key, value);
    else if (key == "box_bound")
      base.box_bound = to_int(key, value);
    else if (key == "max_templates")
      base.budgets.max_templates = to_int(key, value);
    else if (key == "max_lattice_points")
      base.budgets.max_lattice_points = to_int(key, value);
    else if (key == "format")
      base.format = value;
    else if (key == "output")
      base.output = value;
    else if (key == "workers")
      base.workers = static_cast<int>(to_int(key, value));
    else
      fail(errc::invalid_query, "unknown config key: " + key);
  }
  check_config(base);
  return base;
}

run_config load_config_file(const std::string& path, run_config base) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_query, "cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return apply_config_text(buf.str(), base);
}

run_config default_config() {
  run_config c;
  if (const char* path = std::getenv("FDIAG_CONFIG")) {
    if (*path != '\0') c = load_config_file(path, c);
  }
  return c;
}

}  // namespace fdiag
