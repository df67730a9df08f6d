#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdiag {

// All counts and polynomial coefficients are exact: arbitrary-precision
// integers and rationals throughout, no floating point in any math path.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using json = nlohmann::ordered_json;

enum class errc {
  invalid_query,       // malformed or internally inconsistent input
  not_in_lattice,      // point violates sum(x) + sum(y) + a*k = 0
  on_wall,             // point lies on an arrangement hyperplane
  budget_exceeded,     // enumeration budget exhausted
  sampling_failure,    // chamber sampling could not produce enough points
  unbounded,           // flow polytope has a recession ray (cyclic graph)
  rank_deficient,      // interpolation system does not pin a unique answer
  inconsistent_samples // samples admit no polynomial of the given degree
};

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

struct enumeration_budget {
  std::int64_t max_templates = 1'000'000;
  std::int64_t max_lattice_points = 10'000'000;
};

// Mutable tallies threaded through an enumeration; checked against the budget.
struct budget_meter {
  enumeration_budget limit;
  std::int64_t templates = 0;
  std::int64_t lattice_points = 0;

  void count_template() { count_templates(1); }
  void count_templates(std::int64_t n) {
    templates += n;
    if (templates > limit.max_templates)
      fail(errc::budget_exceeded, "template budget exhausted after " +
                                      std::to_string(limit.max_templates) + " templates");
  }
  void count_points(std::int64_t n = 1) {
    lattice_points += n;
    if (lattice_points > limit.max_lattice_points)
      fail(errc::budget_exceeded, "lattice point budget exhausted after " +
                                      std::to_string(limit.max_lattice_points) + " points");
  }
};

// JSON numbers are emitted exactly: as native integers when they fit 64 bits,
// as decimal strings otherwise. Rationals always go out as num/den strings.
inline json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

inline json rat_to_json(const Rat& v) {
  return json{{"num", numerator(v).str()}, {"den", denominator(v).str()}};
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace fdiag
