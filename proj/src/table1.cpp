#include "fdiag/table1.hpp"

#include "fdiag/chambers.hpp"
#include "fdiag/invariants.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

namespace fdiag {

namespace {

std::string rat_text(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string point_text(const lambda_point& p) {
  std::vector<std::string> parts;
  for (long long v : p.x) parts.push_back(std::to_string(v));
  for (long long v : p.y) parts.push_back(std::to_string(v));
  return "(" + join(parts, ", ") + ")";
}

}  // namespace

std::vector<std::string> table1_labels() {
  return {"0+-", "-+-", "-+0", "-++", "-0+", "--+", "++-", "00-", "-00", "000"};
}

std::vector<Int> table1_coefficients(const std::string& label, long long g) {
  if (g < 0) fail(errc::invalid_query, "g must be nonnegative");
  // 1 marks a coefficient of g+3, 0 a coefficient of 1.
  static const std::map<std::string, std::array<int, 4>> rows = {
      {"0+-", {0, 0, 0, 0}}, {"-+-", {1, 0, 0, 0}}, {"-+0", {1, 0, 1, 0}},
      {"-++", {0, 1, 0, 1}}, {"-0+", {0, 1, 0, 1}}, {"--+", {0, 0, 0, 1}},
      {"++-", {0, 0, 0, 0}}, {"00-", {0, 0, 0, 0}}, {"-00", {1, 0, 1, 0}},
      {"000", {0, 0, 1, 0}}};
  auto it = rows.find(label);
  if (it == rows.end()) fail(errc::invalid_query, "unknown table row label: " + label);
  std::vector<Int> out;
  for (int b : it->second) out.push_back(b ? Int(g + 3) : Int(1));
  return out;
}

std::vector<Rat> gamma_poly(long long g) {
  const long long d = 3 * g + 2;
  std::vector<sample_point> s;
  // one extra node makes the fit overdetermined, so the degree is checked too
  for (long long w = 0; w <= d + 1; ++w) s.push_back({{w}, Rat(gamma(g, w))});
  multi_poly p = interpolate(s, d, {"w"});
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
  for (const auto& [e, v] : p.terms) c[static_cast<std::size_t>(e[0])] = v;
  return c;
}

multi_poly table1_closed_form(const std::string& label, long long k, long long g) {
  if (k < 1) fail(errc::invalid_query, "the table describes chambers of F_k for k >= 1");
  if (g < 0 || g > 2) fail(errc::invalid_query, "table rows are tabulated for g <= 2");
  const std::vector<Int> c = table1_coefficients(label, g);
  const std::vector<Rat> gc = gamma_poly(g);
  const std::vector<std::string> vars = {"x1", "y1"};
  // arguments v_i + k as (x1, y1) coefficients plus constant; x2 = -x1-y1-2k
  const std::array<std::array<long long, 3>, 4> lin = {{{1, 0, k},
                                                        {-1, -1, -k},
                                                        {0, 1, k},
                                                        {0, 0, k}}};
  multi_poly sum = mp_zero(vars);
  for (std::size_t i = 0; i < 4; ++i) {
    const long long s = (i < 3 && label[i] == '-') ? -1 : 1;
    multi_poly arg = mp_linear(vars, {Rat(s * lin[i][0]), Rat(s * lin[i][1])},
                               Rat(s * lin[i][2]));
    sum = mp_add(sum, mp_scale(mp_compose_univariate(gc, arg), Rat(c[i])));
  }
  multi_poly y1 = mp_linear(vars, {Rat(0), Rat(label[2] == '+' ? 1 : -1)}, Rat(0));
  return mp_mul(y1, sum);
}

table1_report verify_table1(const std::string& label, long long k, long long g,
                            std::uint64_t seed, budget_meter& meter,
                            long long box_bound, int workers) {
  table1_report rep;
  rep.label = label;
  rep.k = k;
  rep.g = g;
  const multi_poly closed = table1_closed_form(label, k, g);

  const long long D = 3 * g + 3;  // n2 + 3g + 2a - 2 at (a, n2) = (2, 1)
  const long long M = monomial_count(2, D);
  const long long b = box_bound > 0 ? box_bound : default_box_bound(2, k);
  sample_result s = sample_label(label, k, M + 25, b, seed);
  rep.points_used = static_cast<long long>(s.points.size());
  if (s.points.empty()) {
    rep.mode = "empty";
    rep.equal = true;
    return rep;
  }

  const std::vector<Int> vals = evaluate_f_batch(s.points, 2, k, g, meter, workers);

  auto value_level = [&]() {
    rep.mode = "value-level";
    rep.equal = true;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const auto fc = free_coordinates(s.points[i]);
      const Rat want = mp_eval(closed, {Rat(fc[0]), Rat(fc[1])});
      if (want != Rat(vals[i])) {
        rep.equal = false;
        rep.detail = "F" + point_text(s.points[i]) + " = " + vals[i].str() +
                     " but the table row gives " + rat_text(want);
        return;
      }
    }
  };

  if (!s.complete) {
    value_level();
    return rep;
  }

  std::vector<sample_point> fit;
  for (long long i = 0; i < M + 5; ++i) {
    const auto fc = free_coordinates(s.points[static_cast<std::size_t>(i)]);
    fit.push_back({fc, Rat(vals[static_cast<std::size_t>(i)])});
  }
  multi_poly fitted;
  try {
    fitted = interpolate(fit, D, free_variable_names(2, 1));
  } catch (const error& e) {
    if (e.code == errc::rank_deficient) {
      // the region is too thin to pin every coefficient; fall back to values
      value_level();
      return rep;
    }
    if (e.code == errc::inconsistent_samples) {
      rep.mode = "interpolated";
      rep.equal = false;
      rep.detail = "no single polynomial of degree " + std::to_string(D) +
                   " fits the region";
      return rep;
    }
    throw;
  }

  rep.mode = "interpolated";
  bool ok = fitted.terms == closed.terms;
  if (!ok) {
    rep.detail = "fitted piece " + poly_to_text(fitted) + " differs from table row " +
                 poly_to_text(closed);
  }
  for (std::size_t i = static_cast<std::size_t>(M + 5); ok && i < s.points.size(); ++i) {
    const auto fc = free_coordinates(s.points[i]);
    ok = mp_eval(closed, {Rat(fc[0]), Rat(fc[1])}) == Rat(vals[i]);
    if (!ok)
      rep.detail = "held-out point " + point_text(s.points[i]) +
                   " disagrees with the table row";
  }
  rep.equal = ok;
  return rep;
}

}  // namespace fdiag
