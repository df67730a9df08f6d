#include "fdiag/poly.hpp"

#include "fdiag/table1.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace fdiag;

namespace {

bool same(const multi_poly& p, const multi_poly& q) {
  return p.vars == q.vars && p.terms == q.terms;
}

multi_poly var(const std::vector<std::string>& vars, std::size_t i) {
  std::vector<Rat> coeffs(vars.size(), Rat(0));
  coeffs[i] = 1;
  return mp_linear(vars, coeffs, 0);
}

}  // namespace

TEST_CASE("graded-lex monomial order") {
  const grlex_less less;
  CHECK(less({0, 1}, {1, 0}));       // same degree: lex on exponents
  CHECK_FALSE(less({1, 0}, {0, 1}));
  CHECK(less({2, 0}, {0, 3}));       // degree first
  CHECK_FALSE(less({1, 1}, {1, 1}));

  CHECK(monomials_upto(2, 2) ==
        std::vector<std::vector<long long>>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}});
  CHECK(monomial_count(2, 2) == 6);
  CHECK(monomial_count(3, 4) == 35);
  CHECK(monomials_upto(3, 4).size() == 35);
  CHECK_THROWS_AS(monomials_upto(2, -1), error);
}

TEST_CASE("polynomial arithmetic evaluates consistently") {
  const std::vector<std::string> vars{"x", "y"};
  const multi_poly x = var(vars, 0), y = var(vars, 1);
  const multi_poly p =
      mp_add(mp_mul(x, x), mp_add(mp_scale(mp_mul(x, y), 2), mp_const(vars, -3)));
  const multi_poly q = mp_add(x, mp_const(vars, 1));
  const std::vector<Rat> pt{Rat(2), Rat(-3)};

  CHECK(p.total_degree() == 2);
  CHECK(mp_zero(vars).total_degree() == -1);
  CHECK(mp_const(vars, 5).total_degree() == 0);
  CHECK(mp_eval(p, pt) == 2 * 2 + 2 * 2 * (-3) - 3);
  CHECK(mp_eval(mp_mul(p, q), pt) == mp_eval(p, pt) * mp_eval(q, pt));
  CHECK(mp_eval(mp_add(p, q), pt) == mp_eval(p, pt) + mp_eval(q, pt));
  CHECK(mp_eval(mp_scale(p, Rat(-2) / 3), pt) == mp_eval(p, pt) * Rat(-2) / 3);

  // 1 + 2(x+y) + 3(x+y)^2 at (1, 1)
  const multi_poly inner = mp_add(x, y);
  CHECK(mp_eval(mp_compose_univariate({1, 2, 3}, inner), {Rat(1), Rat(1)}) == 17);

  CHECK_THROWS_AS(mp_add(p, mp_zero({"z"})), error);
  CHECK_THROWS_AS(mp_eval(p, {Rat(1)}), error);
}

TEST_CASE("interpolation reproduces a known polynomial") {
  const std::vector<std::string> vars{"x", "y"};
  multi_poly f = mp_zero(vars);
  f.terms.emplace(std::vector<long long>{2, 0}, Rat(1) / 2);
  f.terms.emplace(std::vector<long long>{0, 1}, Rat(-3));
  f.terms.emplace(std::vector<long long>{0, 0}, Rat(7) / 3);

  std::vector<sample_point> samples;
  for (long long i = 0; i <= 2; ++i)
    for (long long j = 0; j <= 2; ++j)
      samples.push_back({{i, j}, mp_eval(f, {Rat(i), Rat(j)})});

  const multi_poly fit = interpolate(samples, 2, vars);
  CHECK(same(fit, f));
  CHECK(same(interpolate(samples, 2, vars), fit));  // deterministic
}

TEST_CASE("interpolation failure modes") {
  const std::vector<std::string> one{"x"};
  std::vector<sample_point> abs_x;
  for (long long v = -2; v <= 2; ++v) abs_x.push_back({{v}, Rat(v < 0 ? -v : v)});
  try {
    interpolate(abs_x, 1, one);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::inconsistent_samples);
  }

  try {
    interpolate({{{0}, Rat(1)}}, 1, one);  // 2 monomials, 1 sample
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::rank_deficient);
  }

  CHECK_THROWS_AS(interpolate({{{0}, Rat(1)}, {{0}, Rat(1)}, {{1}, Rat(2)}}, 1, one), error);
}

TEST_CASE("pivot interpolation on a degenerate slice") {
  // samples confined to x = 1: the x column duplicates the constant column
  const std::vector<std::string> vars{"x", "y"};
  std::vector<sample_point> samples;
  for (long long y = 0; y <= 3; ++y) samples.push_back({{1, y}, Rat(1 + y)});  // f = x + y

  const pivot_fit fit = interpolate_pivots(samples, 1, vars);
  CHECK(fit.dropped == 1);
  CHECK(fit.poly.terms.count({1, 0}) == 0);  // representative avoids the dropped column
  CHECK(fit.poly.terms.at({0, 1}) == 1);
  CHECK(fit.poly.terms.at({0, 0}) == 1);
  for (const sample_point& s : samples)
    CHECK(mp_eval(fit.poly, {Rat(s.point[0]), Rat(s.point[1])}) == s.value);

  try {
    interpolate(samples, 1, vars);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::rank_deficient);
  }
}

TEST_CASE("polynomial serialization round trip and rendering") {
  multi_poly p = mp_zero({"x1", "y1"});
  p.terms.emplace(std::vector<long long>{2, 1}, Rat(2));
  p.terms.emplace(std::vector<long long>{1, 0}, Rat(-1) / 2);
  p.terms.emplace(std::vector<long long>{0, 0}, Rat(1));

  CHECK(same(poly_from_json(poly_to_json(p)), p));
  CHECK(poly_to_text(p) == "2*x1^2*y1 - 1/2*x1 + 1");
  CHECK(poly_to_latex(p) == "2 x_{1}^{2} y_{1} - \\frac{1}{2} x_{1} + 1");
  CHECK(poly_to_text(mp_zero({"x"})) == "0");
  CHECK(poly_to_text(var({"x1"}, 0)) == "x1");
  CHECK(poly_to_text(mp_scale(var({"x1"}, 0), -1)) == "-x1");

  json bad = poly_to_json(p);
  bad["terms"][0]["den"] = "0";
  CHECK_THROWS_AS(poly_from_json(bad), error);
}

TEST_CASE("batch evaluation of F matches the scalar path") {
  const std::vector<lambda_point> pts{{{-1, 3}, {-6}}, {{-2, 4}, {-6}}};
  budget_meter m1, m2, m3;
  const std::vector<Int> batch = evaluate_f_batch(pts, 2, 2, 0, m1, 3);
  const std::vector<Int> serial = evaluate_f_batch(pts, 2, 2, 0, m2, 1);
  CHECK(batch == serial);
  CHECK(batch[0] == 276);
  CHECK(batch[1] == compute_F(2, 2, 0, {-2, 4}, {-6}, m3));
  CHECK(m1.lattice_points == m2.lattice_points);

  CHECK(free_coordinates({{-1, 3}, {-6}}) == std::vector<long long>{-1, -6});
  CHECK(free_variable_names(2, 1) == std::vector<std::string>{"x1", "y1"});
  CHECK(free_variable_names(3, 2) == std::vector<std::string>{"x1", "x2", "y1", "y2"});
}

TEST_CASE("a full-dimensional chamber piece at k = 0") {
  budget_meter m;
  const chamber_piece piece = chamber_polynomial(2, 0, 0, 2, 1, "++-", 42, m);
  CHECK_FALSE(piece.thin);
  CHECK(piece.holdout.size() == 5);

  const parity_report rep = degree_parity_report(piece, 2, 0, 1, 0);
  CHECK_FALSE(rep.zero);
  CHECK(rep.degree == 3);
  CHECK(rep.expected_degree == 3);
  CHECK(rep.degree_ok);
  CHECK(rep.parity_checked);
  CHECK(rep.parity_ok);
  for (const auto& [e, c] : piece.poly.terms) CHECK((e[0] + e[1]) % 2 == 1);
}

TEST_CASE("a thin chamber piece only pins the restriction") {
  // at k = 2 the band 0 > x1 > -k holds the single integer x1 = -1
  budget_meter m;
  const chamber_piece piece = chamber_polynomial(2, 2, 0, 2, 1, "+++--++++", 42, m);
  CHECK(piece.thin);

  multi_poly expect = mp_zero({"x1", "y1"});
  expect.terms.emplace(std::vector<long long>{0, 1}, Rat(-10));
  expect.terms.emplace(std::vector<long long>{0, 2}, Rat(-6));
  expect.terms.emplace(std::vector<long long>{0, 3}, Rat(-2));
  CHECK(same(piece.poly, expect));

  const parity_report rep = degree_parity_report(piece, 2, 0, 1, 2);
  CHECK(rep.degree == 3);
  CHECK(rep.degree_ok);
  CHECK_FALSE(rep.parity_checked);
  CHECK(rep.note.find("thin") != std::string::npos);
}

TEST_CASE("degree and parity report on the zero piece") {
  chamber_piece piece;
  piece.poly = mp_zero({"x1", "y1"});
  const parity_report rep0 = degree_parity_report(piece, 2, 0, 1, 0);
  CHECK(rep0.zero);
  CHECK(rep0.degree_ok);
  CHECK(rep0.parity_checked);
  const parity_report rep1 = degree_parity_report(piece, 2, 0, 1, 1);
  CHECK_FALSE(rep1.parity_checked);
}

TEST_CASE("closed-form table rows") {
  CHECK(table1_labels().size() == 10);
  CHECK(mp_eval(table1_closed_form("0+-", 2, 0), {Rat(-1), Rat(-6)}) == 276);

  const std::vector<Rat> g0 = gamma_poly(0);  // w^2
  CHECK(g0 == std::vector<Rat>{0, 0, 1});
  const std::vector<Rat> g1 = gamma_poly(1);
  CHECK(g1.size() == 6);
  for (long long w = 0; w <= 8; ++w) {
    Rat v = 0, pw = 1;
    for (const Rat& c : g1) {
      v += c * pw;
      pw *= w;
    }
    CHECK(v == gamma(1, w));
  }
}

TEST_CASE("table row verification modes") {
  budget_meter m;
  const table1_report full = verify_table1("-+-", 1, 0, 42, m);
  CHECK(full.mode == "interpolated");
  CHECK(full.equal);
  CHECK(full.points_used == 35);

  const table1_report thin = verify_table1("0+-", 2, 0, 42, m);
  CHECK(thin.mode == "value-level");
  CHECK(thin.equal);

  const table1_report empty = verify_table1("00-", 1, 0, 42, m);
  CHECK(empty.mode == "empty");
  CHECK(empty.equal);
  CHECK(empty.points_used == 0);
}

TEST_CASE("joint parity in k on a full label") {
  budget_meter m;
  const joint_parity_report rep = joint_parity_check(0, "-+-", 5, 42, m);
  CHECK(rep.coefficient_fits_ok);
  CHECK(rep.parity_ok);
  CHECK(rep.joint.vars == std::vector<std::string>{"x1", "y1", "k"});
  CHECK_FALSE(rep.joint.terms.empty());
  for (const auto& [e, c] : rep.joint.terms) CHECK((e[0] + e[1] + e[2]) % 2 == 1);

  CHECK_THROWS_AS(joint_parity_check(0, "0+-", 5, 42, m), error);
  CHECK_THROWS_AS(joint_parity_check(0, "-+-", 2, 42, m), error);
}
