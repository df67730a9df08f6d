#include "fdiag/poly.hpp"

#include "fdiag/invariants.hpp"
#include "fdiag/parallel.hpp"
#include "fdiag/rng.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <utility>

namespace fdiag {

bool grlex_less::operator()(const std::vector<long long>& a,
                            const std::vector<long long>& b) const {
  long long da = 0, db = 0;
  for (long long e : a) da += e;
  for (long long e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

long long multi_poly::total_degree() const {
  if (terms.empty()) return -1;
  // graded order: the last term has maximal degree
  long long d = 0;
  for (long long e : terms.rbegin()->first) d += e;
  return d;
}

multi_poly mp_zero(std::vector<std::string> vars) {
  multi_poly p;
  p.vars = std::move(vars);
  return p;
}

multi_poly mp_const(std::vector<std::string> vars, const Rat& c) {
  multi_poly p = mp_zero(std::move(vars));
  if (c != 0) p.terms.emplace(std::vector<long long>(p.vars.size(), 0), c);
  return p;
}

multi_poly mp_linear(std::vector<std::string> vars, const std::vector<Rat>& coeffs,
                     const Rat& constant) {
  multi_poly p = mp_zero(std::move(vars));
  if (coeffs.size() != p.vars.size())
    fail(errc::invalid_query, "linear coefficient count does not match the variables");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<long long> e(p.vars.size(), 0);
    e[i] = 1;
    p.terms.emplace(std::move(e), coeffs[i]);
  }
  if (constant != 0) p.terms.emplace(std::vector<long long>(p.vars.size(), 0), constant);
  return p;
}

namespace {

void require_same_vars(const multi_poly& p, const multi_poly& q) {
  if (p.vars != q.vars) fail(errc::invalid_query, "polynomial variable lists differ");
}

void add_term(multi_poly& p, const std::vector<long long>& e, const Rat& c) {
  auto it = p.terms.find(e);
  if (it == p.terms.end()) {
    if (c != 0) p.terms.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) p.terms.erase(it);
}

}  // namespace

multi_poly mp_add(const multi_poly& p, const multi_poly& q) {
  require_same_vars(p, q);
  multi_poly out = p;
  for (const auto& [e, c] : q.terms) add_term(out, e, c);
  return out;
}

multi_poly mp_scale(const multi_poly& p, const Rat& c) {
  multi_poly out = mp_zero(p.vars);
  if (c == 0) return out;
  for (const auto& [e, v] : p.terms) out.terms.emplace(e, Rat(v * c));
  return out;
}

multi_poly mp_mul(const multi_poly& p, const multi_poly& q) {
  require_same_vars(p, q);
  multi_poly out = mp_zero(p.vars);
  for (const auto& [ep, cp] : p.terms)
    for (const auto& [eq, cq] : q.terms) {
      std::vector<long long> e(ep.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      add_term(out, e, cp * cq);
    }
  return out;
}

multi_poly mp_compose_univariate(const std::vector<Rat>& coeffs, const multi_poly& inner) {
  multi_poly acc = mp_zero(inner.vars);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = mp_mul(acc, inner);
    acc = mp_add(acc, mp_const(inner.vars, coeffs[i]));
  }
  return acc;
}

Rat mp_eval(const multi_poly& p, const std::vector<Rat>& point) {
  if (point.size() != p.vars.size())
    fail(errc::invalid_query, "evaluation point dimension mismatch");
  Rat total = 0;
  for (const auto& [e, c] : p.terms) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (long long j = 0; j < e[i]; ++j) term *= point[i];
    total += term;
  }
  return total;
}

namespace {

void gen_monomials(std::size_t nvars, std::size_t idx, long long remaining,
                   std::vector<long long>& cur, std::vector<std::vector<long long>>& out) {
  if (idx + 1 == nvars) {
    cur[idx] = remaining;
    out.push_back(cur);
    return;
  }
  for (long long e = 0; e <= remaining; ++e) {
    cur[idx] = e;
    gen_monomials(nvars, idx + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<std::vector<long long>> monomials_upto(std::size_t nvars, long long degree) {
  if (degree < 0) fail(errc::invalid_query, "degree bound must be nonnegative");
  std::vector<std::vector<long long>> out;
  if (nvars == 0) {
    out.push_back({});
    return out;
  }
  std::vector<long long> cur(nvars, 0);
  for (long long d = 0; d <= degree; ++d) gen_monomials(nvars, 0, d, cur, out);
  return out;
}

long long monomial_count(std::size_t nvars, long long degree) {
  Int c = 1;
  for (std::size_t i = 1; i <= nvars; ++i) c = c * (degree + static_cast<long long>(i)) / static_cast<long long>(i);
  if (c > (std::int64_t{1} << 40)) fail(errc::invalid_query, "monomial count overflow");
  return static_cast<long long>(c);
}

pivot_fit interpolate_pivots(const std::vector<sample_point>& samples, long long degree_bound,
                             std::vector<std::string> vars) {
  std::vector<std::vector<long long>> monos = monomials_upto(vars.size(), degree_bound);
  std::size_t m = monos.size();
  if (m > 5000)
    fail(errc::invalid_query, "degree bound needs " + std::to_string(m) +
                                  " monomials, above the 5000 limit");
  std::size_t rows = samples.size();
  if (rows < m)
    fail(errc::rank_deficient, "need at least " + std::to_string(m) + " samples for degree " +
                                   std::to_string(degree_bound) + ", got " +
                                   std::to_string(rows));
  std::set<std::vector<long long>> distinct;
  for (const sample_point& s : samples) {
    if (s.point.size() != vars.size())
      fail(errc::invalid_query, "sample point dimension mismatch");
    if (!distinct.insert(s.point).second)
      fail(errc::invalid_query, "duplicate sample point");
  }

  // Augmented integer matrix; rationals cleared per row.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(m + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    Int den = denominator(samples[i].value);
    for (std::size_t j = 0; j < m; ++j) {
      Int v = 1;
      for (std::size_t t = 0; t < vars.size(); ++t)
        for (long long e = 0; e < monos[j][t]; ++e) v *= samples[i].point[t];
      a[i][j] = v * den;
    }
    a[i][m] = numerator(samples[i].value);
  }

  // Fraction-free forward elimination; every division is exact. Columns with
  // no pivot are skipped: their coefficient is pinned to 0, and a skipped
  // column is all zeros below the cursor, so it never reappears.
  Int prev = 1;
  std::vector<std::size_t> piv_col;  // pivot column of each used row
  std::size_t row = 0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row) std::swap(a[piv], a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j <= m; ++j)
        a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    piv_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (a[i][m] != 0)
      fail(errc::inconsistent_samples,
           "samples admit no polynomial of total degree <= " + std::to_string(degree_bound));

  std::vector<Rat> coeff(m, Rat(0));
  for (std::size_t t = piv_col.size(); t-- > 0;) {
    const std::size_t c = piv_col[t];
    Rat rhs = Rat(a[t][m]);
    for (std::size_t j = c + 1; j < m; ++j) rhs -= Rat(a[t][j]) * coeff[j];
    coeff[c] = rhs / Rat(a[t][c]);
  }

  pivot_fit out;
  out.poly = mp_zero(std::move(vars));
  out.dropped = static_cast<long long>(m - piv_col.size());
  for (std::size_t j = 0; j < m; ++j)
    if (coeff[j] != 0) out.poly.terms.emplace(monos[j], coeff[j]);
  return out;
}

multi_poly interpolate(const std::vector<sample_point>& samples, long long degree_bound,
                       std::vector<std::string> vars) {
  pivot_fit fit = interpolate_pivots(samples, degree_bound, std::move(vars));
  if (fit.dropped > 0)
    fail(errc::rank_deficient, "sample points are degenerate: no pivot for " +
                                   std::to_string(fit.dropped) + " monomial column(s)");
  return std::move(fit.poly);
}

json poly_to_json(const multi_poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms) {
    json t;
    t["exp"] = e;
    t["num"] = numerator(c).str();
    t["den"] = denominator(c).str();
    terms.push_back(t);
  }
  return json{{"vars", p.vars}, {"terms", terms}};
}

multi_poly poly_from_json(const json& j) {
  multi_poly p;
  for (const auto& v : j.at("vars")) p.vars.push_back(v.get<std::string>());
  for (const auto& t : j.at("terms")) {
    std::vector<long long> e = t.at("exp").get<std::vector<long long>>();
    if (e.size() != p.vars.size()) fail(errc::invalid_query, "exponent length mismatch");
    Int den(t.at("den").get<std::string>());
    if (den == 0) fail(errc::invalid_query, "zero denominator in polynomial term");
    Rat c = Rat(Int(t.at("num").get<std::string>())) / Rat(den);
    if (c != 0) p.terms.emplace(std::move(e), c);
  }
  return p;
}

namespace {

std::string rat_str(const Rat& c) {
  std::string s = numerator(c).str();
  if (denominator(c) != 1) s += "/" + denominator(c).str();
  return s;
}

std::string monomial_text(const multi_poly& p, const std::vector<long long>& e, bool latex) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    std::string v = p.vars[i];
    if (latex) {
      // split a trailing digit run into a subscript: x12 -> x_{12}
      std::size_t cut = v.size();
      while (cut > 0 && std::isdigit(static_cast<unsigned char>(v[cut - 1]))) --cut;
      if (cut < v.size() && cut > 0) v = v.substr(0, cut) + "_{" + v.substr(cut) + "}";
      if (e[i] != 1) v += "^{" + std::to_string(e[i]) + "}";
    } else if (e[i] != 1) {
      v += "^" + std::to_string(e[i]);
    }
    parts.push_back(v);
  }
  return join(parts, latex ? " " : "*");
}

std::string poly_text_impl(const multi_poly& p, bool latex) {
  if (p.terms.empty()) return "0";
  std::string out;
  // highest degree first
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const Rat& c = it->second;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    std::string mono = monomial_text(p, it->first, latex);
    std::string coeff;
    if (mag != 1 || mono.empty()) {
      if (latex && denominator(mag) != 1)
        coeff = "\\frac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
      else
        coeff = rat_str(mag);
    }
    std::string term = coeff;
    if (!coeff.empty() && !mono.empty()) term += latex ? " " : "*";
    term += mono;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace

std::string poly_to_text(const multi_poly& p) { return poly_text_impl(p, false); }
std::string poly_to_latex(const multi_poly& p) { return poly_text_impl(p, true); }

std::vector<Int> evaluate_f_batch(const std::vector<lambda_point>& points, long long a,
                                  long long k, long long g, budget_meter& meter,
                                  int workers) {
  std::vector<Int> values(points.size());
  std::vector<budget_meter> meters(points.size());
  for (auto& sub : meters) sub.limit = meter.limit;
  unsigned pool = workers <= 0 ? default_workers() : static_cast<unsigned>(workers);
  parallel_for(points.size(), pool, [&](std::size_t i) {
    values[i] = compute_F(a, k, g, points[i].x, points[i].y, meters[i]);
  });
  for (const auto& sub : meters) {
    meter.count_templates(sub.templates);
    meter.count_points(sub.lattice_points);
  }
  return values;
}

std::vector<long long> free_coordinates(const lambda_point& p) {
  std::vector<long long> out;
  for (std::size_t i = 0; i + 1 < p.x.size(); ++i) out.push_back(p.x[i]);
  for (long long v : p.y) out.push_back(v);
  return out;
}

std::vector<std::string> free_variable_names(long long n1, long long n2) {
  std::vector<std::string> vars;
  for (long long i = 1; i < n1; ++i) vars.push_back("x" + std::to_string(i));
  for (long long j = 1; j <= n2; ++j) vars.push_back("y" + std::to_string(j));
  return vars;
}

namespace {

struct fit_result {
  multi_poly poly;
  bool thin = false;  // some monomial columns had no pivot
  std::vector<std::pair<lambda_point, Int>> evidence, holdout;
};

// Fit the first n_fit points, validate the fit on the rest; a held-out
// mismatch means the sample set straddles a wall or the fit is wrong.
fit_result fit_points(const std::vector<lambda_point>& points, std::size_t n_fit,
                      long long a, long long k, long long g, long long degree,
                      std::vector<std::string> vars, budget_meter& meter, int workers) {
  std::vector<Int> values = evaluate_f_batch(points, a, k, g, meter, workers);
  std::vector<sample_point> samples;
  for (std::size_t i = 0; i < n_fit; ++i)
    samples.push_back({free_coordinates(points[i]), Rat(values[i])});
  fit_result out;
  pivot_fit fit = interpolate_pivots(samples, degree, std::move(vars));
  out.poly = std::move(fit.poly);
  out.thin = fit.dropped > 0;
  for (std::size_t i = n_fit; i < points.size(); ++i) {
    std::vector<Rat> pt;
    for (long long v : free_coordinates(points[i])) pt.push_back(Rat(v));
    if (mp_eval(out.poly, pt) != Rat(values[i]))
      fail(errc::inconsistent_samples,
           "held-out sample disagrees with the fitted chamber piece");
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    (i < n_fit ? out.evidence : out.holdout).push_back({points[i], values[i]});
  return out;
}

}  // namespace

chamber_piece chamber_polynomial(long long a, long long k, long long g, long long n1,
                                 long long n2, const std::string& sig, std::uint64_t seed,
                                 budget_meter& meter, long long box_bound, int workers) {
  if (g < 0) fail(errc::invalid_query, "g must be nonnegative");
  arrangement arr = build_arrangement(n1, n2, a, k);
  long long box = box_bound > 0 ? box_bound : default_box_bound(a, k);
  long long degree = n2 + 3 * g + 2 * a - 2;
  long long base = monomial_count(static_cast<std::size_t>(n1 - 1 + n2), degree) + 10;

  auto attempt = [&](long long need, std::uint64_t s_seed) {
    sample_result s = sample_chamber(arr, sig, need, box, s_seed);
    if (!s.complete)
      fail(errc::sampling_failure,
           "found " + std::to_string(s.points.size()) + " of " + std::to_string(need) +
               " lattice points for signature " + sig + " within box bound " +
               std::to_string(box));
    fit_result fit = fit_points(s.points, static_cast<std::size_t>(need - 5), a, k, g,
                                degree, free_variable_names(n1, n2), meter, workers);
    chamber_piece piece;
    piece.sig = sig;
    piece.poly = std::move(fit.poly);
    piece.thin = fit.thin;
    piece.evidence = std::move(fit.evidence);
    piece.holdout = std::move(fit.holdout);
    return piece;
  };

  // A minimal sample can be degenerate by chance (box-constrained chambers
  // have slab structure), masquerading as a thin chamber or failing the
  // holdout. A doubled fresh sample settles it; thinness that survives the
  // retry, or a box too small to retry in, is reported as is.
  std::optional<chamber_piece> first;
  try {
    first = attempt(base, seed);
    if (!first->thin) return *std::move(first);
  } catch (const error& e) {
    if (e.code != errc::inconsistent_samples) throw;
  }
  try {
    return attempt(2 * base, rng::mix(seed, 0x9e3779b97f4a7c15ull));
  } catch (const error& e) {
    if (first && e.code == errc::sampling_failure) return *std::move(first);
    throw;
  }
}

parity_report degree_parity_report(const chamber_piece& piece, long long a, long long g,
                                   long long n2, long long k) {
  parity_report rep;
  rep.expected_degree = n2 + 3 * g + 2 * a - 2;
  if (piece.poly.is_zero()) {
    rep.zero = true;
    rep.degree_ok = true;
    rep.parity_checked = k == 0;
    rep.note = "zero polynomial: degree and parity hold vacuously";
    return rep;
  }
  rep.degree = piece.poly.total_degree();
  // a thin chamber only exposes a restriction, which bounds the degree
  rep.degree_ok =
      piece.thin ? rep.degree <= rep.expected_degree : rep.degree == rep.expected_degree;
  if (piece.thin) {
    rep.note =
        "thin chamber: the lattice locus is lower-dimensional, so the polynomial is the "
        "pivot-monomial representative and its degree only bounds the ambient degree";
  } else if (k == 0) {
    rep.parity_checked = true;
    for (const auto& [e, c] : piece.poly.terms) {
      long long d = 0;
      for (long long v : e) d += v;
      if ((d - rep.expected_degree) % 2 != 0) rep.parity_ok = false;
    }
  } else {
    rep.note =
        "coefficient parity at fixed k > 0 is not claimed; k enters the dilation, "
        "see the joint k-interpolation check";
  }
  return rep;
}

joint_parity_report joint_parity_check(long long g, const std::string& label,
                                       long long k_max, std::uint64_t seed,
                                       budget_meter& meter, int workers) {
  for (char c : label)
    if (c == '0')
      fail(errc::invalid_query,
           "joint parity needs a label meaningful for every k, i.e. no '0' band");
  if (label.size() != 3) fail(errc::invalid_query, "label must have three symbols");
  const long long a = 2, n2 = 1;
  long long degree = n2 + 3 * g + 2 * a - 2;
  if (k_max < degree + 1)
    fail(errc::invalid_query, "k_max must be at least degree + 1 to pin the k-dependence");
  long long need = monomial_count(2, degree) + 10;

  std::vector<multi_poly> pieces;
  for (long long k = 0; k <= k_max; ++k) {
    sample_result s =
        sample_label(label, k, need, default_box_bound(a, k), rng::mix(seed, static_cast<std::uint64_t>(k)));
    if (!s.complete)
      fail(errc::sampling_failure, "label " + label + " at k = " + std::to_string(k) +
                                       ": found only " + std::to_string(s.points.size()) +
                                       " of " + std::to_string(need) + " points");
    fit_result fit = fit_points(s.points, static_cast<std::size_t>(need - 5), a, k, g,
                                degree, {"x1", "y1"}, meter, workers);
    if (fit.thin)
      fail(errc::rank_deficient,
           "label " + label + " at k = " + std::to_string(k) + ": degenerate samples");
    pieces.push_back(std::move(fit.poly));
  }

  // union of exponents across k; fit each coefficient as a polynomial in k
  std::set<std::vector<long long>> exps;
  for (const multi_poly& p : pieces)
    for (const auto& [e, c] : p.terms) exps.insert(e);

  joint_parity_report rep;
  rep.joint = mp_zero({"x1", "y1", "k"});
  rep.coefficient_fits_ok = true;
  rep.parity_ok = true;
  for (const std::vector<long long>& e : exps) {
    long long de = e[0] + e[1];
    std::vector<sample_point> cs;
    for (long long k = 0; k <= k_max; ++k) {
      auto it = pieces[static_cast<std::size_t>(k)].terms.find(e);
      cs.push_back({{k}, it == pieces[static_cast<std::size_t>(k)].terms.end() ? Rat(0)
                                                                               : it->second});
    }
    multi_poly ck;
    try {
      ck = interpolate(cs, degree - de, {"k"});
    } catch (const error& err) {
      if (err.code != errc::inconsistent_samples) throw;
      rep.coefficient_fits_ok = false;
      continue;
    }
    for (const auto& [je, jc] : ck.terms) {
      rep.joint.terms.emplace(std::vector<long long>{e[0], e[1], je[0]}, jc);
      if ((de + je[0] - degree) % 2 != 0) rep.parity_ok = false;
    }
  }
  return rep;
}

}  // namespace fdiag
