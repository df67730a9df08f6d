#include "fdiag/chambers.hpp"

#include "fdiag/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace fdiag {

namespace {

// A form reduced to the free coordinates plus its constant value; equal as
// functions on the lattice iff equal here.
struct reduced_form {
  std::vector<long long> c;
  long long v = 0;

  reduced_form negated() const {
    reduced_form n;
    n.c.reserve(c.size());
    for (long long e : c) n.c.push_back(-e);
    n.v = -v;
    return n;
  }
  bool operator<(const reduced_form& o) const {
    if (c != o.c) return c < o.c;
    return v < o.v;
  }
  bool is_zero() const {
    for (long long e : c)
      if (e != 0) return false;
    return true;
  }
};

reduced_form reduce(const wall_form& f, long long n1, long long n2, long long a,
                    long long k) {
  // substitute x_{n1} = -sum_{i<n1} x_i - sum_j y_j - a*k
  reduced_form r;
  long long last = f.x_coeffs[static_cast<std::size_t>(n1 - 1)];
  for (long long i = 0; i + 1 < n1; ++i)
    r.c.push_back(f.x_coeffs[static_cast<std::size_t>(i)] - last);
  for (long long j = 0; j < n2; ++j)
    r.c.push_back(f.y_coeffs[static_cast<std::size_t>(j)] - last);
  r.v = (f.const_times_k - last * a) * k;
  return r;
}

}  // namespace

long long default_box_bound(long long a, long long k) { return 4 * (a * k + 10); }

arrangement build_arrangement(long long n1, long long n2, long long a, long long k) {
  if (n1 < 1) fail(errc::invalid_query, "need n1 >= 1 (a boundary x coordinate is eliminated)");
  if (n2 < 0 || k < 0) fail(errc::invalid_query, "n2 and k must be nonnegative");
  if (a < 1) fail(errc::invalid_query, "a must be positive (a = 0 is outside the integer-valued range)");
  if (n1 + n2 > 12) fail(errc::invalid_query, "arrangement too large (n1 + n2 > 12)");

  arrangement arr;
  arr.n1 = n1;
  arr.n2 = n2;
  arr.a = a;
  arr.k = k;

  std::map<reduced_form, wall_form> retained;
  auto offer = [&](const wall_form& f) {
    reduced_form red = reduce(f, n1, n2, a, k);
    if (red.is_zero()) return;
    reduced_form neg = red.negated();
    if (red < neg) {
      retained.emplace(red, f);
      return;
    }
    // flip to the canonical sign; the complement generator reduces to -red
    wall_form comp;
    for (long long e : f.x_coeffs) comp.x_coeffs.push_back(1 - e);
    for (long long e : f.y_coeffs) comp.y_coeffs.push_back(1 - e);
    comp.const_times_k = a - f.const_times_k;
    retained.emplace(neg, comp);
  };

  for (long long r = 0; r <= a; ++r)
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n1); ++s)
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << n2); ++t) {
        wall_form f;
        for (long long i = 0; i < n1; ++i) f.x_coeffs.push_back((s >> i) & 1 ? 1 : 0);
        for (long long j = 0; j < n2; ++j) f.y_coeffs.push_back((t >> j) & 1 ? 1 : 0);
        f.const_times_k = r;
        offer(f);
      }
  for (long long i = 0; i < n2; ++i)
    for (long long j = i + 1; j < n2; ++j) {
      wall_form f;
      f.x_coeffs.assign(static_cast<std::size_t>(n1), 0);
      f.y_coeffs.assign(static_cast<std::size_t>(n2), 0);
      f.y_coeffs[static_cast<std::size_t>(i)] = 1;
      f.y_coeffs[static_cast<std::size_t>(j)] = -1;
      reduced_form red = reduce(f, n1, n2, a, k);
      reduced_form neg = red.negated();
      if (neg < red) {
        f.y_coeffs[static_cast<std::size_t>(i)] = -1;
        f.y_coeffs[static_cast<std::size_t>(j)] = 1;
        retained.emplace(neg, f);
      } else {
        retained.emplace(red, f);
      }
    }

  for (auto& [key, f] : retained) arr.forms.push_back(f);
  return arr;
}

long long eval_form(const wall_form& f, const lambda_point& p, long long k) {
  long long v = f.const_times_k * k;
  for (std::size_t i = 0; i < f.x_coeffs.size(); ++i) v += f.x_coeffs[i] * p.x[i];
  for (std::size_t j = 0; j < f.y_coeffs.size(); ++j) v += f.y_coeffs[j] * p.y[j];
  return v;
}

std::string form_to_string(const wall_form& f) {
  std::string out;
  auto term = [&](long long coeff, const std::string& name) {
    if (coeff == 0) return;
    if (out.empty())
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    if (std::abs(coeff) != 1 || name.empty()) out += std::to_string(std::abs(coeff));
    out += name;
  };
  for (std::size_t i = 0; i < f.x_coeffs.size(); ++i)
    term(f.x_coeffs[i], "x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < f.y_coeffs.size(); ++j)
    term(f.y_coeffs[j], "y" + std::to_string(j + 1));
  if (f.const_times_k != 0) term(f.const_times_k, "k");
  if (out.empty()) out = "0";
  return out;
}

std::string signature_of(const arrangement& arr, const lambda_point& p) {
  if (static_cast<long long>(p.x.size()) != arr.n1 ||
      static_cast<long long>(p.y.size()) != arr.n2)
    fail(errc::invalid_query, "point dimensions do not match the arrangement");
  long long s = arr.a * arr.k;
  for (long long v : p.x) s += v;
  for (long long v : p.y) s += v;
  if (s != 0)
    fail(errc::not_in_lattice,
         "sum(x) + sum(y) + a*k = " + std::to_string(s) + ", point is not in the lattice");
  std::string sig;
  for (const wall_form& f : arr.forms) {
    long long v = eval_form(f, p, arr.k);
    if (v == 0) fail(errc::on_wall, "point lies on the wall " + form_to_string(f) + " = 0");
    sig += v > 0 ? '+' : '-';
  }
  return sig;
}

sample_result sample_chamber(const arrangement& arr, const std::string& sig,
                             long long count, long long box_bound, std::uint64_t seed) {
  if (count < 1) fail(errc::invalid_query, "sample count must be positive");
  if (static_cast<long long>(sig.size()) != static_cast<long long>(arr.forms.size()))
    fail(errc::invalid_query, "signature length does not match the arrangement");
  for (char c : sig)
    if (c != '+' && c != '-')
      fail(errc::invalid_query, "signature characters must be '+' or '-'");
  long long b = box_bound;
  if (b < 1) fail(errc::invalid_query, "box bound must be positive");

  rng gen(seed);
  sample_result out;
  std::set<std::pair<std::vector<long long>, std::vector<long long>>> seen;
  long long free_coords = arr.n1 - 1 + arr.n2;
  long long attempts = 50000 + 20000 * count;
  for (long long t = 0; t < attempts && static_cast<long long>(out.points.size()) < count;
       ++t) {
    lambda_point p;
    long long partial = arr.a * arr.k;
    for (long long i = 0; i < free_coords; ++i) {
      long long v = gen.range(-b, b);
      partial += v;
      if (i + 1 < arr.n1)
        p.x.push_back(v);
      else
        p.y.push_back(v);
    }
    long long last = -partial;  // eliminated coordinate x_{n1}
    if (last < -b || last > b) continue;
    p.x.insert(p.x.begin() + (arr.n1 - 1), last);
    bool match = true;
    for (std::size_t i = 0; i < arr.forms.size() && match; ++i) {
      long long v = eval_form(arr.forms[i], p, arr.k);
      match = (v > 0 && sig[i] == '+') || (v < 0 && sig[i] == '-');
    }
    if (!match) continue;
    if (!seen.insert({p.x, p.y}).second) continue;
    out.points.push_back(std::move(p));
  }
  out.complete = static_cast<long long>(out.points.size()) == count;
  return out;
}

namespace {

char label_char(long long v, long long k) {
  if (v == 0 || v == -k)
    fail(errc::on_wall, "coordinate value " + std::to_string(v) +
                            " lies on a band boundary (0 or -k)");
  if (v > 0) return '+';
  if (v > -k) return '0';  // only reachable for k >= 2 on integers
  return '-';
}

}  // namespace

std::string chamber_label(const lambda_point& p, long long k) {
  if (p.x.size() != 2 || p.y.size() != 1)
    fail(errc::invalid_query, "labels are defined for n1 = 2, n2 = 1 only");
  if (k < 0) fail(errc::invalid_query, "k must be nonnegative");
  std::string out;
  out += label_char(p.x[0], k);
  out += label_char(p.x[1], k);
  out += label_char(p.y[0], k);
  return out;
}

sample_result sample_label(const std::string& label, long long k, long long count,
                           long long box_bound, std::uint64_t seed) {
  if (label.size() != 3) fail(errc::invalid_query, "label must have three symbols");
  for (char c : label)
    if (c != '+' && c != '-' && c != '0')
      fail(errc::invalid_query, "label characters must be '+', '0' or '-'");
  if (count < 1) fail(errc::invalid_query, "sample count must be positive");
  if (k < 0) fail(errc::invalid_query, "k must be nonnegative");
  long long b = box_bound;
  if (b < 1) fail(errc::invalid_query, "box bound must be positive");

  rng gen(seed);
  sample_result out;
  std::set<std::pair<long long, long long>> seen;
  long long attempts = 50000 + 20000 * count;
  for (long long t = 0; t < attempts && static_cast<long long>(out.points.size()) < count;
       ++t) {
    long long x1 = gen.range(-b, b);
    long long y1 = gen.range(-b, b);
    long long x2 = -x1 - y1 - 2 * k;  // a = 2 lattice
    if (x2 < -b || x2 > b) continue;
    bool ok = true;
    long long vals[3] = {x1, x2, y1};
    for (int i = 0; i < 3 && ok; ++i) {
      long long v = vals[i];
      char want = label[static_cast<std::size_t>(i)];
      char got = (v == 0 || v == -k) ? '=' : (v > 0 ? '+' : (v > -k ? '0' : '-'));
      ok = got == want;
    }
    if (!ok) continue;
    if (!seen.insert({x1, y1}).second) continue;
    out.points.push_back(lambda_point{{x1, x2}, {y1}});
  }
  out.complete = static_cast<long long>(out.points.size()) == count;
  return out;
}

json arrangement_to_json(const arrangement& arr) {
  json forms = json::array();
  for (const wall_form& f : arr.forms) {
    json jf;
    jf["x_coeffs"] = f.x_coeffs;
    jf["y_coeffs"] = f.y_coeffs;
    jf["const_times_k"] = f.const_times_k;
    jf["text"] = form_to_string(f);
    forms.push_back(jf);
  }
  return json{{"n1", arr.n1}, {"n2", arr.n2}, {"a", arr.a}, {"k", arr.k}, {"forms", forms}};
}

}  // namespace fdiag
