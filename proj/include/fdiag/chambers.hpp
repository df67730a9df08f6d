#pragma once

#include "fdiag/base.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fdiag {

// The arrangement that cuts the lattice sum(x) + sum(y) + a*k = 0 into the
// chambers on which F is polynomial: all forms sum_{i in S} x_i +
// sum_{j in T} y_j + r*k (S in [n1], T in [n2], 0 <= r <= a) together with
// y_i - y_j, deduplicated up to sign as functions on the lattice.

// One retained wall, in ambient coordinates. Its reduction to the free
// coordinates (x_1..x_{n1-1}, y_1..y_{n2}, eliminating x_{n1}) is the
// canonical representative: lexicographically smaller of the two signs.
struct wall_form {
  std::vector<long long> x_coeffs;  // length n1
  std::vector<long long> y_coeffs;  // length n2
  long long const_times_k = 0;      // r: the form is <x_coeffs,x> + <y_coeffs,y> + r*k
};

struct arrangement {
  long long n1 = 0, n2 = 0, a = 1, k = 0;
  std::vector<wall_form> forms;  // canonical orientation, sorted by reduced key
};

// A lattice point of Lambda: sum(x) + sum(y) + a*k = 0.
struct lambda_point {
  std::vector<long long> x, y;
};

arrangement build_arrangement(long long n1, long long n2, long long a, long long k);

long long eval_form(const wall_form& f, const lambda_point& p, long long k);

std::string form_to_string(const wall_form& f);

// '+' / '-' per retained form; throws on_wall (naming the form) when some
// form vanishes, not_in_lattice when the point is off the lattice.
std::string signature_of(const arrangement& arr, const lambda_point& p);

struct sample_result {
  std::vector<lambda_point> points;
  bool complete = false;  // found the requested count
};

// Up to `count` distinct lattice points in [-B, B]^(n1+n2) with the given
// signature, by seeded rejection; deterministic per seed. Emptiness within
// the box is a legal outcome (complete = false), not an error.
sample_result sample_chamber(const arrangement& arr, const std::string& sig,
                             long long count, long long box_bound, std::uint64_t seed);

long long default_box_bound(long long a, long long k);

// Three-symbol chamber label for the (n1, n2, a) = (2, 1, 2) case: per
// coordinate (x1, x2, y1), '+' for v > 0, '0' for -k < v < 0, '-' for
// v < -k. Throws on_wall at v = 0 or v = -k.
std::string chamber_label(const lambda_point& p, long long k);

// Lattice points of a labeled region (same case), e.g. "0+-"; the region is
// bounded by strict label inequalities but may contain interior walls of the
// full arrangement.
sample_result sample_label(const std::string& label, long long k, long long count,
                           long long box_bound, std::uint64_t seed);

json arrangement_to_json(const arrangement& arr);

}  // namespace fdiag
