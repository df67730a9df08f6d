#pragma once

#include "fdiag/base.hpp"
#include "fdiag/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fdiag {

// Closed-form chamber table for (a, n1, n2) = (2, 2, 1) on F_k, k >= 1: on
// each labeled region, F(x1, x2, y1) = |y1| * sum_i c_i Gamma_g(s_i (v_i + k))
// with v = (x1, x2, y1, 0), s_i = -1 exactly on '-' symbols, and coefficients
// c_i in {1, g+3}.

std::vector<std::string> table1_labels();

// (c1, c2, c3, c4) weighting Gamma at x1, x2, y1, 0.
std::vector<Int> table1_coefficients(const std::string& label, long long g);

// Coefficients of the degree 3g+2 polynomial extending Gamma_g, constant
// term first.
std::vector<Rat> gamma_poly(long long g);

// The row's polynomial in the free coordinates (x1, y1), with
// x2 = -x1 - y1 - 2k and |y1| = +-y1 by the y symbol.
multi_poly table1_closed_form(const std::string& label, long long k, long long g);

struct table1_report {
  std::string label;
  long long k = 0, g = 0;
  std::string mode;  // "interpolated", "value-level", or "empty"
  bool equal = false;
  long long points_used = 0;
  std::string detail;
};

// Fits F on the labeled region and compares it with the closed form:
// coefficient-level equality when the region pins an interpolation of degree
// 3g+3, pointwise value equality when the region is too thin to fit
// (value-level), vacuously true when the region has no lattice points in the
// sampling box (empty).
table1_report verify_table1(const std::string& label, long long k, long long g,
                            std::uint64_t seed, budget_meter& meter,
                            long long box_bound = 0, int workers = 0);

}  // namespace fdiag
