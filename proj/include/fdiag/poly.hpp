#pragma once

#include "fdiag/base.hpp"
#include "fdiag/chambers.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fdiag {

// Exact multivariate polynomials over the rationals, the interpolation that
// reconstructs chamber pieces of F from sampled values, and the degree /
// parity reports on those pieces.

struct grlex_less {
  bool operator()(const std::vector<long long>& a, const std::vector<long long>& b) const;
};

struct multi_poly {
  std::vector<std::string> vars;                         // ordered names
  std::map<std::vector<long long>, Rat, grlex_less> terms;  // exponent -> nonzero coeff

  bool is_zero() const { return terms.empty(); }
  long long total_degree() const;  // -1 for the zero polynomial
};

multi_poly mp_zero(std::vector<std::string> vars);
multi_poly mp_const(std::vector<std::string> vars, const Rat& c);
multi_poly mp_linear(std::vector<std::string> vars, const std::vector<Rat>& coeffs,
                     const Rat& constant);
multi_poly mp_add(const multi_poly& p, const multi_poly& q);
multi_poly mp_scale(const multi_poly& p, const Rat& c);
multi_poly mp_mul(const multi_poly& p, const multi_poly& q);
// sum_i coeffs[i] * inner^i (univariate composition, Horner).
multi_poly mp_compose_univariate(const std::vector<Rat>& coeffs, const multi_poly& inner);
Rat mp_eval(const multi_poly& p, const std::vector<Rat>& point);

// Exponent vectors with total degree <= degree in graded-lex order.
std::vector<std::vector<long long>> monomials_upto(std::size_t nvars, long long degree);
long long monomial_count(std::size_t nvars, long long degree);

struct sample_point {
  std::vector<long long> point;
  Rat value;
};

// The unique polynomial of total degree <= degree_bound through the samples,
// by fraction-free elimination over the integers. Throws rank_deficient when
// the points do not pin every coefficient, inconsistent_samples when no such
// polynomial exists (e.g. samples straddle a wall).
multi_poly interpolate(const std::vector<sample_point>& samples, long long degree_bound,
                       std::vector<std::string> vars);

// Interpolation that tolerates degenerate sample geometry: monomial columns
// without a pivot are dropped (their coefficients set to 0), so the result is
// the representative supported on pivot monomials. dropped counts the skipped
// columns; 0 means the fit is the unique ambient polynomial.
struct pivot_fit {
  multi_poly poly;
  long long dropped = 0;
};

pivot_fit interpolate_pivots(const std::vector<sample_point>& samples, long long degree_bound,
                             std::vector<std::string> vars);

json poly_to_json(const multi_poly& p);
multi_poly poly_from_json(const json& j);
std::string poly_to_text(const multi_poly& p);
std::string poly_to_latex(const multi_poly& p);

// compute_F at many lattice points, parallel over points, deterministic.
std::vector<Int> evaluate_f_batch(const std::vector<lambda_point>& points, long long a,
                                  long long k, long long g, budget_meter& meter,
                                  int workers = 0);

// Free coordinates of a lattice point: x_1..x_{n1-1}, y_1..y_{n2}.
std::vector<long long> free_coordinates(const lambda_point& p);
std::vector<std::string> free_variable_names(long long n1, long long n2);

struct chamber_piece {
  std::string sig;
  multi_poly poly;  // in the free coordinates
  // The chamber's lattice locus is lower-dimensional (e.g. a band 0 > v > -k
  // holding a single integer), so the ambient piece is not determined by
  // lattice data; poly is the representative on pivot monomials.
  bool thin = false;
  std::vector<std::pair<lambda_point, Int>> evidence;  // interpolation samples
  std::vector<std::pair<lambda_point, Int>> holdout;   // held-out validations
};

// Samples the chamber, interpolates compute_F at degree n2+3g+2a-2, and
// validates the fit on held-out points (mismatch is a hard failure).
// box_bound 0 means default_box_bound(a, k).
chamber_piece chamber_polynomial(long long a, long long k, long long g, long long n1,
                                 long long n2, const std::string& sig, std::uint64_t seed,
                                 budget_meter& meter, long long box_bound = 0,
                                 int workers = 0);

struct parity_report {
  bool zero = false;               // zero piece: everything vacuous
  long long degree = -1;           // observed total degree
  long long expected_degree = 0;   // n2 + 3g + 2a - 2
  bool degree_ok = false;
  bool parity_checked = false;     // coefficient-level parity applies at k = 0 only
  bool parity_ok = true;           // every exponent has total degree = D mod 2
  std::string note;
};

parity_report degree_parity_report(const chamber_piece& piece, long long a, long long g,
                                   long long n2, long long k);

// The k > 0 reading of the parity statement: treat k as a variable that the
// dilation scales along with (x, y). Fits the piece of a full (no '0') label
// at each k = 0..k_max, fits every coefficient as a polynomial in k of degree
// <= D - |exponent|, and checks that each joint monomial x^e k^j satisfies
// |e| + j = D mod 2. Fixed to the (n1, n2, a) = (2, 1, 2) label family.
struct joint_parity_report {
  bool coefficient_fits_ok = false;  // every c_e(k) is polynomial of the right degree
  bool parity_ok = false;
  multi_poly joint;  // in (x1, y1, k)
};

joint_parity_report joint_parity_check(long long g, const std::string& label,
                                       long long k_max, std::uint64_t seed,
                                       budget_meter& meter, int workers = 0);

}  // namespace fdiag
