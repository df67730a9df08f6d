#pragma once

#include "fdiag/base.hpp"
#include "fdiag/diagram.hpp"
#include "fdiag/enumerate.hpp"

#include <vector>

namespace fdiag {

// A count N_g^{alpha,beta,alpha~,beta~}(a,b,k): degree (a, b') on the
// Hirzebruch surface F_k, genus g, boundary behavior prescribed by the
// multiplicity vector (left orders alpha/beta, right orders alpha~/beta~).
struct invariant_query {
  long long a = 1;
  long long b = 0;
  long long k = 0;
  long long g = 0;
  multiplicity_vector mv;
};

// Number of marked points, l = 2a + g + sum(beta_i + beta~_i) - 1. Read-only.
long long l_of(const invariant_query& q);

// N vanishes whenever g exceeds a(a-1)k/2 + ab - a - b + 1 (adjunction).
long long adjunction_genus_bound(long long a, long long b, long long k);

// Enforces a >= 1, b,k,g >= 0, sorted positive sparse orders, and the two
// balance conditions sum i(alpha_i+beta_i) = ak+b, sum i(alpha~_i+beta~_i) = b.
void check_invariant_query(const invariant_query& q);

// Canonical left-right sequence: the alpha block as negatives, then the
// alpha~ block as positives, each sorted by descending absolute value.
std::vector<long long> canonical_x(const invariant_query& q);

// Prescribed divergences of the ordered whites: -i per beta_i, +i per
// beta~_i, ascending.
std::vector<long long> y_multiset(const invariant_query& q);

// N = sum of mu(D) over all marked floor diagrams matching the query.
Int compute_N(const invariant_query& q, budget_meter& meter);

// F(x, y) on the lattice sum(x) + sum(y) + ak = 0; equals compute_N of the
// multiplicity vector derived from (x, y), and is invariant under permuting
// x and y independently.
Int compute_F(long long a, long long k, long long g, const std::vector<long long>& x,
              const std::vector<long long>& y, budget_meter& meter);

// Gamma_g(w) = sum over compositions of w into g+1 positive parts of the
// product of the squared parts; 0 for w <= g.
Int gamma(long long g, long long w);

}  // namespace fdiag
