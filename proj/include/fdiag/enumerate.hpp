#pragma once

#include "fdiag/base.hpp"
#include "fdiag/diagram.hpp"

#include <functional>
#include <vector>

namespace fdiag {

// A counting query: enumerate all floor diagrams with `a` black vertices,
// genus g, black divergence k, L/R label divergences x (sign decides the
// side), and C-white divergences equal to some ordering of c_divs.
struct enumeration_query {
  long long a = 1;
  long long g = 0;
  long long k = 0;
  std::vector<long long> x;
  std::vector<long long> c_divs;
};

// Throws invalid_query / not_in_lattice when the query data is malformed.
void check_query(const enumeration_query& q);

// Budget semantics: max_templates bounds templates that actually enter the
// result stream; max_lattice_points is a work meter covering both candidate
// probes and visited weight assignments, so infeasible searches still abort.

// All templates consistent with q that admit at least one positive integer
// weighting, in canonical order.
std::vector<diagram_template> enumerate_templates(const enumeration_query& q, budget_meter& meter);

// All positive integer weightings of t: the strict lattice points of the flow
// polytope with divergences (x, y, k at blacks, 0 at grays). White-edge
// weights are forced; the free directions are a basis of the gray cycle
// space, dimension = g.
std::vector<floor_diagram> complete_weights(const diagram_template& t, const enumeration_query& q,
                                            budget_meter& meter);

struct diagram_sum {
  Int total = 0;       // sum of multiplicities
  long long count = 0; // number of diagrams
};

using diagram_sink = std::function<void(const floor_diagram&, const Int&)>;

// Full enumeration; sink (optional) receives diagrams in canonical order.
diagram_sum enumerate_diagrams(const enumeration_query& q, budget_meter& meter,
                               const diagram_sink& sink = {});

// Same, but the C-white divergence sequence is fixed to y_order exactly
// (no reordering); used to cross-check the permutation-sum normalization.
diagram_sum enumerate_diagrams_fixed_y(const enumeration_query& q,
                                       const std::vector<long long>& y_order, budget_meter& meter,
                                       const diagram_sink& sink = {});

// Independent brute-force witness: iterates every C-order, every attachment,
// every gray endpoint pair and every weight tuple up to the a-priori bound,
// keeps what validate() accepts, and returns canonical serializations.
// Deliberately shares no candidate pruning with the fast path.
std::vector<std::string> naive_enumerate_keys(const enumeration_query& q);

// Canonical keys from the fast path, for multiset comparison against the above.
std::vector<std::string> fast_enumerate_keys(const enumeration_query& q, budget_meter& meter);

}  // namespace fdiag
