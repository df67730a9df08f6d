#pragma once

#include "fdiag/base.hpp"
#include "fdiag/diagram.hpp"

#include <utility>
#include <vector>

namespace fdiag {

// Lattice-point machinery shared by the verification suite: flow polytopes
// over acyclic digraphs, pointed vector configurations with their partition
// functions, inclusion-exclusion for weighted counts, and weighted Ehrhart
// reciprocity via exact univariate fits.

// w >= 0 integer flows on a digraph with prescribed vertex divergences
// div(v) = (in-flow) - (out-flow) = d_vec[v]. The edge orientation must be
// acyclic; then every flow polytope here is bounded.
struct flow_problem {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (src, tgt), src != tgt
  std::vector<Int> d_vec;                  // per vertex; sums to zero
};

// pi_Y(z) = prod_{i in Y} z_i over coordinates (edges / config columns).
struct weight_functional {
  std::vector<int> indices;
};

Int eval_weight(const weight_functional& y, const std::vector<Int>& z);

// Throws invalid_query on malformed data, unbounded (with a witness cycle)
// when the orientation is cyclic.
void check_flow_problem(const flow_problem& p);

// dim {w : A w = d} = |E| - rank(A) = |E| - n + #components; equals the
// polytope dimension whenever a strictly positive flow exists.
int flow_dimension(const flow_problem& p);

// All integer flows with w >= 0 (w >= 1 when strict), sorted lexicographically.
// Exhaustive: free (cycle-basis) edges are bounded by the total weight crossing
// any topological cut they span, the rest is forced by leaf peeling.
std::vector<std::vector<Int>> lattice_points(const flow_problem& p, bool strict,
                                             budget_meter& meter);

// A finite multiset of nonzero lattice vectors together with an integer
// functional strictly positive on each of them (pointedness certificate).
struct vector_config {
  std::vector<std::vector<Int>> vectors;
  std::vector<Int> certificate;
};

// Finds a certificate (power-weighted lexicographic one when the vectors are
// uniformly lex-signed, otherwise a bounded box search) or throws
// invalid_query when none is found.
vector_config make_config(std::vector<std::vector<Int>> vectors);

// Columns e_tgt - e_src of the incidence matrix; certificate = topological
// positions, so each column scores tgt - src >= 1.
vector_config config_of(const flow_problem& p);

// Number of ways c = sum z_i x_i with z_i >= 0 integer.
Int partition_function(const vector_config& x, const std::vector<Int>& c,
                       budget_meter& meter);

// sum pi_Y(z) over the same solution set.
Int weighted_partition_function(const vector_config& x, const weight_functional& y,
                                const std::vector<Int>& c, budget_meter& meter);

struct inclusion_exclusion_result {
  Int lhs;  // weighted count, enumerated directly
  Int rhs;  // sum_{T subset Y} (-1)^{|Y - T|} P_{X union T}(c), columns duplicated
  bool ok = false;
};

// Verifies the two sides by independent enumeration.
inclusion_exclusion_result inclusion_exclusion_check(const vector_config& x,
                                                     const weight_functional& y,
                                                     const std::vector<Int>& c,
                                                     budget_meter& meter);

struct ehrhart_row {
  long long t = 0;
  Int closed;    // sum pi_Y over flows of the t-dilate (d scaled by t), w >= 0
  Int interior;  // same over strictly positive flows
};

// Rows t = 1..t_max; the dilate scales the whole divergence vector.
std::vector<ehrhart_row> weighted_ehrhart_data(const flow_problem& p,
                                               const weight_functional& y, int t_max,
                                               budget_meter& meter, int workers = 0);

struct reciprocity_report {
  int dim = 0;
  int y_size = 0;
  bool fit_is_polynomial = false;  // degree dim+|Y| fit reproduces the extra sample
  bool reciprocity_ok = false;     // fit(-t) == (-1)^(dim+|Y|) * interior(t), t = 1..3
  std::vector<ehrhart_row> table;
};

// Fits a degree-(dim+|Y|) polynomial through closed counts at t = 1..dim+|Y|+2
// (one redundant sample checks polynomiality) and compares its values at -t
// against the interior counts. Requires a nonempty polytope; the reported dim
// is exact when a strictly positive flow exists.
reciprocity_report reciprocity_check(const flow_problem& p, const weight_functional& y,
                                     budget_meter& meter, int workers = 0);

// true iff every maximal minor of the column matrix lies in {-1, 0, 1}.
bool unimodularity_check(const vector_config& x);

// The flow problem of a diagram template: vertices are L labels, the C row,
// then R labels; edges in canonical order (L edges, R edges, then per C
// position the white edge or the gray in/out pair); d = (x, k at blacks,
// 0 at grays, y at whites). internal marks the edges with both ends in C.
struct template_flow {
  flow_problem problem;
  weight_functional internal;
  std::vector<std::string> edge_names;
};

template_flow flow_problem_of(const diagram_template& t, long long k);

}  // namespace fdiag
