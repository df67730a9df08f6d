#pragma once

#include "fdiag/base.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fdiag {

// A floor diagram is a left-to-right graph on three vertex groups:
//   L  : unordered white vertices with negative divergence, labeled 1..|L|
//   C  : a totally ordered row mixing black floors, gray edges-of-genus, and
//        white vertices carrying a prescribed nonzero divergence
//   R  : unordered white vertices with positive divergence
// Every white vertex has exactly one edge, to a black vertex; every gray
// vertex has one incoming and one outgoing edge, both to black vertices.
// Edges always point rightward in the C-order (L before everything, R after).

enum class vcolor : unsigned char { black, gray, white };

struct c_vertex {
  vcolor color;
  long long div = 0;  // prescribed divergence; meaningful for white only
};

// The combinatorial frame of a diagram: everything except the gray weights.
struct diagram_template {
  std::vector<c_vertex> c;                          // C-order, position = index
  std::vector<long long> l_divs;                    // per L label, all < 0
  std::vector<long long> r_divs;                    // per R label, all > 0
  std::vector<int> l_attach;                        // L label -> black position
  std::vector<int> r_attach;                        // R label -> black position
  std::vector<std::pair<int, int>> gray_edges;      // per gray in C-order: (src black, tgt black)
  std::vector<int> whitec_attach;                   // per C-white in C-order: black position

  std::vector<int> black_positions() const;
  std::vector<int> gray_positions() const;
  std::vector<int> white_positions() const;
};

struct floor_diagram {
  diagram_template t;
  // Edge weights. White-edge weights are |divergence| when valid; gray edges
  // carry an (in, out) pair so that invalid unbalanced grays are representable
  // and get caught by validate().
  std::vector<long long> l_weights;
  std::vector<long long> r_weights;
  std::vector<long long> whitec_weights;                 // per C-white in C-order
  std::vector<std::pair<long long, long long>> gray_weights;  // per gray in C-order
};

struct validation_report {
  bool ok = true;
  std::string violation;  // first violated clause when !ok
};

struct multiplicity_vector {
  // Sparse maps: order i -> count. alpha/alpha_tilde describe the L/R labels,
  // beta/beta_tilde the C-whites, split by divergence sign.
  std::vector<std::pair<long long, long long>> alpha, beta, alpha_tilde, beta_tilde;

  long long weighted_sum_left() const;   // sum i*(alpha_i + beta_i)
  long long weighted_sum_right() const;  // sum i*(alpha~_i + beta~_i) = b
  std::string compact(const char* which) const;  // e.g. "12" for {1:1,2:2}
};

struct derived_data_result {
  std::vector<long long> x;  // L divergences then R divergences, label order
  std::vector<long long> y;  // C-white divergences in C-order
  multiplicity_vector mv;
  long long a = 0, b = 0;
  long long genus = 0;
};

// Weighted in-degree minus weighted out-degree. Vertex ids: "c<pos>" for the
// ordered row, "l<i>" / "r<i>" for labels.
long long divergence(const floor_diagram& d, const std::string& vertex_id);

// First violated clause (colors, edge directions, connectivity, divergences)
// or pass.
validation_report validate(const floor_diagram& d, long long k);

// Product of internal edge weights (both endpoints in C); 1 if none.
Int multiplicity(const floor_diagram& d);

derived_data_result derived_data(const floor_diagram& d);

multiplicity_vector multiplicity_vector_of(const std::vector<long long>& x,
                                           const std::vector<long long>& y);

// Canonical JSON: C vertices by position, then attachments, then weights in
// edge order (l*, r*, then per C position: w<p> or g<p>.in / g<p>.out).
json diagram_to_json(const floor_diagram& d);
floor_diagram diagram_from_json(const json& j);

// Compact canonical serialization; equal strings iff equal diagrams.
std::string canonical_key(const floor_diagram& d);

}  // namespace fdiag
