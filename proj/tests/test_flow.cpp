#include "fdiag/flow.hpp"

#include "fdiag/acceptance.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace fdiag;

namespace {

// w01 + w02 = 3, w01 - w12 = 1, w02 + w12 = 2; the fiber is the segment
// w12 in [0, 2], so the t-dilate holds 2t+1 flows (2t-1 strictly positive).
flow_problem segment_problem() {
  flow_problem p;
  p.n_vertices = 3;
  p.edges = {{0, 1}, {0, 2}, {1, 2}};
  p.d_vec = {-3, 1, 2};
  return p;
}

}  // namespace

TEST_CASE("check_flow_problem rejects malformed and cyclic data") {
  flow_problem bad = segment_problem();
  bad.d_vec = {-3, 1, 1};  // does not sum to zero
  CHECK_THROWS_AS(check_flow_problem(bad), error);

  flow_problem cyc;
  cyc.n_vertices = 3;
  cyc.edges = {{0, 1}, {1, 2}, {2, 0}};
  cyc.d_vec = {0, 0, 0};
  try {
    check_flow_problem(cyc);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::unbounded);
  }
}

TEST_CASE("lattice points of the segment problem") {
  const flow_problem p = segment_problem();
  CHECK(flow_dimension(p) == 1);

  budget_meter m;
  const std::vector<std::vector<Int>> closed = lattice_points(p, false, m);
  CHECK(closed == std::vector<std::vector<Int>>{{1, 2, 0}, {2, 1, 1}, {3, 0, 2}});
  const std::vector<std::vector<Int>> interior = lattice_points(p, true, m);
  CHECK(interior == std::vector<std::vector<Int>>{{2, 1, 1}});
  CHECK(m.lattice_points >= 4);
}

TEST_CASE("weighted Ehrhart data of the segment problem") {
  budget_meter m;
  const auto plain = weighted_ehrhart_data(segment_problem(), {}, 3, m);
  REQUIRE(plain.size() == 3);
  for (int t = 1; t <= 3; ++t) {
    CHECK(plain[t - 1].t == t);
    CHECK(plain[t - 1].closed == 2 * t + 1);
    CHECK(plain[t - 1].interior == 2 * t - 1);
  }

  // pi = w12: closed sum_{0}^{2t} w12 = t(2t+1), interior sum_{1}^{2t-1} = t(2t-1).
  const auto weighted = weighted_ehrhart_data(segment_problem(), {{2}}, 3, m);
  REQUIRE(weighted.size() == 3);
  for (int t = 1; t <= 3; ++t) {
    CHECK(weighted[t - 1].closed == t * (2 * t + 1));
    CHECK(weighted[t - 1].interior == t * (2 * t - 1));
  }
}

TEST_CASE("reciprocity on the segment problem") {
  budget_meter m;
  const reciprocity_report plain = reciprocity_check(segment_problem(), {}, m);
  CHECK(plain.dim == 1);
  CHECK(plain.y_size == 0);
  CHECK(plain.fit_is_polynomial);
  CHECK(plain.reciprocity_ok);
  CHECK(plain.table.size() >= 3);

  const reciprocity_report weighted = reciprocity_check(segment_problem(), {{2}}, m);
  CHECK(weighted.y_size == 1);
  CHECK(weighted.fit_is_polynomial);
  CHECK(weighted.reciprocity_ok);
}

TEST_CASE("pointed configurations and partition functions") {
  const vector_config x = make_config({{1, 0}, {0, 1}, {1, 1}});
  REQUIRE(x.certificate.size() == 2);
  for (const auto& v : x.vectors)
    CHECK(x.certificate[0] * v[0] + x.certificate[1] * v[1] >= 1);

  // (2,2) = z1 (1,0) + z2 (0,1) + z3 (1,1) forces z1 = z2 = 2 - z3.
  budget_meter m;
  CHECK(partition_function(x, {2, 2}, m) == 3);
  CHECK(weighted_partition_function(x, {{2}}, {2, 2}, m) == 3);  // 0 + 1 + 2

  const inclusion_exclusion_result r = inclusion_exclusion_check(x, {{2}}, {2, 2}, m);
  CHECK(r.ok);
  CHECK(r.lhs == 3);
  CHECK(r.rhs == 3);
}

TEST_CASE("unimodularity of incidence configurations") {
  CHECK(unimodularity_check(config_of(segment_problem())));
  CHECK_FALSE(unimodularity_check(make_config({{1, 0}, {0, 1}, {1, 2}})));
}

TEST_CASE("flow problem of the worked template") {
  const floor_diagram d = example_diagram();
  const template_flow tf = flow_problem_of(d.t, 2);

  const int n_l = static_cast<int>(d.t.l_divs.size());
  const int n_r = static_cast<int>(d.t.r_divs.size());
  CHECK(tf.problem.n_vertices == n_l + static_cast<int>(d.t.c.size()) + n_r);
  CHECK(tf.problem.edges.size() == d.l_weights.size() + d.r_weights.size() +
                                       d.whitec_weights.size() + 2 * d.gray_weights.size());
  CHECK(tf.edge_names.size() == tf.problem.edges.size());
  Int total = 0;
  for (const Int& v : tf.problem.d_vec) total += v;
  CHECK(total == 0);
  CHECK_NOTHROW(check_flow_problem(tf.problem));
  CHECK(flow_dimension(tf.problem) ==
        static_cast<int>(tf.problem.edges.size()) - tf.problem.n_vertices + 1);

  // The diagram's own weights, read in canonical edge order, form a strictly
  // positive flow, and the internal functional recovers its multiplicity.
  std::vector<Int> w;
  for (long long v : d.l_weights) w.push_back(v);
  for (long long v : d.r_weights) w.push_back(v);
  std::size_t wi = 0, gi = 0;
  for (const c_vertex& cv : d.t.c) {
    if (cv.color == vcolor::white) {
      w.push_back(d.whitec_weights[wi++]);
    } else if (cv.color == vcolor::gray) {
      w.push_back(d.gray_weights[gi].first);
      w.push_back(d.gray_weights[gi].second);
      ++gi;
    }
  }
  REQUIRE(w.size() == tf.problem.edges.size());

  budget_meter m;
  const auto strict = lattice_points(tf.problem, true, m);
  CHECK(std::find(strict.begin(), strict.end(), w) != strict.end());
  CHECK(eval_weight(tf.internal, w) == multiplicity(d));
}
