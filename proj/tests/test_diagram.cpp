#include "fdiag/acceptance.hpp"
#include "fdiag/diagram.hpp"

#include <doctest.h>

#include <vector>

using namespace fdiag;

TEST_CASE("three-floor example validates at k = 2 only") {
  const floor_diagram d = example_diagram();
  CHECK(validate(d, 2).ok);
  // at k = 1 the black divergences are wrong
  const validation_report r = validate(d, 1);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violation.empty());
}

TEST_CASE("three-floor example derives the expected data") {
  const derived_data_result dd = derived_data(example_diagram());
  CHECK(dd.x == std::vector<long long>{-2, -2, -1, 1});
  CHECK(dd.y == std::vector<long long>{-1, 2, -3, 1, -1});
  CHECK(dd.a == 3);
  CHECK(dd.b == 4);
  CHECK(dd.genus == 1);
  CHECK(dd.mv.compact("alpha") == "12");
  CHECK(dd.mv.compact("beta") == "201");
  CHECK(dd.mv.compact("alpha_tilde") == "1");
  CHECK(dd.mv.compact("beta_tilde") == "11");
  CHECK(dd.mv.weighted_sum_left() == 10);  // ak + b = 6 + 4
  CHECK(dd.mv.weighted_sum_right() == 4);
  CHECK(multiplicity(example_diagram()) == 6);
}

TEST_CASE("divergence bookkeeping on the example") {
  const floor_diagram d = example_diagram();
  // blacks sit at positions 1, 5, 10 and each diverges by k = 2
  CHECK(divergence(d, "c1") == 2);
  CHECK(divergence(d, "c5") == 2);
  CHECK(divergence(d, "c10") == 2);
  CHECK(divergence(d, "c3") == 0);  // first gray
  CHECK(divergence(d, "l0") == -2);
  CHECK(divergence(d, "r0") == 1);
}

TEST_CASE("diagram json round trip is exact") {
  const floor_diagram d = example_diagram();
  const floor_diagram back = diagram_from_json(diagram_to_json(d));
  CHECK(canonical_key(back) == canonical_key(d));
  CHECK(diagram_to_json(back) == diagram_to_json(d));
}

TEST_CASE("canonical keys separate distinct diagrams") {
  floor_diagram d = example_diagram();
  floor_diagram e = d;
  e.gray_weights[0] = {2, 2};
  CHECK(canonical_key(d) != canonical_key(e));
}

TEST_CASE("multiplicity vector of a divergence pair") {
  const multiplicity_vector mv = multiplicity_vector_of({-1, 3}, {-6});
  CHECK(mv.alpha == std::vector<std::pair<long long, long long>>{{1, 1}});
  CHECK(mv.alpha_tilde == std::vector<std::pair<long long, long long>>{{3, 1}});
  CHECK(mv.beta == std::vector<std::pair<long long, long long>>{{6, 1}});
  CHECK(mv.beta_tilde.empty());
  CHECK(mv.compact("beta") == "000001");
  CHECK(mv.compact("beta_tilde") == "0");
  CHECK(mv.weighted_sum_left() == 7);
  CHECK(mv.weighted_sum_right() == 3);
}

TEST_CASE("validate rejects a gray with unbalanced weights") {
  floor_diagram d = example_diagram();
  d.gray_weights[0] = {1, 2};
  CHECK_FALSE(validate(d, 2).ok);
}

TEST_CASE("validate rejects a white weight differing from |divergence|") {
  floor_diagram d = example_diagram();
  d.whitec_weights[2] = 1;  // the -3 white must carry weight 3
  CHECK_FALSE(validate(d, 2).ok);
}
