#include "fdiag/chambers.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using namespace fdiag;

TEST_CASE("build_arrangement rejects malformed data") {
  CHECK_THROWS_AS(build_arrangement(0, 1, 2, 1), error);
  CHECK_THROWS_AS(build_arrangement(2, -1, 2, 1), error);
  CHECK_THROWS_AS(build_arrangement(2, 1, 0, 1), error);
  CHECK_THROWS_AS(build_arrangement(8, 8, 2, 1), error);
}

TEST_CASE("the nine walls of the two-string case") {
  const arrangement arr = build_arrangement(2, 1, 2, 1);
  std::vector<std::string> walls;
  for (const wall_form& f : arr.forms) walls.push_back(form_to_string(f));
  CHECK(walls == std::vector<std::string>{"x2", "x2 + k", "x2 + 2k", "x2 + y1",
                                          "x2 + y1 + k", "x2 + y1 + 2k", "x1 + x2",
                                          "x1 + x2 + k", "x1 + x2 + 2k"});

  const json j = arrangement_to_json(arr);
  CHECK(j["forms"].size() == 9);
  CHECK(j["forms"][0]["text"] == "x2");
  CHECK(j["k"] == 1);
}

TEST_CASE("signature_of classifies, rejects off-lattice, names walls") {
  const arrangement arr = build_arrangement(2, 1, 2, 2);
  CHECK(signature_of(arr, {{-1, 3}, {-6}}) == "+++--++++");
  CHECK(eval_form(arr.forms[0], {{-1, 3}, {-6}}, 2) == 3);

  try {
    signature_of(arr, {{1, 1}, {1}});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::not_in_lattice);
  }

  const arrangement arr1 = build_arrangement(2, 1, 2, 1);
  try {
    signature_of(arr1, {{-3, 0}, {1}});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::on_wall);
    CHECK(std::string(e.what()).find("x2 = 0") != std::string::npos);
  }
}

TEST_CASE("chamber labels split coordinates into sign bands") {
  CHECK(chamber_label({{-1, 3}, {-6}}, 2) == "0+-");
  CHECK(chamber_label({{1, 4}, {-7}}, 1) == "++-");
  CHECK_THROWS_AS(chamber_label({{1}, {1}}, 1), error);
  try {
    chamber_label({{1, -5}, {0}}, 2);  // y1 = 0
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::on_wall);
  }
  try {
    chamber_label({{-2, -8}, {6}}, 2);  // x1 = -k
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::on_wall);
  }
}

TEST_CASE("box census at k = 2") {
  const arrangement arr = build_arrangement(2, 1, 2, 2);
  std::set<std::string> labels, sigs;
  long long labeled = 0, on_label_wall = 0;
  for (long long x1 = -30; x1 <= 30; ++x1)
    for (long long y1 = -30; y1 <= 30; ++y1) {
      const long long x2 = -x1 - y1 - 4;
      if (x2 < -30 || x2 > 30) continue;
      const lambda_point p{{x1, x2}, {y1}};
      try {
        labels.insert(chamber_label(p, 2));
        ++labeled;
      } catch (const error&) {
        ++on_label_wall;
      }
      try {
        sigs.insert(signature_of(arr, p));
      } catch (const error&) {
      }
    }
  CHECK(labels.size() == 12);
  CHECK(sigs.size() == 21);
  CHECK(labeled == 2436);
  CHECK(on_label_wall == 339);
}

TEST_CASE("sample_chamber is deterministic and respects the signature") {
  const arrangement arr = build_arrangement(2, 1, 2, 1);
  const std::string sig = "+++---+++";
  const sample_result a = sample_chamber(arr, sig, 5, 20, 42);
  const sample_result b = sample_chamber(arr, sig, 5, 20, 42);
  CHECK(a.complete);
  REQUIRE(a.points.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(a.points[i].x == b.points[i].x);
    CHECK(a.points[i].y == b.points[i].y);
    CHECK(signature_of(arr, a.points[i]) == sig);
    CHECK(a.points[i].x[0] + a.points[i].x[1] + a.points[i].y[0] + 2 == 0);
  }

  // x2 > 0 and x2 + k < 0 cannot hold together.
  const sample_result none = sample_chamber(arr, "+--------", 3, 20, 42);
  CHECK_FALSE(none.complete);
  CHECK(none.points.empty());

  CHECK_THROWS_AS(sample_chamber(arr, "++", 3, 20, 42), error);
  CHECK_THROWS_AS(sample_chamber(arr, "+++---++?", 3, 20, 42), error);
  CHECK_THROWS_AS(sample_chamber(arr, sig, 0, 20, 42), error);
}

TEST_CASE("sample_label is deterministic and matches the label") {
  const sample_result a = sample_label("0+-", 2, 10, 30, 42);
  const sample_result b = sample_label("0+-", 2, 10, 30, 42);
  CHECK(a.complete);
  REQUIRE(a.points.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(a.points[i].x == b.points[i].x);
    CHECK(a.points[i].y == b.points[i].y);
    CHECK(chamber_label(a.points[i], 2) == "0+-");
    CHECK(a.points[i].x[0] + a.points[i].x[1] + a.points[i].y[0] + 4 == 0);
  }
  CHECK_THROWS_AS(sample_label("0+", 2, 3, 30, 42), error);
  CHECK_THROWS_AS(sample_label("0+?", 2, 3, 30, 42), error);
}

TEST_CASE("default box bound grows with the surface data") {
  CHECK(default_box_bound(2, 0) == 40);
  CHECK(default_box_bound(2, 1) == 48);
  CHECK(default_box_bound(3, 2) == 64);
}
