#include "fdiag/invariants.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace fdiag;

namespace {

Int F(long long a, long long k, long long g, const std::vector<long long>& x,
      const std::vector<long long>& y) {
  budget_meter m;
  return compute_F(a, k, g, x, y, m);
}

invariant_query mixed_ends_query() {
  invariant_query q;
  q.a = 2;
  q.b = 1;
  q.k = 1;
  q.mv.alpha = {{2, 1}};
  q.mv.beta = {{1, 1}};
  q.mv.alpha_tilde = {{1, 1}};
  return q;
}

}  // namespace

TEST_CASE("check_invariant_query enforces the balance conditions") {
  invariant_query q = mixed_ends_query();
  CHECK_NOTHROW(check_invariant_query(q));

  q.a = 0;
  CHECK_THROWS_AS(check_invariant_query(q), error);

  q = mixed_ends_query();
  q.a = 3;  // left balance needs sum i(alpha_i + beta_i) = ak + b = 4, have 3
  try {
    check_invariant_query(q);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::invalid_query);
  }

  q = mixed_ends_query();
  q.mv.alpha = {{0, 1}};  // order must be positive
  CHECK_THROWS_AS(check_invariant_query(q), error);

  q = mixed_ends_query();
  q.mv.alpha = {{2, 0}};  // count must be positive
  CHECK_THROWS_AS(check_invariant_query(q), error);
}

TEST_CASE("marked point count and adjunction bound") {
  CHECK(l_of(mixed_ends_query()) == 4);  // 2a + g + |beta| + |beta~| - 1
  CHECK(adjunction_genus_bound(2, 0, 1) == 0);
  CHECK(adjunction_genus_bound(3, 4, 2) == 12);
  CHECK(adjunction_genus_bound(1, 1, 0) == 0);
}

TEST_CASE("canonical coordinates round-trip the multiplicity vector") {
  invariant_query q;
  q.a = 3;
  q.b = 4;
  q.k = 2;
  q.g = 1;
  q.mv.alpha = {{1, 1}, {2, 2}};
  q.mv.beta = {{1, 2}, {3, 1}};
  q.mv.alpha_tilde = {{1, 1}};
  q.mv.beta_tilde = {{1, 1}, {2, 1}};
  check_invariant_query(q);
  CHECK(l_of(q) == 11);

  const std::vector<long long> x = canonical_x(q);
  const std::vector<long long> y = y_multiset(q);
  CHECK(x == std::vector<long long>{-2, -2, -1, 1});

  const multiplicity_vector mv = multiplicity_vector_of(x, y);
  CHECK(mv.compact("alpha") == q.mv.compact("alpha"));
  CHECK(mv.compact("beta") == q.mv.compact("beta"));
  CHECK(mv.compact("alpha_tilde") == q.mv.compact("alpha_tilde"));
  CHECK(mv.compact("beta_tilde") == q.mv.compact("beta_tilde"));
}

TEST_CASE("reference invariant counts") {
  budget_meter m;
  invariant_query q;
  q.a = 2;
  q.b = 0;
  q.k = 1;
  q.mv.beta = {{2, 1}};
  CHECK(compute_N(q, m) == 2);

  q.mv.beta.clear();
  q.mv.alpha = {{2, 1}};
  CHECK(compute_N(q, m) == 1);

  q.k = 0;
  q.b = 2;
  q.mv.beta_tilde = {{2, 1}};
  CHECK(compute_N(q, m) == 8);

  CHECK(compute_N(mixed_ends_query(), m) == 8);
}

TEST_CASE("reference values of F") {
  CHECK(F(2, 2, 0, {-1, 3}, {-6}) == 276);
  CHECK(F(2, 1, 0, {-4, 7}, {-5}) == 540);
  CHECK(F(2, 3, 0, {-2, -2}, {-2}) == 28);
  CHECK(F(2, 3, 1, {-8, -1}, {3}) == 1197);
  CHECK(F(2, 2, 1, {-7, 7}, {-4}) == 9544);
  CHECK(F(2, 1, 0, {-9, -5}, {12}) == 3024);
  CHECK(F(2, 2, 1, {-9, -7}, {12}) == 223140);
  CHECK(F(2, 3, 1, {-9, -9}, {12}) == 310344);
}

TEST_CASE("F is invariant under permuting x and y independently") {
  CHECK(F(2, 2, 0, {3, -1}, {-6}) == 276);
  CHECK(F(2, 1, 0, {7, -4}, {-5}) == 540);
  budget_meter m1, m2;
  CHECK(compute_F(2, 2, 1, {-4, -3}, {2, 1}, m1) ==
        compute_F(2, 2, 1, {-3, -4}, {1, 2}, m2));
}

TEST_CASE("off-lattice points fail identically under permutation") {
  auto message_of = [](const std::vector<long long>& x) {
    budget_meter m;
    try {
      compute_F(2, 1, 0, x, {11}, m);
    } catch (const error& e) {
      CHECK(e.code == errc::not_in_lattice);
      return std::string(e.what());
    }
    return std::string();
  };
  const std::string m1 = message_of({-9, -5});
  const std::string m2 = message_of({-5, -9});
  CHECK_FALSE(m1.empty());
  CHECK(m1 == m2);
}

TEST_CASE("gamma counts squared-part compositions") {
  CHECK(gamma(0, 0) == 0);
  CHECK(gamma(0, 1) == 1);
  CHECK(gamma(0, 7) == 49);  // one part, squared
  CHECK(gamma(1, 1) == 0);
  CHECK(gamma(1, 2) == 1);
  CHECK(gamma(1, 3) == 8);
  CHECK(gamma(1, 5) == 104);
  CHECK(gamma(1, 6) == 259);
  CHECK(gamma(2, 3) == 1);
  CHECK(gamma(2, 4) == 12);
  CHECK_THROWS_AS(gamma(-1, 2), error);
}
