#include "fdiag/invariants.hpp"

#include <algorithm>
#include <string>

namespace fdiag {

namespace {

long long order_sum(const std::vector<std::pair<long long, long long>>& sparse) {
  long long s = 0;
  for (const auto& [order, count] : sparse) s += order * count;
  return s;
}

long long count_sum(const std::vector<std::pair<long long, long long>>& sparse) {
  long long s = 0;
  for (const auto& [order, count] : sparse) s += count;
  return s;
}

void check_sparse(const std::vector<std::pair<long long, long long>>& sparse,
                  const char* name) {
  long long prev = 0;
  for (const auto& [order, count] : sparse) {
    if (order <= prev)
      fail(errc::invalid_query,
           std::string(name) + " orders must be strictly increasing positive integers");
    if (count < 1)
      fail(errc::invalid_query, std::string(name) + " counts must be positive");
    prev = order;
  }
}

}  // namespace

long long l_of(const invariant_query& q) {
  return 2 * q.a + q.g + count_sum(q.mv.beta) + count_sum(q.mv.beta_tilde) - 1;
}

long long adjunction_genus_bound(long long a, long long b, long long k) {
  return a * (a - 1) / 2 * k + a * b - a - b + 1;
}

void check_invariant_query(const invariant_query& q) {
  if (q.a < 1)
    fail(errc::invalid_query, "a must be positive (a = 0 is outside the integer-valued range)");
  if (q.b < 0 || q.k < 0 || q.g < 0)
    fail(errc::invalid_query, "b, k, g must be nonnegative");
  check_sparse(q.mv.alpha, "alpha");
  check_sparse(q.mv.beta, "beta");
  check_sparse(q.mv.alpha_tilde, "alpha~");
  check_sparse(q.mv.beta_tilde, "beta~");
  long long left = q.mv.weighted_sum_left();
  if (left != q.a * q.k + q.b)
    fail(errc::invalid_query,
         "multiplicity sums are inconsistent: sum i*(alpha_i + beta_i) = " +
             std::to_string(left) + ", expected a*k + b = " + std::to_string(q.a * q.k + q.b));
  long long right = q.mv.weighted_sum_right();
  if (right != q.b)
    fail(errc::invalid_query,
         "multiplicity sums are inconsistent: sum i*(alpha~_i + beta~_i) = " +
             std::to_string(right) + ", expected b = " + std::to_string(q.b));
}

std::vector<long long> canonical_x(const invariant_query& q) {
  std::vector<long long> x;
  for (auto it = q.mv.alpha.rbegin(); it != q.mv.alpha.rend(); ++it)
    for (long long c = 0; c < it->second; ++c) x.push_back(-it->first);
  for (auto it = q.mv.alpha_tilde.rbegin(); it != q.mv.alpha_tilde.rend(); ++it)
    for (long long c = 0; c < it->second; ++c) x.push_back(it->first);
  return x;
}

std::vector<long long> y_multiset(const invariant_query& q) {
  std::vector<long long> y;
  for (const auto& [order, count] : q.mv.beta)
    for (long long c = 0; c < count; ++c) y.push_back(-order);
  for (const auto& [order, count] : q.mv.beta_tilde)
    for (long long c = 0; c < count; ++c) y.push_back(order);
  std::sort(y.begin(), y.end());
  return y;
}

Int compute_N(const invariant_query& q, budget_meter& meter) {
  check_invariant_query(q);
  enumeration_query eq;
  eq.a = q.a;
  eq.g = q.g;
  eq.k = q.k;
  eq.x = canonical_x(q);
  eq.c_divs = y_multiset(q);
  return enumerate_diagrams(eq, meter).total;
}

Int compute_F(long long a, long long k, long long g, const std::vector<long long>& x,
              const std::vector<long long>& y, budget_meter& meter) {
  enumeration_query eq;
  eq.a = a;
  eq.g = g;
  eq.k = k;
  eq.x = x;
  eq.c_divs = y;
  return enumerate_diagrams(eq, meter).total;
}

Int gamma(long long g, long long w) {
  if (g < 0 || w < 0) fail(errc::invalid_query, "gamma needs g >= 0 and w >= 0");
  long long parts = g + 1;
  if (w < parts) return 0;
  // dp over (parts used, remainder), exact integers
  std::vector<Int> dp(static_cast<std::size_t>(w) + 1, 0);
  for (long long r = 1; r <= w; ++r)
    dp[static_cast<std::size_t>(r)] = Int(r) * r;
  for (long long p = 2; p <= parts; ++p) {
    std::vector<Int> next(static_cast<std::size_t>(w) + 1, 0);
    for (long long r = p; r <= w; ++r) {
      Int acc = 0;
      for (long long first = 1; first + (p - 1) <= r; ++first)
        acc += Int(first) * first * dp[static_cast<std::size_t>(r - first)];
      next[static_cast<std::size_t>(r)] = acc;
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(w)];
}

}  // namespace fdiag
