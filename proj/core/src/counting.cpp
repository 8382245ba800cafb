#include "zsr/counting.hpp"

#include <array>
#include <numeric>

#include "zsr/error.hpp"
#include "zsr/zerosum.hpp"

namespace zsr {

namespace {

int sign_pow(Int e) { return e % 2 == 0 ? 1 : -1; }

void require_member(const GroupSpec& group, const GroupElement& g) {
  require(group.contains(g), "target element not in group " + group.to_string());
}

}  // namespace

Count count_subsets(const GroupSpec& group, Int k, const GroupElement& g) {
  require_member(group, g);
  const Int n = group.order();
  require(k >= 0 && k <= n, "count_subsets: need 0 <= k <= |G|, got k = " + std::to_string(k));
  if (k == 0) return g.is_identity() ? 1 : 0;
  if (k == n) {
    const GroupElement total = weighted_sum(group, std::vector<Int>(static_cast<std::size_t>(n), 1));
    return total == g ? 1 : 0;
  }
  Count sum = 0;
  for (Int d : divisors(std::gcd(n, k))) {
    const Int phi = character_sum(group, g, d);
    if (phi == 0) continue;
    sum += Count(phi) * sign_pow(k + k / d) * binomial(n / d, k / d);
  }
  return exact_div(sum, n, "count_subsets");
}

Count count_sequences(const GroupSpec& group, Int m, const GroupElement& g) {
  require_member(group, g);
  require(m >= 0, "count_sequences: length must be non-negative");
  if (m == 0) return g.is_identity() ? 1 : 0;
  const Int n = group.order();
  Count sum = 0;
  for (Int d : divisors(std::gcd(n, m))) {
    const Int phi = character_sum(group, g, d);
    if (phi == 0) continue;
    sum += Count(phi) * binomial(n / d + m / d, n / d);
  }
  return exact_div(sum, n + m, "count_sequences");
}

Count rational_catalan(Int a, Int b) {
  require(a >= 1 && b >= 1, "rational_catalan: need a, b >= 1");
  require(std::gcd(a, b) == 1, "rational_catalan: (" + std::to_string(a) + ", " +
                                   std::to_string(b) + ") are not coprime");
  return exact_div(binomial(a + b, a), a + b, "rational_catalan");
}

Count pair_dimension(Int p, Int q, Int m, const GroupSpec& group) {
  require(p >= 0 && q >= 0 && m >= 0, "pair_dimension: p, q, m must be non-negative");
  require(group.order() == q + m, "pair_dimension: |G| = " + std::to_string(group.order()) +
                                      " but q + m = " + std::to_string(q + m));
  const Int total = p + q + m;
  require(total >= 1, "pair_dimension: p + q + m must be positive");
  Count sum = 0;
  for (Int d : divisors(gcd3(p, q, m))) {
    const Int phi = order_count(group, d);
    if (phi == 0) continue;
    const std::array<Int, 3> parts{p / d, q / d, m / d};
    sum += Count(phi) * sign_pow(m + m / d) * multinomial(parts);
  }
  return exact_div(sum, total, "pair_dimension");
}

Count count_pairs_coefficient(const GroupSpec& group, const GroupElement& g, Int p, Int k) {
  require_member(group, g);
  require(p >= 0 && k >= 0, "count_pairs_coefficient: p, k must be non-negative");
  const Int n = group.order();
  if (k > n) return 0;
  Count sum = 0;
  for (Int d : divisors(gcd3(n, p, k))) {
    const Int phi = character_sum(group, g, d);
    if (phi == 0) continue;
    sum += Count(phi) * sign_pow(k + k / d) * binomial(n / d + p / d - 1, p / d) *
           binomial(n / d, k / d);
  }
  return exact_div(sum, n, "count_pairs_coefficient");
}

}  // namespace zsr
