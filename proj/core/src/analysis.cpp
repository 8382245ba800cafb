#include "zsr/analysis.hpp"

#include <numeric>

#include "zsr/counting.hpp"
#include "zsr/error.hpp"

namespace zsr {

namespace {

bool complement_condition(const GroupSpec& group) {
  const auto& f = group.invariant_factors();
  const std::size_t r = group.rank();
  return group.order() % 2 == 1 || (r >= 2 && f[r - 2] % 2 == 0);
}

Int top_factor(const GroupSpec& group) {
  const auto& f = group.invariant_factors();
  return f.empty() ? 1 : f.back();
}

}  // namespace

bool subset_reci_predicate(const GroupSpec& group, Int k) {
  require(k >= 1 && k <= group.order() - 1,
          "k must satisfy 1 <= k <= |G| - 1, got " + std::to_string(k));
  return complement_condition(group) || v2(k) < v2(top_factor(group));
}

bool sum_all_elements_is_zero(const GroupSpec& group) {
  const bool structural = complement_condition(group);
  Int sum = 0;
  for (Int label = 0; label < group.order(); ++label) sum = group.add_labels(sum, label);
  const bool direct = sum == 0;
  ensure(structural == direct,
         "element-sum predicate disagrees with direct summation for " + group.to_string());
  return direct;
}

Report verify_subset_reciprocity(Int max_order) {
  require(max_order >= 1, "max_order must be positive");
  Report report;
  report.theorem = "subset-reciprocity";
  for (const GroupSpec& group : groups_up_to_order(max_order)) {
    const Int n = group.order();
    const GroupElement zero = group.identity();
    const bool complement = complement_condition(group);
    const int top = v2(top_factor(group));
    for (Int k = 1; k <= n - 1; ++k) {
      const Count a = count_subsets(group, k, zero);
      const Count b = count_subsets(group, n - k, zero);
      const bool predicate = subset_reci_predicate(group, k);
      const bool equal = a == b;
      std::string direction = equal ? "=" : (a < b ? "<" : ">");
      bool ok = predicate == equal;
      if (!complement && v2(k) == top) ok = ok && a < b;
      if (!complement && v2(k) > top) ok = ok && a > b;
      nlohmann::json row = {{"group", group.to_string()},
                            {"k", k},
                            {"N_k", to_decimal(a)},
                            {"N_n_minus_k", to_decimal(b)},
                            {"predicate", predicate},
                            {"relation", direction}};
      ++report.scanned;
      if (!ok) report.failures.push_back(row);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

bool gcp_predicate(const GroupSpec& group, Int p) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  const auto& f = group.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (f[i] % p == 0) return false;
  }
  return true;
}

Report verify_gcp(Int max_order, const std::vector<Int>& primes) {
  require(max_order >= 1, "max_order must be positive");
  for (Int p : primes) require(is_prime(p), std::to_string(p) + " is not prime");
  Report report;
  report.theorem = "gcp";
  for (Int p : primes) {
    const GroupSpec cp = GroupSpec::cyclic(p);
    for (const GroupSpec& group : groups_up_to_order(max_order)) {
      const Count a = count_sequences(group, p, group.identity());
      const Count b = count_sequences(cp, group.order(), cp.identity());
      const bool predicate = gcp_predicate(group, p);
      const bool ok = predicate ? a == b : a > b;
      nlohmann::json row = {{"group", group.to_string()},
                            {"p", p},
                            {"M_G_p", to_decimal(a)},
                            {"M_Cp_n", to_decimal(b)},
                            {"predicate", predicate}};
      ++report.scanned;
      if (!ok) report.failures.push_back(row);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

Report cnr_reciprocity_check(Int n, Int m, Int r, std::uint64_t limit) {
  require(n >= 1 && m >= 1 && r >= 1, "n, m, r must be positive");
  const Int nr = checked_pow(n, static_cast<int>(r));
  const Int mr = checked_pow(m, static_cast<int>(r));
  require(std::gcd(n, mr) == std::gcd(nr, m),
          "condition (n, m^r) = (n^r, m) fails: (" + std::to_string(n) + ", " +
              std::to_string(mr) + ") = " + std::to_string(std::gcd(n, mr)) + " but (" +
              std::to_string(nr) + ", " + std::to_string(m) + ") = " +
              std::to_string(std::gcd(nr, m)));
  const GroupSpec g = power_of_cyclic(n, static_cast<int>(r));
  const GroupSpec h = power_of_cyclic(m, static_cast<int>(r));
  Report report;
  report.theorem = "cnr-reciprocity";
  report.scanned = 1;
  const Count a = count_sequences(g, mr, g.identity());
  const Count b = count_sequences(h, nr, h.identity());
  nlohmann::json row = {{"n", n}, {"m", m}, {"r", r},
                        {"M_G", to_decimal(a)}, {"M_H", to_decimal(b)}};
  bool ok = a == b;
  if (std::gcd(nr, mr) == 1) {
    const Count cat = rational_catalan(nr, mr);
    row["catalan"] = to_decimal(cat);
    ok = ok && a == cat;
  }
  // multiset counts C(|G| + len - 1, len) bound the enumeration work
  auto within = [&](Int order, Int len) {
    return binomial(order + len - 1, len) <= Count(limit);
  };
  if (within(nr, mr) && within(mr, nr)) {
    const Count oa = sequence_sum_histogram(g, mr, limit)[0];
    const Count ob = sequence_sum_histogram(h, nr, limit)[0];
    row["oracle_G"] = to_decimal(oa);
    row["oracle_H"] = to_decimal(ob);
    ok = ok && oa == a && ob == b;
  }
  if (!ok) report.failures.push_back(row);
  report.rows.push_back(std::move(row));
  return report;
}

Report reciprocity_scan(Int max_order) {
  require(max_order >= 1, "max_order must be positive");
  Report report;
  report.theorem = "reciprocity-scan";
  const std::vector<GroupSpec> groups = groups_up_to_order(max_order);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const GroupSpec& g = groups[i];
      const GroupSpec& h = groups[j];
      const Count a = count_sequences(g, h.order(), g.identity());
      const Count b = count_sequences(h, g.order(), h.identity());
      const bool coprime = std::gcd(g.order(), h.order()) == 1;
      nlohmann::json row = {{"G", g.to_string()},
                            {"H", h.to_string()},
                            {"M_G_H", to_decimal(a)},
                            {"M_H_G", to_decimal(b)},
                            {"equal", a == b},
                            {"coprime", coprime}};
      ++report.scanned;
      if (coprime && a != b) report.failures.push_back(row);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace zsr
