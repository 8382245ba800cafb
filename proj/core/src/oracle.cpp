#include "zsr/oracle.hpp"

#include "zsr/bigint.hpp"
#include "zsr/error.hpp"

namespace zsr {

namespace {

void check_limit(const Count& candidates, std::uint64_t limit, const char* what) {
  if (candidates > limit) {
    throw LimitExceeded(std::string(what) + ": " + candidates.str() +
                        " candidates exceed the enumeration limit " + std::to_string(limit));
  }
}

// Visits every multiset of size m over labels [0, n) as a non-decreasing
// label list, in lexicographic order. `visit(mults, sum_label)`.
template <class Visit>
void for_each_multiset(const GroupSpec& group, Int m, Visit&& visit) {
  const Int n = group.order();
  std::vector<Int> mults(static_cast<std::size_t>(n), 0);
  // prefix[j] = label of the sum of the first j chosen labels
  std::vector<Int> prefix(static_cast<std::size_t>(m) + 1, 0);
  auto rec = [&](auto&& self, Int depth, Int min_label) -> void {
    if (depth == m) {
      visit(mults, prefix[depth]);
      return;
    }
    for (Int l = min_label; l < n; ++l) {
      ++mults[l];
      prefix[depth + 1] = group.add_labels(prefix[depth], l);
      self(self, depth + 1, l);
      --mults[l];
    }
  };
  rec(rec, 0, 0);
}

template <class Visit>
void for_each_subset(const GroupSpec& group, Int k, Visit&& visit) {
  const Int n = group.order();
  std::vector<Int> bits(static_cast<std::size_t>(n), 0);
  std::vector<Int> prefix(static_cast<std::size_t>(k) + 1, 0);
  auto rec = [&](auto&& self, Int depth, Int min_label) -> void {
    if (depth == k) {
      visit(bits, prefix[depth]);
      return;
    }
    for (Int l = min_label; l <= n - (k - depth); ++l) {
      bits[l] = 1;
      prefix[depth + 1] = group.add_labels(prefix[depth], l);
      self(self, depth + 1, l + 1);
      bits[l] = 0;
    }
  };
  rec(rec, 0, 0);
}

Count sequence_candidates(const GroupSpec& group, Int m) {
  return binomial(group.order() + m - 1, m);
}

Count subset_candidates(const GroupSpec& group, Int k) { return binomial(group.order(), k); }

void require_args(const GroupSpec& group, Int size, const GroupElement* g) {
  require(size >= 0, "enumeration size must be non-negative");
  if (g) require(group.contains(*g), "target element not in group " + group.to_string());
}

}  // namespace

std::vector<MultiplicityVector> enum_sequences(const GroupSpec& group, Int m, const GroupElement& g,
                                               std::uint64_t limit) {
  require_args(group, m, &g);
  check_limit(sequence_candidates(group, m), limit, "enum_sequences");
  const Int target = group.label(g);
  std::vector<MultiplicityVector> out;
  for_each_multiset(group, m, [&](const std::vector<Int>& mults, Int sum) {
    if (sum == target) out.emplace_back(group, mults);
  });
  return out;
}

std::vector<IndicatorVector> enum_subsets(const GroupSpec& group, Int k, const GroupElement& g,
                                          std::uint64_t limit) {
  require_args(group, k, &g);
  require(k <= group.order(), "enum_subsets: k exceeds |G|");
  check_limit(subset_candidates(group, k), limit, "enum_subsets");
  const Int target = group.label(g);
  std::vector<IndicatorVector> out;
  for_each_subset(group, k, [&](const std::vector<Int>& bits, Int sum) {
    if (sum == target) out.emplace_back(group, bits);
  });
  return out;
}

std::vector<SequenceSubsetPair> enum_pairs(const GroupSpec& group, Int p, Int k,
                                           const GroupElement& g, std::uint64_t limit) {
  require_args(group, p, &g);
  require_args(group, k, nullptr);
  require(k <= group.order(), "enum_pairs: k exceeds |G|");
  check_limit(sequence_candidates(group, p) * subset_candidates(group, k), limit, "enum_pairs");
  const Int target = group.label(g);

  // subsets bucketed by their sum, each bucket kept in enumeration order
  std::vector<std::vector<IndicatorVector>> by_sum(static_cast<std::size_t>(group.order()));
  for_each_subset(group, k, [&](const std::vector<Int>& bits, Int sum) {
    by_sum[sum].emplace_back(group, bits);
  });
  const GroupElement target_el = group.unlabel(target);
  std::vector<SequenceSubsetPair> out;
  for_each_multiset(group, p, [&](const std::vector<Int>& mults, Int sum) {
    // need sigma(B) = g - sigma(A)
    const Int need = group.label(group.add(target_el, group.negate(group.unlabel(sum))));
    if (by_sum[need].empty()) return;
    MultiplicityVector a(group, mults);
    for (const auto& b : by_sum[need]) out.push_back({a, b});
  });
  return out;
}

std::vector<std::uint64_t> sequence_sum_histogram(const GroupSpec& group, Int m,
                                                  std::uint64_t limit) {
  require_args(group, m, nullptr);
  check_limit(sequence_candidates(group, m), limit, "sequence_sum_histogram");
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(group.order()), 0);
  for_each_multiset(group, m, [&](const std::vector<Int>&, Int sum) { ++hist[sum]; });
  return hist;
}

std::vector<std::uint64_t> subset_sum_histogram(const GroupSpec& group, Int k,
                                                std::uint64_t limit) {
  require_args(group, k, nullptr);
  require(k <= group.order(), "subset_sum_histogram: k exceeds |G|");
  check_limit(subset_candidates(group, k), limit, "subset_sum_histogram");
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(group.order()), 0);
  for_each_subset(group, k, [&](const std::vector<Int>&, Int sum) { ++hist[sum]; });
  return hist;
}

std::vector<std::uint64_t> pair_sum_histogram(const GroupSpec& group, Int p, Int k,
                                              std::uint64_t limit) {
  require_args(group, p, nullptr);
  require_args(group, k, nullptr);
  const Int n = group.order();
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n), 0);
  if (k > n) return hist;
  check_limit(sequence_candidates(group, p) * subset_candidates(group, k), limit,
              "pair_sum_histogram");
  const auto seqs = sequence_sum_histogram(group, p, limit);
  const auto subs = subset_sum_histogram(group, k, limit);
  for (Int a = 0; a < n; ++a) {
    if (seqs[a] == 0) continue;
    for (Int b = 0; b < n; ++b) hist[group.add_labels(a, b)] += seqs[a] * subs[b];
  }
  return hist;
}

}  // namespace zsr
