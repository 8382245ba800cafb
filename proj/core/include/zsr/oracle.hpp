#pragma once

#include <cstdint>
#include <vector>

#include "zsr/group.hpp"
#include "zsr/zerosum.hpp"

namespace zsr {

inline constexpr std::uint64_t kDefaultEnumLimit = 10'000'000;

/// Brute-force enumerators. Each one walks every candidate (multisets by a
/// non-decreasing label counter, subsets by combinations) and keeps those
/// with the requested sum; none of them touches a closed form.
///
/// Output order is lexicographic on the sorted list of element labels, so
/// for G = C_3, m = 2 the sequences come out as {0,0}, {1,2}.
/// A candidate count above `limit` throws LimitExceeded.
std::vector<MultiplicityVector> enum_sequences(const GroupSpec& group, Int m, const GroupElement& g,
                                               std::uint64_t limit = kDefaultEnumLimit);

std::vector<IndicatorVector> enum_subsets(const GroupSpec& group, Int k, const GroupElement& g,
                                          std::uint64_t limit = kDefaultEnumLimit);

/// All (A, B) with |A| = p, |B| = k and sigma(A) + sigma(B) = g, ordered by
/// A then B. The limit applies to the product of candidate counts.
std::vector<SequenceSubsetPair> enum_pairs(const GroupSpec& group, Int p, Int k,
                                           const GroupElement& g,
                                           std::uint64_t limit = kDefaultEnumLimit);

/// Counts of length-m sequences by sum, indexed by the label of the sum.
std::vector<std::uint64_t> sequence_sum_histogram(const GroupSpec& group, Int m,
                                                  std::uint64_t limit = kDefaultEnumLimit);
std::vector<std::uint64_t> subset_sum_histogram(const GroupSpec& group, Int k,
                                                std::uint64_t limit = kDefaultEnumLimit);
/// Pair counts by sigma(A) + sigma(B); both sides are enumerated in full and
/// tallied by label, never by formula.
std::vector<std::uint64_t> pair_sum_histogram(const GroupSpec& group, Int p, Int k,
                                              std::uint64_t limit = kDefaultEnumLimit);

}  // namespace zsr
