#pragma once

#include <cstdint>
#include <vector>

#include "zsr/group.hpp"
#include "zsr/numtheory.hpp"
#include "zsr/oracle.hpp"
#include "zsr/report.hpp"

namespace zsr {

/// |N(G,k,0)| = |N(G,n-k,0)| holds iff |G| is odd, or r >= 2 with
/// 2 | n_{r-1}, or v2(k) < v2(n_r). Requires 1 <= k <= |G| - 1.
bool subset_reci_predicate(const GroupSpec& group, Int k);

/// Whether the elements of G sum to the identity. Computed structurally and
/// by direct summation; InternalError if the two disagree.
bool sum_all_elements_is_zero(const GroupSpec& group);

/// Checks subset_reci_predicate against count equality for every group of
/// order <= max_order and every k, including the strict inequality
/// directions when the predicate fails.
Report verify_subset_reciprocity(Int max_order = 16);

/// |M(G,p,0)| = |M(C_p,|G|,0)| iff p does not divide n_1...n_{r-1}.
/// Requires p prime.
bool gcp_predicate(const GroupSpec& group, Int p);

Report verify_gcp(Int max_order, const std::vector<Int>& primes);

/// |M(C_n^r, m^r, 0)| = |M(C_m^r, n^r, 0)| under (n, m^r) = (n^r, m);
/// PreconditionError otherwise. Both sides are also enumerated when the
/// multiset count is within `limit`.
Report cnr_reciprocity_check(Int n, Int m, Int r, std::uint64_t limit = kDefaultEnumLimit);

/// Compares |M(G,|H|,0)| with |M(H,|G|,0)| over all unordered pairs of
/// distinct groups with orders <= max_order. Only coprime-order pairs that
/// differ count as failures; the rest is raw data.
Report reciprocity_scan(Int max_order);

}  // namespace zsr
