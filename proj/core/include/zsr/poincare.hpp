#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "zsr/bigint.hpp"
#include "zsr/group.hpp"
#include "zsr/oracle.hpp"
#include "zsr/report.hpp"

namespace zsr {

/// Truncated coefficients of the Poincare series of the g-isotypic part of
/// S(R) (x) Lambda(R), R the regular representation of an abelian G:
///   F(s, t) = (1/|G|) sum_{d >= 1} Phi_G(g, d) ((1 - (-t)^d) / (1 - s^d))^{|G|/d}.
/// Entry (p, k) is the coefficient of s^p t^k.
class CoeffTable {
 public:
  CoeffTable(GroupSpec group, GroupElement target, Int max_s, Int max_t);

  const GroupSpec& group() const { return group_; }
  const GroupElement& target() const { return target_; }
  Int max_s() const { return max_s_; }
  Int max_t() const { return max_t_; }

  const Count& at(Int p, Int k) const { return coeffs_[p][k]; }
  Count& at(Int p, Int k) { return coeffs_[p][k]; }

  /// {"group": "2,2", "target": label, "coeffs": [["1", ...], ...]}
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  GroupSpec group_;
  GroupElement target_;
  Int max_s_;
  Int max_t_;
  std::vector<std::vector<Count>> coeffs_;
};

/// Entry by entry from the binomial expansion
///   (1/n) sum_{d | (n,p,k)} Phi_G(g,d) (-1)^{k+k/d} C(n/d+p/d-1, p/d) C(n/d, k/d).
CoeffTable poincare_table_closed_form(const GroupSpec& group, const GroupElement& g, Int max_s,
                                      Int max_t);

/// By multiplying truncated power series: (1 - (-t)^d) and the geometric
/// series 1/(1 - s^d) are each raised to the power n/d by repeated
/// multiplication, with no binomial coefficients involved.
CoeffTable poincare_table_series(const GroupSpec& group, const GroupElement& g, Int max_s,
                                 Int max_t);

/// Closed form, checked against the series product (InternalError on any
/// mismatch).
CoeffTable poincare_table(const GroupSpec& group, const GroupElement& g, Int max_s, Int max_t);

/// Checks every entry of poincare_table against count_pairs_coefficient and
/// against brute-force pair enumeration.
Report series_cross_check(const GroupSpec& group, const GroupElement& g, Int max_s, Int max_t,
                          std::uint64_t limit = kDefaultEnumLimit);

/// series_cross_check for every group of order <= max_order and every
/// target, plus the row/column specialisations to count_sequences and
/// count_subsets.
Report verify_series(Int max_order, Int max_s, Int max_t,
                     std::uint64_t limit = kDefaultEnumLimit);

}  // namespace zsr
