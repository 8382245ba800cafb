#include "zsr/poincare.hpp"

#include "zsr/counting.hpp"
#include "zsr/error.hpp"

namespace zsr {

namespace {

void require_bounds(const GroupSpec& group, const GroupElement& g, Int max_s, Int max_t) {
  require(max_s >= 0 && max_t >= 0, "truncation bounds must be non-negative");
  require(group.contains(g), "target element not in group " + group.to_string());
}

using Series = std::vector<Count>;

Series multiply_truncated(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series power_truncated(const Series& base, Int exponent) {
  Series out(base.size(), 0);
  out[0] = 1;
  for (Int i = 0; i < exponent; ++i) out = multiply_truncated(out, base);
  return out;
}

}  // namespace

CoeffTable::CoeffTable(GroupSpec group, GroupElement target, Int max_s, Int max_t)
    : group_(std::move(group)),
      target_(std::move(target)),
      max_s_(max_s),
      max_t_(max_t),
      coeffs_(static_cast<std::size_t>(max_s + 1),
              std::vector<Count>(static_cast<std::size_t>(max_t + 1), 0)) {}

nlohmann::ordered_json CoeffTable::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group_.to_string();
  j["target"] = group_.label(target_);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : coeffs_) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(to_decimal(c));
    rows.push_back(std::move(r));
  }
  j["coeffs"] = std::move(rows);
  return j;
}

CoeffTable poincare_table_closed_form(const GroupSpec& group, const GroupElement& g, Int max_s,
                                      Int max_t) {
  require_bounds(group, g, max_s, max_t);
  const Int n = group.order();
  CoeffTable table(group, g, max_s, max_t);
  std::vector<std::pair<Int, Int>> chars;  // (d, Phi_G(g, d)) with Phi != 0
  for (Int d : divisors(n)) {
    const Int phi = character_sum(group, g, d);
    if (phi != 0) chars.emplace_back(d, phi);
  }
  // exterior powers vanish above |G|, so columns k > n stay zero
  for (Int p = 0; p <= max_s; ++p) {
    for (Int k = 0; k <= std::min(max_t, n); ++k) {
      Count sum = 0;
      for (auto [d, phi] : chars) {
        if (p % d != 0 || k % d != 0) continue;
        const int sign = (k + k / d) % 2 == 0 ? 1 : -1;
        sum += Count(phi) * sign * binomial(n / d + p / d - 1, p / d) * binomial(n / d, k / d);
      }
      table.at(p, k) = exact_div(sum, n, "poincare_table_closed_form");
    }
  }
  return table;
}

CoeffTable poincare_table_series(const GroupSpec& group, const GroupElement& g, Int max_s,
                                 Int max_t) {
  require_bounds(group, g, max_s, max_t);
  const Int n = group.order();
  std::vector<std::vector<Count>> sum(static_cast<std::size_t>(max_s + 1),
                                      std::vector<Count>(static_cast<std::size_t>(max_t + 1), 0));
  for (Int d : divisors(n)) {
    const Int phi = character_sum(group, g, d);
    if (phi == 0) continue;
    // 1 - (-t)^d = 1 + (-1)^(d+1) t^d; raised to n/d this carries the
    // (-1)^(j + d j) sign on t^(dj), i.e. (-1)^(k + k/d) at k = dj
    Series exterior(static_cast<std::size_t>(max_t + 1), 0);
    exterior[0] = 1;
    if (d <= max_t) exterior[d] = d % 2 == 0 ? -1 : 1;
    // 1 / (1 - s^d) = 1 + s^d + s^(2d) + ...
    Series symmetric(static_cast<std::size_t>(max_s + 1), 0);
    for (Int i = 0; i <= max_s; i += d) symmetric[i] = 1;
    const Series ext = power_truncated(exterior, n / d);
    const Series sym = power_truncated(symmetric, n / d);
    for (Int p = 0; p <= max_s; ++p) {
      if (sym[p] == 0) continue;
      for (Int k = 0; k <= max_t; ++k) sum[p][k] += Count(phi) * sym[p] * ext[k];
    }
  }
  CoeffTable table(group, g, max_s, max_t);
  for (Int p = 0; p <= max_s; ++p) {
    for (Int k = 0; k <= max_t; ++k) {
      table.at(p, k) = exact_div(sum[p][k], n, "poincare_table_series");
    }
  }
  return table;
}

CoeffTable poincare_table(const GroupSpec& group, const GroupElement& g, Int max_s, Int max_t) {
  CoeffTable closed = poincare_table_closed_form(group, g, max_s, max_t);
  const CoeffTable series = poincare_table_series(group, g, max_s, max_t);
  for (Int p = 0; p <= max_s; ++p) {
    for (Int k = 0; k <= max_t; ++k) {
      ensure(closed.at(p, k) == series.at(p, k),
             "Poincare coefficient (" + std::to_string(p) + ", " + std::to_string(k) +
                 ") differs between closed form and series product");
    }
  }
  return closed;
}

namespace {

void check_table(const CoeffTable& table, const std::vector<std::vector<std::uint64_t>>& oracle,
                 Report& report) {
  const GroupSpec& group = table.group();
  const Int target = group.label(table.target());
  for (Int p = 0; p <= table.max_s(); ++p) {
    for (Int k = 0; k <= table.max_t(); ++k) {
      const Count& entry = table.at(p, k);
      const Count formula = count_pairs_coefficient(group, table.target(), p, k);
      const Count brute = oracle[p][k];
      ++report.scanned;
      if (entry != formula || entry != brute) {
        report.failures.push_back({{"group", group.to_string()},
                                   {"target", target},
                                   {"p", p},
                                   {"k", k},
                                   {"table", to_decimal(entry)},
                                   {"formula", to_decimal(formula)},
                                   {"oracle", to_decimal(brute)}});
      }
    }
  }
}

// oracle[p][k] for one target, from full pair histograms
std::vector<std::vector<std::vector<std::uint64_t>>> pair_histograms(const GroupSpec& group,
                                                                     Int max_s, Int max_t,
                                                                     std::uint64_t limit) {
  std::vector<std::vector<std::vector<std::uint64_t>>> h(
      static_cast<std::size_t>(max_s + 1),
      std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(max_t + 1)));
  for (Int p = 0; p <= max_s; ++p) {
    for (Int k = 0; k <= max_t; ++k) h[p][k] = pair_sum_histogram(group, p, k, limit);
  }
  return h;
}

std::vector<std::vector<std::uint64_t>> slice(
    const std::vector<std::vector<std::vector<std::uint64_t>>>& h, Int target) {
  std::vector<std::vector<std::uint64_t>> out(h.size());
  for (std::size_t p = 0; p < h.size(); ++p) {
    for (const auto& hist : h[p]) out[p].push_back(hist[target]);
  }
  return out;
}

}  // namespace

Report series_cross_check(const GroupSpec& group, const GroupElement& g, Int max_s, Int max_t,
                          std::uint64_t limit) {
  require_bounds(group, g, max_s, max_t);
  Report report;
  report.theorem = "poincare-series";
  const auto hist = pair_histograms(group, max_s, max_t, limit);
  check_table(poincare_table(group, g, max_s, max_t), slice(hist, group.label(g)), report);
  return report;
}

Report verify_series(Int max_order, Int max_s, Int max_t, std::uint64_t limit) {
  require(max_order >= 1, "verify_series: max_order must be positive");
  Report report;
  report.theorem = "poincare-series";
  for (const GroupSpec& group : groups_up_to_order(max_order)) {
    const auto hist = pair_histograms(group, max_s, max_t, limit);
    std::size_t mismatched_specialisations = 0;
    for (Int label = 0; label < group.order(); ++label) {
      const GroupElement g = group.unlabel(label);
      const CoeffTable table = poincare_table(group, g, max_s, max_t);
      check_table(table, slice(hist, label), report);
      for (Int p = 0; p <= max_s; ++p) {
        if (table.at(p, 0) != count_sequences(group, p, g)) ++mismatched_specialisations;
      }
      for (Int k = 0; k <= std::min(max_t, group.order()); ++k) {
        if (table.at(0, k) != count_subsets(group, k, g)) ++mismatched_specialisations;
      }
    }
    if (mismatched_specialisations) {
      report.failures.push_back({{"group", group.to_string()},
                                 {"reason", "row/column specialisation mismatch"},
                                 {"count", mismatched_specialisations}});
    }
    report.rows.push_back({{"group", group.to_string()},
                           {"targets", group.order()},
                           {"max_s", max_s},
                           {"max_t", max_t}});
  }
  return report;
}

}  // namespace zsr
