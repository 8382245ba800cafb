#include "zsr/zerosum.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "zsr/error.hpp"

namespace zsr {

std::vector<Int> parse_int_list(std::string_view text, std::size_t expected) {
  std::vector<Int> out;
  const std::string where = "'" + std::string(text) + "'";
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    require(!tok.empty() && ec == std::errc() && ptr == tok.data() + tok.size(),
            "malformed integer list " + where);
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    require(!text.empty(), "malformed integer list " + where);
  }
  require(out.size() == expected, "expected " + std::to_string(expected) + " entries, got " +
                                      std::to_string(out.size()) + " in " + where);
  return out;
}

std::string format_int_list(std::span<const Int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

MultiplicityVector::MultiplicityVector(GroupSpec group, std::vector<Int> mults)
    : group_(std::move(group)), mults_(std::move(mults)) {
  require(static_cast<Int>(mults_.size()) == group_.order(),
          "multiplicity vector has length " + std::to_string(mults_.size()) +
              ", group order is " + std::to_string(group_.order()));
  for (Int x : mults_) {
    require(x >= 0, "multiplicities must be non-negative");
    length_ += x;
  }
}

MultiplicityVector MultiplicityVector::zeros(GroupSpec group) {
  const auto n = static_cast<std::size_t>(group.order());
  return MultiplicityVector(std::move(group), std::vector<Int>(n, 0));
}

MultiplicityVector MultiplicityVector::parse(GroupSpec group, std::string_view text) {
  auto v = parse_int_list(text, static_cast<std::size_t>(group.order()));
  return MultiplicityVector(std::move(group), std::move(v));
}

std::string MultiplicityVector::to_string() const { return format_int_list(mults_); }

IndicatorVector::IndicatorVector(GroupSpec group, std::vector<Int> bits)
    : group_(std::move(group)), bits_(std::move(bits)) {
  require(static_cast<Int>(bits_.size()) == group_.order(),
          "indicator vector has length " + std::to_string(bits_.size()) + ", group order is " +
              std::to_string(group_.order()));
  for (Int b : bits_) {
    require(b == 0 || b == 1, "indicator entries must be 0 or 1");
    cardinality_ += b;
  }
}

IndicatorVector IndicatorVector::from_labels(GroupSpec group, std::span<const Int> labels) {
  std::vector<Int> bits(static_cast<std::size_t>(group.order()), 0);
  for (Int l : labels) {
    require(l >= 0 && l < group.order(), "subset label out of range");
    require(bits[l] == 0, "duplicate label in subset");
    bits[l] = 1;
  }
  return IndicatorVector(std::move(group), std::move(bits));
}

IndicatorVector IndicatorVector::parse(GroupSpec group, std::string_view text) {
  auto v = parse_int_list(text, static_cast<std::size_t>(group.order()));
  return IndicatorVector(std::move(group), std::move(v));
}

std::vector<Int> IndicatorVector::labels() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Int>(i));
  }
  return out;
}

std::string IndicatorVector::to_string() const { return format_int_list(bits_); }

GroupElement weighted_sum(const GroupSpec& group, std::span<const Int> weights) {
  require(static_cast<Int>(weights.size()) == group.order(), "weight vector length mismatch");
  GroupElement acc = group.identity();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) continue;
    acc = group.add(acc, group.multiply(weights[i], group.unlabel(static_cast<Int>(i))));
  }
  return acc;
}

GroupElement sigma(const MultiplicityVector& s) { return weighted_sum(s.group(), s.entries()); }
GroupElement sigma(const IndicatorVector& a) { return weighted_sum(a.group(), a.entries()); }

GroupElement sigma(const SequenceSubsetPair& pair) {
  require(pair.sequence.group() == pair.subset.group(), "pair members over different groups");
  return pair.sequence.group().add(sigma(pair.sequence), sigma(pair.subset));
}

bool is_zero_sum_congruences(const GroupSpec& group, std::span<const Int> weights) {
  require(static_cast<Int>(weights.size()) == group.order(), "weight vector length mismatch");
  const auto factors = group.invariant_factors();
  for (std::size_t t = 0; t < factors.size(); ++t) {
    const Int nt = factors[t];
    const Int stride = group.stride(t);
    // column sums: weight carried by labels whose t-th digit equals k
    std::vector<Int> column(static_cast<std::size_t>(nt), 0);
    for (std::size_t label = 0; label < weights.size(); ++label) {
      const Int k = (static_cast<Int>(label) / stride) % nt;
      column[k] = (column[k] + weights[label]) % nt;
    }
    Int acc = 0;
    for (Int k = 0; k < nt; ++k) acc = (acc + k * column[k]) % nt;
    if (acc != 0) return false;
  }
  return true;
}

bool is_zero_sum_congruences(const MultiplicityVector& s) {
  return is_zero_sum_congruences(s.group(), s.entries());
}

bool is_zero_sum_congruences(const IndicatorVector& a) {
  return is_zero_sum_congruences(a.group(), a.entries());
}

std::vector<Int> rotate_left(std::span<const Int> v, Int l) {
  std::vector<Int> out(v.begin(), v.end());
  if (out.empty()) return out;
  const Int n = static_cast<Int>(out.size());
  std::rotate(out.begin(), out.begin() + mod(l, n), out.end());
  return out;
}

MultiplicityVector cyclic_shift(const MultiplicityVector& s, Int l) {
  return MultiplicityVector(s.group(), rotate_left(s.entries(), l));
}

IndicatorVector cyclic_shift(const IndicatorVector& a, Int l) {
  return IndicatorVector(a.group(), rotate_left(a.entries(), l));
}

namespace {

std::vector<Int> translate_entries(const GroupSpec& group, std::span<const Int> v,
                                   const GroupElement& g) {
  const Int shift = group.label(g);
  std::vector<Int> out(v.size(), 0);
  for (std::size_t h = 0; h < v.size(); ++h) {
    out[group.add_labels(static_cast<Int>(h), shift)] = v[h];
  }
  return out;
}

}  // namespace

MultiplicityVector group_translate(const MultiplicityVector& s, const GroupElement& g) {
  return MultiplicityVector(s.group(), translate_entries(s.group(), s.entries(), g));
}

IndicatorVector group_translate(const IndicatorVector& a, const GroupElement& g) {
  return IndicatorVector(a.group(), translate_entries(a.group(), a.entries(), g));
}

Int staged_shift(const GroupSpec& group, std::span<const Int> weights, const GroupElement& target) {
  const Int n = group.order();
  require(static_cast<Int>(weights.size()) == n, "weight vector length mismatch");
  require(group.contains(target), "shift target not in group " + group.to_string());
  const Int total = std::accumulate(weights.begin(), weights.end(), Int{0});
  require(std::gcd(n, total) == 1, "staged shift needs gcd(|G|, length) = 1, got |G| = " +
                                       std::to_string(n) + ", length = " + std::to_string(total));
  if (n == 1) return 0;
  const auto factors = group.invariant_factors();
  const auto& tau = target.coords();

  // Rotating left by l sends label i to i - l, so every weighted digit sum
  // drops by l * total (mod the digit's modulus).
  Int alpha = 0;
  for (Int i = 0; i < n; ++i) alpha = mod(alpha + mod(i * weights[i], n), n);
  const Int l0 = mod(mod(alpha - tau[0], n) * mod_inverse(total, n), n);
  Int amount = l0;
  std::vector<Int> current = rotate_left(weights, l0);

  for (std::size_t t = 1; t < factors.size(); ++t) {
    const Int nt = factors[t];
    Int alpha_t = 0;
    for (Int label = 0; label < n; ++label) {
      alpha_t = mod(alpha_t + group.digit(label, t) * mod(current[label], nt), nt);
    }
    const Int lt = mod(mod(alpha_t - tau[t], nt) * mod_inverse(total, nt), nt);
    const Int step = lt * group.stride(t);
    current = rotate_left(current, step);
    amount = mod(amount + step, n);
  }
  ensure(weighted_sum(group, current) == target, "staged shift did not reach its target");
  return amount;
}

Int staged_zero_sum_shift(const GroupSpec& group, std::span<const Int> weights) {
  return staged_shift(group, weights, group.identity());
}

}  // namespace zsr
