#include "zsr/group.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

#include "zsr/error.hpp"

namespace zsr {

bool GroupElement::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int a) { return a == 0; });
}

GroupSpec::GroupSpec() : GroupSpec(std::vector<Int>{}) {}

GroupSpec::GroupSpec(std::vector<Int> canonical_factors) {
  auto data = std::make_shared<Data>();
  data->factors = std::move(canonical_factors);
  data->strides.reserve(data->factors.size());
  Int order = 1;
  for (Int f : data->factors) {
    data->strides.push_back(order);
    order = checked_mul(order, f);
  }
  data->order = order;
  data->exponent_divisors = divisors(data->factors.empty() ? 1 : data->factors.back());
  data_ = std::move(data);
}

GroupSpec GroupSpec::normalize(std::span<const Int> factors) {
  std::vector<Int> f;
  for (Int x : factors) {
    require(x >= 1, "group factor must be a positive integer, got " + std::to_string(x));
    if (x > 1) f.push_back(x);
  }
  // (a_i, a_j) -> (gcd, lcm): afterwards a_i divides every later entry
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const Int g = std::gcd(f[i], f[j]);
      const Int l = checked_mul(f[i] / g, f[j]);
      f[i] = g;
      f[j] = l;
    }
  }
  std::erase(f, Int{1});
  return GroupSpec(std::move(f));
}

GroupSpec GroupSpec::normalize(std::initializer_list<Int> factors) {
  return normalize(std::span<const Int>(factors.begin(), factors.size()));
}

GroupSpec GroupSpec::cyclic(Int n) { return normalize({n}); }

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<Int> factors;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return GroupSpec();
  while (true) {
    const auto comma = text.find(',');
    const std::string_view tok = trim(text.substr(0, comma));
    Int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    require(ec == std::errc() && ptr == tok.data() + tok.size() && !tok.empty(),
            "malformed group '" + std::string(text) + "'");
    factors.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return normalize(factors);
}

std::string GroupSpec::to_string() const {
  if (data_->factors.empty()) return "1";
  std::string out;
  for (Int f : data_->factors) {
    if (!out.empty()) out += ',';
    out += std::to_string(f);
  }
  return out;
}

Int GroupSpec::exponent() const {
  return data_->factors.empty() ? 1 : data_->factors.back();
}

bool GroupSpec::contains(const GroupElement& g) const {
  const auto& c = g.coords();
  if (c.size() != rank()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= data_->factors[i]) return false;
  }
  return true;
}

Int GroupSpec::label(const GroupElement& g) const {
  require(contains(g), "element coordinates out of range for group " + to_string());
  Int l = 0;
  for (std::size_t i = 0; i < rank(); ++i) l += g.coords()[i] * data_->strides[i];
  return l;
}

GroupElement GroupSpec::unlabel(Int label) const {
  require(label >= 0 && label < order(), "label " + std::to_string(label) +
                                             " out of range for group " + to_string());
  std::vector<Int> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = label % data_->factors[i];
    label /= data_->factors[i];
  }
  return GroupElement(std::move(c));
}

GroupElement GroupSpec::identity() const { return GroupElement(std::vector<Int>(rank(), 0)); }

GroupElement GroupSpec::add(const GroupElement& g, const GroupElement& h) const {
  require(contains(g) && contains(h), "add: element not in group " + to_string());
  std::vector<Int> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = (g.coords()[i] + h.coords()[i]) % data_->factors[i];
  }
  return GroupElement(std::move(c));
}

GroupElement GroupSpec::negate(const GroupElement& g) const {
  require(contains(g), "negate: element not in group " + to_string());
  std::vector<Int> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = mod(-g.coords()[i], data_->factors[i]);
  return GroupElement(std::move(c));
}

GroupElement GroupSpec::multiply(Int k, const GroupElement& g) const {
  require(contains(g), "multiply: element not in group " + to_string());
  std::vector<Int> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const Int n = data_->factors[i];
    c[i] = mod(mod(k, n) * g.coords()[i], n);
  }
  return GroupElement(std::move(c));
}

Int GroupSpec::element_order(const GroupElement& g) const {
  require(contains(g), "element_order: element not in group " + to_string());
  Int ord = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const Int n = data_->factors[i];
    ord = std::lcm(ord, n / std::gcd(n, g.coords()[i]));
  }
  return ord;
}

Int GroupSpec::add_labels(Int a, Int b) const {
  Int out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const Int n = data_->factors[i];
    out += ((a % n + b % n) % n) * data_->strides[i];
    a /= n;
    b /= n;
  }
  return out;
}

Int GroupSpec::digit(Int label, std::size_t t) const {
  return (label / data_->strides[t]) % data_->factors[t];
}

namespace {

template <class Admit>
Int mobius_gcd_sum(const GroupSpec& group, Int d, Admit admit) {
  // callers guarantee d | exponent, so every l | d is an exponent divisor
  Int total = 0;
  for (Int l : group.exponent_divisors()) {
    if (l > d) break;
    if (d % l != 0) continue;
    const int mu = mobius(d / l);
    if (mu == 0 || !admit(l)) continue;
    Int prod = 1;
    for (Int n : group.invariant_factors()) prod *= std::gcd(n, l);
    total += mu * prod;
  }
  return total;
}

}  // namespace

Int order_count(const GroupSpec& group, Int d) {
  require(d >= 1, "order_count: d must be positive");
  if (group.exponent() % d != 0) return 0;
  return mobius_gcd_sum(group, d, [](Int) { return true; });
}

Int character_sum(const GroupSpec& group, const GroupElement& g, Int d) {
  require(d >= 1, "character_sum: d must be positive");
  require(group.contains(g), "character_sum: element not in group " + group.to_string());
  if (group.exponent() % d != 0) return 0;
  const auto factors = group.invariant_factors();
  return mobius_gcd_sum(group, d, [&](Int l) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (g.coords()[i] % std::gcd(factors[i], l) != 0) return false;
    }
    return true;
  });
}

namespace {

void partitions(int e, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> groups_of_order(Int n) {
  require(n >= 1, "groups_of_order: order must be positive");
  // per prime: every partition of its exponent gives a multiset of
  // prime-power cyclic factors
  std::vector<std::vector<std::vector<Int>>> per_prime;
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<Int>> choices;
    for (const auto& part : parts) {
      std::vector<Int> powers;
      for (int k : part) powers.push_back(checked_pow(p, k));
      choices.push_back(std::move(powers));
    }
    per_prime.push_back(std::move(choices));
  }
  std::map<std::vector<Int>, GroupSpec> unique;
  std::vector<Int> acc;
  std::function<void(std::size_t)> combine = [&](std::size_t i) {
    if (i == per_prime.size()) {
      GroupSpec g = GroupSpec::normalize(acc);
      const auto f = g.invariant_factors();
      unique.emplace(std::vector<Int>(f.begin(), f.end()), g);
      return;
    }
    for (const auto& powers : per_prime[i]) {
      const std::size_t mark = acc.size();
      acc.insert(acc.end(), powers.begin(), powers.end());
      combine(i + 1);
      acc.resize(mark);
    }
  };
  combine(0);
  std::vector<GroupSpec> out;
  for (auto& [key, g] : unique) out.push_back(g);
  return out;
}

std::vector<GroupSpec> groups_up_to_order(Int max_order) {
  std::vector<GroupSpec> out;
  for (Int n = 1; n <= max_order; ++n) {
    auto g = groups_of_order(n);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

GroupSpec power_of_cyclic(Int n, int r) {
  require(n >= 1 && r >= 0, "power_of_cyclic: need n >= 1, r >= 0");
  return GroupSpec::normalize(std::vector<Int>(static_cast<std::size_t>(r), n));
}

}  // namespace zsr
