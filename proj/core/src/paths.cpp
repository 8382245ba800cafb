#include "zsr/paths.hpp"

#include <algorithm>
#include <numeric>

#include "zsr/error.hpp"

namespace zsr {

namespace {

void require_endpoint(Int a, Int b) {
  require(a >= 1 && b >= 0, "Dyck endpoint needs a >= 1, b >= 0");
  require(std::gcd(a, b) == 1, "Dyck endpoint (" + std::to_string(a) + ", " + std::to_string(b) +
                                   ") is not coprime");
}

// min over i in [0, len) of scale * prefix_i - slope * i, returning its index;
// ties are impossible under coprimality and are reported as internal errors.
template <class PrefixAt>
Int unique_argmin(Int len, PrefixAt height_at) {
  Int best = 0;
  Int best_h = 0;
  bool tie = false;
  for (Int i = 1; i < len; ++i) {
    const Int h = height_at(i);
    if (h < best_h) {
      best = i;
      best_h = h;
      tie = false;
    } else if (h == best_h) {
      tie = true;
    }
  }
  ensure(!tie, "minimal path height is not unique");
  return best;
}

}  // namespace

StepWord parse_steps(std::string_view text) {
  StepWord out;
  for (char c : text) {
    require(c == '0' || c == '1', "step word must consist of '0' and '1'");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string format_steps(std::span<const std::uint8_t> steps) {
  std::string out;
  for (auto s : steps) out += static_cast<char>('0' + s);
  return out;
}

bool is_dyck_gaps(Int a, Int b, std::span<const Int> gaps) {
  require_endpoint(a, b);
  require(static_cast<Int>(gaps.size()) == a, "gap vector length must equal a");
  Int y = 0;
  for (Int g : gaps) {
    require(g >= 0, "gap entries must be non-negative");
    y += g;
  }
  require(y == b, "gap vector must sum to b");
  // the lowest point of column i is (i, x_0 + ... + x_{i-1}); those are the
  // only points that can dip below the line
  y = 0;
  for (Int i = 1; i < a; ++i) {
    y += gaps[i - 1];
    if (a * y < b * i) return false;
  }
  return true;
}

bool is_dyck_steps(Int a, Int b, std::span<const std::uint8_t> steps) {
  require_endpoint(a, b);
  require(static_cast<Int>(steps.size()) == a + b, "step word length must equal a + b");
  const auto east = std::count(steps.begin(), steps.end(), std::uint8_t{1});
  require(east == a, "step word must contain exactly a east steps");
  Int x = 0, y = 0;
  for (auto s : steps) {
    require(s <= 1, "steps must be 0 or 1");
    (s ? x : y) += 1;
    if (a * y < b * x) return false;
  }
  return true;
}

DyckPath DyckPath::from_gaps(Int a, Int b, std::vector<Int> gaps) {
  require(is_dyck_gaps(a, b, gaps), "gap vector is not an (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ")-Dyck path");
  return DyckPath(a, b, std::move(gaps));
}

DyckPath DyckPath::from_steps(Int a, Int b, std::span<const std::uint8_t> steps) {
  require(is_dyck_steps(a, b, steps), "step word is not an (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ")-Dyck path");
  // a valid path ends with an east step, so every north step belongs to a column
  std::vector<Int> gaps;
  Int run = 0;
  for (auto s : steps) {
    if (s) {
      gaps.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  ensure(run == 0, "Dyck step word does not end with an east step");
  return DyckPath(a, b, std::move(gaps));
}

StepWord DyckPath::steps() const {
  StepWord out;
  out.reserve(static_cast<std::size_t>(a_ + b_));
  for (Int g : gaps_) {
    out.insert(out.end(), static_cast<std::size_t>(g), std::uint8_t{0});
    out.push_back(1);
  }
  return out;
}

Shifted<DyckPath> sequence_to_dyck(const MultiplicityVector& s) {
  const GroupSpec& group = s.group();
  const Int n = group.order();
  const Int m = s.length();
  require(std::gcd(n, m) == 1, "sequence_to_dyck: need gcd(|G|, m) = 1");
  require(sigma(s).is_identity(), "sequence_to_dyck: sequence is not zero-sum");
  const auto x = s.entries();
  std::vector<Int> prefix(static_cast<std::size_t>(n), 0);
  for (Int i = 1; i < n; ++i) prefix[i] = prefix[i - 1] + x[i - 1];
  const Int lambda = unique_argmin(n, [&](Int i) { return n * prefix[i] - m * i; });
  return {DyckPath::from_gaps(n, m, rotate_left(x, lambda)), lambda};
}

Shifted<MultiplicityVector> dyck_to_sequence(const GroupSpec& group, const DyckPath& path) {
  require(path.width() == group.order(), "dyck_to_sequence: path width must equal |G|");
  const Int shift = staged_zero_sum_shift(group, path.gaps());
  MultiplicityVector out(group, rotate_left(path.gaps(), shift));
  ensure(is_zero_sum_congruences(out), "dyck_to_sequence produced a non-zero-sum sequence");
  return {std::move(out), shift};
}

Shifted<DyckPath> subset_to_dyck(const IndicatorVector& a) {
  const GroupSpec& group = a.group();
  const Int n = group.order();
  const Int k = a.cardinality();
  require(k >= 1 && std::gcd(k, n) == 1, "subset_to_dyck: need k >= 1 and gcd(k, |G|) = 1");
  require(sigma(a).is_identity(), "subset_to_dyck: subset is not zero-sum");
  const auto bits = a.entries();
  // height after j steps, scaled: k * (#north) - (n - k) * (#east)
  std::vector<Int> height(static_cast<std::size_t>(n), 0);
  for (Int j = 1; j < n; ++j) height[j] = height[j - 1] + (bits[j - 1] ? -(n - k) : k);
  const Int shift = unique_argmin(n, [&](Int j) { return height[j]; });
  const auto rotated = rotate_left(bits, shift);
  StepWord steps(rotated.begin(), rotated.end());
  return {DyckPath::from_steps(k, n - k, steps), shift};
}

Shifted<IndicatorVector> dyck_to_subset(const GroupSpec& group, const DyckPath& path) {
  require(path.width() + path.height() == group.order(),
          "dyck_to_subset: a + b must equal |G|");
  const StepWord steps = path.steps();
  const std::vector<Int> bits(steps.begin(), steps.end());
  const Int shift = staged_zero_sum_shift(group, bits);
  IndicatorVector out(group, rotate_left(bits, shift));
  ensure(is_zero_sum_congruences(out), "dyck_to_subset produced a non-zero-sum subset");
  return {std::move(out), shift};
}

std::vector<DyckPath> enum_dyck(Int a, Int b, Int limit) {
  require_endpoint(a, b);
  if (a + b > limit) {
    throw LimitExceeded("enum_dyck: a + b = " + std::to_string(a + b) + " exceeds limit " +
                        std::to_string(limit));
  }
  std::vector<DyckPath> out;
  StepWord word;
  word.reserve(static_cast<std::size_t>(a + b));
  auto rec = [&](auto&& self, Int x, Int y) -> void {
    if (x == a && y == b) {
      out.push_back(DyckPath::from_steps(a, b, word));
      return;
    }
    if (y < b) {  // north first: 0 < 1
      word.push_back(0);
      self(self, x, y + 1);
      word.pop_back();
    }
    if (x < a && a * y >= b * (x + 1)) {
      word.push_back(1);
      self(self, x + 1, y);
      word.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace zsr
