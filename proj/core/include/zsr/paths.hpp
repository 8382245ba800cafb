#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsr/zerosum.hpp"

namespace zsr {

/// Unit step of a lattice path: 0 is (0,1) (north), 1 is (1,0) (east).
using StepWord = std::vector<std::uint8_t>;

StepWord parse_steps(std::string_view text);
std::string format_steps(std::span<const std::uint8_t> steps);

/// Every lattice point (x, y) of the path satisfies a*y >= b*x. Malformed
/// encodings (wrong length or total, non-coprime endpoint) throw.
bool is_dyck_gaps(Int a, Int b, std::span<const Int> gaps);
bool is_dyck_steps(Int a, Int b, std::span<const std::uint8_t> steps);

/// A rational (a, b)-Dyck path from (0,0) to (a,b), gcd(a, b) = 1, staying
/// weakly above y = (b/a) x. Stored in gap form: gaps[i] is the number of
/// north steps taken in column i, so (i, gaps[0] + ... + gaps[i]) is the
/// highest point of column i.
class DyckPath {
 public:
  static DyckPath from_gaps(Int a, Int b, std::vector<Int> gaps);
  static DyckPath from_steps(Int a, Int b, std::span<const std::uint8_t> steps);

  Int width() const { return a_; }
  Int height() const { return b_; }
  const std::vector<Int>& gaps() const { return gaps_; }
  StepWord steps() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  DyckPath(Int a, Int b, std::vector<Int> gaps) : a_(a), b_(b), gaps_(std::move(gaps)) {}
  Int a_ = 1;
  Int b_ = 0;
  std::vector<Int> gaps_;
};

/// A bijection image plus the left-rotation amount that produced it, so
/// each step can be replayed: image = rotate_left(input, shift).
template <class T>
struct Shifted {
  T value;
  Int shift = 0;
};

/// Zero-sum sequence of length m over G, gcd(|G|, m) = 1, to the unique
/// Dyck rotation of its multiplicity vector. The rotation point is the
/// argmin of the scaled heights n*(x_0 + ... + x_{i-1}) - m*i over
/// i in [0, n-1], which are pairwise distinct.
Shifted<DyckPath> sequence_to_dyck(const MultiplicityVector& s);

/// Inverse: the unique zero-sum rotation of the path's gap vector, found by
/// the staged shift.
Shifted<MultiplicityVector> dyck_to_sequence(const GroupSpec& group, const DyckPath& path);

/// Zero-sum k-subset, gcd(k, |G|) = 1, to the unique (k, n-k)-Dyck rotation
/// of its indicator read as a step word.
Shifted<DyckPath> subset_to_dyck(const IndicatorVector& a);

Shifted<IndicatorVector> dyck_to_subset(const GroupSpec& group, const DyckPath& path);

inline constexpr Int kDefaultDyckLimit = 24;

/// All (a, b)-Dyck paths in lexicographic order of step words (0 < 1).
/// Throws LimitExceeded when a + b > limit.
std::vector<DyckPath> enum_dyck(Int a, Int b, Int limit = kDefaultDyckLimit);

}  // namespace zsr
