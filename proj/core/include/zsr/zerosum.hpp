#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsr/group.hpp"

namespace zsr {

/// A sequence over G (unordered, repetition allowed) as the vector of
/// multiplicities x_0..x_{n-1}, indexed by element label.
class MultiplicityVector {
 public:
  MultiplicityVector(GroupSpec group, std::vector<Int> mults);
  static MultiplicityVector zeros(GroupSpec group);
  /// Comma-separated multiplicities, e.g. "0,0,1,1,1,0,2".
  static MultiplicityVector parse(GroupSpec group, std::string_view text);

  const GroupSpec& group() const { return group_; }
  std::span<const Int> entries() const { return mults_; }
  Int operator[](std::size_t label) const { return mults_[label]; }
  std::size_t size() const { return mults_.size(); }
  /// m = sum of multiplicities.
  Int length() const { return length_; }
  std::string to_string() const;

  friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) {
    return a.group_ == b.group_ && a.mults_ == b.mults_;
  }

 private:
  GroupSpec group_;
  std::vector<Int> mults_;
  Int length_ = 0;
};

/// A subset of G as a 0/1 vector indexed by element label.
class IndicatorVector {
 public:
  IndicatorVector(GroupSpec group, std::vector<Int> bits);
  static IndicatorVector from_labels(GroupSpec group, std::span<const Int> labels);
  static IndicatorVector parse(GroupSpec group, std::string_view text);

  const GroupSpec& group() const { return group_; }
  std::span<const Int> entries() const { return bits_; }
  Int operator[](std::size_t label) const { return bits_[label]; }
  std::size_t size() const { return bits_.size(); }
  Int cardinality() const { return cardinality_; }
  std::vector<Int> labels() const;
  std::string to_string() const;

  friend bool operator==(const IndicatorVector& a, const IndicatorVector& b) {
    return a.group_ == b.group_ && a.bits_ == b.bits_;
  }

 private:
  GroupSpec group_;
  std::vector<Int> bits_;
  Int cardinality_ = 0;
};

/// A length-p sequence A and a k-subset B over the same group.
struct SequenceSubsetPair {
  MultiplicityVector sequence;
  IndicatorVector subset;

  friend bool operator==(const SequenceSubsetPair&, const SequenceSubsetPair&) = default;
};

/// Parses a comma-separated list of integers; requires exactly `expected`
/// entries.
std::vector<Int> parse_int_list(std::string_view text, std::size_t expected);
std::string format_int_list(std::span<const Int> values);

/// sum_i w_i * element(i), computed through group addition on coordinates.
GroupElement weighted_sum(const GroupSpec& group, std::span<const Int> weights);
GroupElement sigma(const MultiplicityVector& s);
GroupElement sigma(const IndicatorVector& a);
GroupElement sigma(const SequenceSubsetPair& pair);

/// Zero-sum test through the per-digit congruences: for each digit t,
///   sum_k k * (total weight on labels whose t-th digit is k) == 0 mod n_t.
/// Independent of sigma(); both must agree.
bool is_zero_sum_congruences(const GroupSpec& group, std::span<const Int> weights);
bool is_zero_sum_congruences(const MultiplicityVector& s);
bool is_zero_sum_congruences(const IndicatorVector& a);

/// Left rotation: (x_l, ..., x_{n-1}, x_0, ..., x_{l-1}); l is taken mod n.
std::vector<Int> rotate_left(std::span<const Int> v, Int l);
MultiplicityVector cyclic_shift(const MultiplicityVector& s, Int l);
IndicatorVector cyclic_shift(const IndicatorVector& a, Int l);

/// g + S: the multiplicity at label(h + g) becomes the old multiplicity at
/// label(h).
MultiplicityVector group_translate(const MultiplicityVector& s, const GroupElement& g);
IndicatorVector group_translate(const IndicatorVector& a, const GroupElement& g);

/// Amount l such that rotate_left(weights, l) sums to `target`, found by
/// the staged shift: first solve sum_i i*x_i == target_1 (mod n), then fix
/// digit t = 2..r by rotating in steps of n_1...n_{t-1}, which leaves the
/// lower digits alone. Requires gcd(|G|, sum of weights) = 1; the answer is
/// then the unique such rotation.
Int staged_shift(const GroupSpec& group, std::span<const Int> weights, const GroupElement& target);
Int staged_zero_sum_shift(const GroupSpec& group, std::span<const Int> weights);

}  // namespace zsr
