#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsr/numtheory.hpp"

namespace zsr {

/// An element of C_{n_1} + ... + C_{n_r}, stored by coordinates
/// (a_1, ..., a_r) with 0 <= a_i < n_i. Meaningless without its group.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Int> coords) : coords_(std::move(coords)) {}

  const std::vector<Int>& coords() const { return coords_; }
  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<Int> coords_;
};

/// A finite abelian group in invariant-factor form n_1 | n_2 | ... | n_r,
/// every n_i >= 2. The trivial group has no factors and order 1.
///
/// Elements are labelled in mixed radix, least significant digit first:
///   label(a) = a_r n_1...n_{r-1} + ... + a_2 n_1 + a_1.
/// Copies are cheap (shared immutable data).
class GroupSpec {
 public:
  /// Trivial group.
  GroupSpec();

  /// Canonical invariant-factor form of the direct sum of cyclic groups of
  /// the given orders. Factors equal to 1 are dropped; zero or negative
  /// factors are rejected.
  static GroupSpec normalize(std::span<const Int> factors);
  static GroupSpec normalize(std::initializer_list<Int> factors);
  static GroupSpec cyclic(Int n);

  /// Parses "2,2,4"; "" and "1" denote the trivial group.
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  std::span<const Int> invariant_factors() const { return data_->factors; }
  Int order() const { return data_->order; }
  std::size_t rank() const { return data_->factors.size(); }
  /// Largest invariant factor (1 for the trivial group).
  Int exponent() const;
  /// Divisors of the exponent, ascending; computed once per group.
  std::span<const Int> exponent_divisors() const { return data_->exponent_divisors; }

  Int label(const GroupElement& g) const;
  GroupElement unlabel(Int label) const;
  bool contains(const GroupElement& g) const;

  GroupElement identity() const;
  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement negate(const GroupElement& g) const;
  GroupElement multiply(Int k, const GroupElement& g) const;
  Int element_order(const GroupElement& g) const;

  /// Label arithmetic without materialising coordinates.
  Int add_labels(Int a, Int b) const;
  /// t-th mixed-radix digit (0-based) of a label.
  Int digit(Int label, std::size_t t) const;
  /// n_1 ... n_t (stride of digit t, 0-based).
  Int stride(std::size_t t) const { return data_->strides[t]; }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.data_ == b.data_ || a.data_->factors == b.data_->factors;
  }

 private:
  struct Data {
    std::vector<Int> factors;
    std::vector<Int> strides;
    Int order = 1;
    std::vector<Int> exponent_divisors;
  };
  explicit GroupSpec(std::vector<Int> canonical_factors);

  std::shared_ptr<const Data> data_;
};

/// Number of elements of order exactly d:
///   sum_{l | d} mu(d/l) prod_i (n_i, l).
/// Zero when d does not divide the exponent.
Int order_count(const GroupSpec& group, Int d);

/// Integer value of sum_{chi : ord(chi) = d} chi(g):
///   sum_{l | d, (n_i, l) | g_i for all i} mu(d/l) prod_i (n_i, l).
/// character_sum(G, 0, d) == order_count(G, d).
Int character_sum(const GroupSpec& group, const GroupElement& g, Int d);

/// Every abelian group of order n, one per isomorphism class, sorted by
/// invariant factors.
std::vector<GroupSpec> groups_of_order(Int n);

/// Every abelian group of order 1..max_order, by order then factors.
std::vector<GroupSpec> groups_up_to_order(Int max_order);

/// C_n^r.
GroupSpec power_of_cyclic(Int n, int r);

}  // namespace zsr
