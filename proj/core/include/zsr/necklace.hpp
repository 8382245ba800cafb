#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zsr/zerosum.hpp"

namespace zsr {

enum class Bead : char { Red = 'R', Green = 'G', Blue = 'B' };

/// A cyclic word of beads, stored as its lexicographically least rotation
/// with Red < Green < Blue.
class Necklace {
 public:
  explicit Necklace(std::vector<Bead> beads);
  /// Parses a string over {R, G, B}; any rotation is accepted.
  static Necklace parse(std::string_view text);

  const std::vector<Bead>& beads() const { return beads_; }
  std::size_t size() const { return beads_.size(); }
  std::size_t count(Bead color) const;
  std::string to_string() const;

  friend bool operator==(const Necklace&, const Necklace&) = default;

 private:
  std::vector<Bead> beads_;
};

/// Index where the lexicographically least rotation of `word` starts
/// (first such index for periodic words). Quadratic; words here are short.
template <class T>
std::size_t least_rotation(const std::vector<T>& word) {
  const std::size_t n = word.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const T& a = word[(i + j) % n];
      const T& b = word[(best + j) % n];
      if (a < b) {
        best = i;
        break;
      }
      if (b < a) break;
    }
  }
  return best;
}

/// Necklace with one red bead per element of G followed by x_i blue beads,
/// i.e. the blue-gap vector read from some red bead is S.
/// Requires sigma(S) = 0 and gcd(|G|, |S|) = 1.
Necklace sequence_to_necklace(const MultiplicityVector& s);

/// Reads the gaps of the other color between consecutive `separator` beads
/// (as many separators as |G|) starting from any separator, then takes the
/// unique zero-sum rotation. Independent of the starting bead.
MultiplicityVector necklace_to_sequence(const GroupSpec& group, const Necklace& necklace,
                                        Bead separator = Bead::Red);

/// M(G, |H|) -> M(H, |G|) for coprime orders: build the necklace of S, read
/// the red gaps between blue beads as a sequence over H, rotate to zero sum.
/// reciprocity_bijection(G, T) inverts reciprocity_bijection(H, S).
MultiplicityVector reciprocity_bijection(const GroupSpec& other, const MultiplicityVector& s);

/// N(G, k) -> N(G, n-k) for gcd(k, n) = 1: complement, then the unique
/// zero-sum rotation. Applied twice it is the identity.
IndicatorVector complement_bijection(const IndicatorVector& a);

/// N(G, k) -> N(G, n-k) by B = x + (G \ A) with k x = e, where e = sum of all
/// elements. Needs sum(G) = 0 (then x = 0) or v2(k) < v2(n_r); the x with
/// the smallest label is used.
IndicatorVector translate_complement_bijection(const IndicatorVector& a);

/// Translation x used by translate_complement_bijection for size k.
GroupElement complement_translation(const GroupSpec& group, Int k);

/// Zero-sum pairs (A, B) over G, |A| = p, |B| = m, |G| = q + m, to zero-sum
/// pairs (U, V) over H, |U| = q, |V| = m, |H| = p + m. Needs
/// gcd(p, q+m) = gcd(q, p+m) = 1.
///
/// The pair is placed on a three-colour necklace (p red, m green, q blue):
/// A gives the red runs between the q+m non-red beads, and B colours those
/// beads green or blue starting from the canonical start of the red/non-red
/// necklace. On the other side the blue runs between the p+m non-blue beads,
/// read from the canonical start of the blue/non-blue necklace, give W and
/// the green beads among them give V. U is the unique rotation of W with
/// sigma(U) + sigma(V) = 0. Swapping (G, p) with (H, q) gives the inverse.
SequenceSubsetPair pair_bijection(const GroupSpec& other, const SequenceSubsetPair& pair);

/// The intermediate three-colour necklace of pair_bijection.
Necklace pair_necklace(const SequenceSubsetPair& pair);

}  // namespace zsr
