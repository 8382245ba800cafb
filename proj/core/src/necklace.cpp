#include "zsr/necklace.hpp"

#include <algorithm>
#include <numeric>

#include "zsr/analysis.hpp"
#include "zsr/numtheory.hpp"
#include "zsr/error.hpp"

namespace zsr {

namespace {

int bead_rank(Bead b) {
  switch (b) {
    case Bead::Red: return 0;
    case Bead::Green: return 1;
    case Bead::Blue: return 2;
  }
  return 3;
}

// word made of, for each gap g: one separator then g fill beads
template <class T>
std::vector<T> gaps_to_word(std::span<const Int> gaps, T separator, T fill) {
  std::vector<T> word;
  for (Int g : gaps) {
    word.push_back(separator);
    word.insert(word.end(), static_cast<std::size_t>(g), fill);
  }
  return word;
}

// positions of the beads satisfying `is_sep`, starting with the first one at
// or after `start` (cyclically)
template <class T, class Pred>
std::vector<std::size_t> separators_from(const std::vector<T>& word, std::size_t start,
                                         Pred is_sep) {
  std::vector<std::size_t> pos;
  const std::size_t n = word.size();
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t i = (start + j) % n;
    if (is_sep(word[i])) pos.push_back(i);
  }
  return pos;
}

// number of non-separator beads between consecutive separators
template <class T, class Pred>
std::vector<Int> gaps_after(const std::vector<T>& word, const std::vector<std::size_t>& seps,
                            Pred is_sep) {
  const std::size_t n = word.size();
  std::vector<Int> gaps;
  for (std::size_t sep : seps) {
    Int count = 0;
    std::size_t i = (sep + 1) % n;
    for (std::size_t steps = 0; steps + 1 < n && !is_sep(word[i]); ++steps) {
      ++count;
      i = (i + 1) % n;
    }
    gaps.push_back(count);
  }
  return gaps;
}

}  // namespace

Necklace::Necklace(std::vector<Bead> beads) {
  std::vector<int> keyed;
  keyed.reserve(beads.size());
  for (Bead b : beads) keyed.push_back(bead_rank(b));
  const std::size_t start = beads.empty() ? 0 : least_rotation(keyed);
  std::rotate(beads.begin(), beads.begin() + static_cast<std::ptrdiff_t>(start), beads.end());
  beads_ = std::move(beads);
}

Necklace Necklace::parse(std::string_view text) {
  std::vector<Bead> beads;
  for (char c : text) {
    require(c == 'R' || c == 'G' || c == 'B', "necklace beads must be R, G or B");
    beads.push_back(static_cast<Bead>(c));
  }
  return Necklace(std::move(beads));
}

std::size_t Necklace::count(Bead color) const {
  return static_cast<std::size_t>(std::count(beads_.begin(), beads_.end(), color));
}

std::string Necklace::to_string() const {
  std::string out;
  for (Bead b : beads_) out += static_cast<char>(b);
  return out;
}

Necklace sequence_to_necklace(const MultiplicityVector& s) {
  require(std::gcd(s.group().order(), s.length()) == 1,
          "sequence_to_necklace: need gcd(|G|, |S|) = 1");
  require(sigma(s).is_identity(), "sequence_to_necklace: sequence is not zero-sum");
  return Necklace(gaps_to_word(s.entries(), Bead::Red, Bead::Blue));
}

MultiplicityVector necklace_to_sequence(const GroupSpec& group, const Necklace& necklace,
                                        Bead separator) {
  require(separator != Bead::Green, "necklace_to_sequence reads two-colour necklaces");
  require(necklace.count(Bead::Green) == 0, "necklace_to_sequence: unexpected green bead");
  const Bead fill = separator == Bead::Red ? Bead::Blue : Bead::Red;
  const Int n = static_cast<Int>(necklace.count(separator));
  const Int m = static_cast<Int>(necklace.count(fill));
  require(n == group.order(), "necklace_to_sequence: separator count must equal |G|");
  require(std::gcd(n, m) == 1, "necklace_to_sequence: bead counts are not coprime");
  const auto& word = necklace.beads();
  const auto seps = separators_from(word, 0, [&](Bead b) { return b == separator; });
  const auto gaps = gaps_after(word, seps, [&](Bead b) { return b == separator; });
  return MultiplicityVector(group, rotate_left(gaps, staged_zero_sum_shift(group, gaps)));
}

MultiplicityVector reciprocity_bijection(const GroupSpec& other, const MultiplicityVector& s) {
  const GroupSpec& group = s.group();
  require(std::gcd(group.order(), other.order()) == 1,
          "reciprocity_bijection: group orders are not coprime");
  require(s.length() == other.order(), "reciprocity_bijection: |S| must equal |H|");
  return necklace_to_sequence(other, sequence_to_necklace(s), Bead::Blue);
}

IndicatorVector complement_bijection(const IndicatorVector& a) {
  const GroupSpec& group = a.group();
  const Int n = group.order();
  require(std::gcd(a.cardinality(), n) == 1, "complement_bijection: need gcd(k, |G|) = 1");
  require(sigma(a).is_identity(), "complement_bijection: subset is not zero-sum");
  std::vector<Int> comp(a.entries().begin(), a.entries().end());
  for (Int& b : comp) b = 1 - b;
  return IndicatorVector(group, rotate_left(comp, staged_zero_sum_shift(group, comp)));
}

GroupElement complement_translation(const GroupSpec& group, Int k) {
  if (sum_all_elements_is_zero(group)) return group.identity();
  require(k >= 1 && v2(k) < v2(group.exponent()),
          "translate_complement_bijection: need sum(G) = 0 or v2(k) < v2(n_r)");
  const GroupElement e = weighted_sum(group, std::vector<Int>(group.order(), 1));
  for (Int label = 0; label < group.order(); ++label) {
    GroupElement x = group.unlabel(label);
    if (group.multiply(k, x) == e) return x;
  }
  throw PreconditionError("translate_complement_bijection: no x with k x = e");
}

IndicatorVector translate_complement_bijection(const IndicatorVector& a) {
  const GroupSpec& group = a.group();
  require(sigma(a).is_identity(), "translate_complement_bijection: subset is not zero-sum");
  const GroupElement x = complement_translation(group, a.cardinality());
  std::vector<Int> comp(a.entries().begin(), a.entries().end());
  for (Int& b : comp) b = 1 - b;
  IndicatorVector out = group_translate(IndicatorVector(group, std::move(comp)), x);
  ensure(sigma(out).is_identity(), "translated complement is not zero-sum");
  return out;
}

namespace {

// three-colour word of the pair, listed from the canonical start of the
// red / non-red necklace
std::vector<Bead> pair_word(const SequenceSubsetPair& pair) {
  const auto x = pair.sequence.entries();
  const auto y = pair.subset.entries();
  // 'N' (non-red) < 'R' so the least rotation starts on a non-red bead
  std::vector<char> collapsed = gaps_to_word<char>(x, 'N', 'R');
  const std::size_t start = least_rotation(collapsed);
  const auto non_red = separators_from(collapsed, start, [](char c) { return c == 'N'; });
  std::vector<Bead> word(collapsed.size(), Bead::Red);
  for (std::size_t j = 0; j < non_red.size(); ++j) {
    word[non_red[j]] = y[j] ? Bead::Green : Bead::Blue;
  }
  std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(start), word.end());
  return word;
}

}  // namespace

Necklace pair_necklace(const SequenceSubsetPair& pair) { return Necklace(pair_word(pair)); }

SequenceSubsetPair pair_bijection(const GroupSpec& other, const SequenceSubsetPair& pair) {
  const GroupSpec& group = pair.sequence.group();
  require(pair.subset.group() == group, "pair_bijection: pair members over different groups");
  const Int p = pair.sequence.length();
  const Int m = pair.subset.cardinality();
  const Int q = group.order() - m;
  require(other.order() == p + m, "pair_bijection: |H| must equal p + m");
  require(std::gcd(p, q + m) == 1 && std::gcd(q, p + m) == 1,
          "pair_bijection: need gcd(p, q+m) = gcd(q, p+m) = 1");
  require(sigma(pair).is_identity(), "pair_bijection: sigma(A) + sigma(B) != 0");

  const std::vector<Bead> word = pair_word(pair);
  std::vector<char> collapsed(word.size());
  std::transform(word.begin(), word.end(), collapsed.begin(),
                 [](Bead b) { return b == Bead::Blue ? 'X' : 'N'; });
  const std::size_t start = least_rotation(collapsed);
  const auto non_blue = separators_from(collapsed, start, [](char c) { return c == 'N'; });
  const auto w = gaps_after(collapsed, non_blue, [](char c) { return c == 'N'; });
  std::vector<Int> v(non_blue.size());
  for (std::size_t j = 0; j < non_blue.size(); ++j) v[j] = word[non_blue[j]] == Bead::Green;

  IndicatorVector subset(other, std::move(v));
  const GroupElement target = other.negate(sigma(subset));
  const Int shift = staged_shift(other, w, target);
  SequenceSubsetPair out{MultiplicityVector(other, rotate_left(w, shift)), std::move(subset)};
  ensure(sigma(out).is_identity(), "pair_bijection image is not zero-sum");
  return out;
}

}  // namespace zsr
