#include <gtest/gtest.h>

#include <numeric>

#include <set>

#include "zsr/analysis.hpp"
#include "zsr/error.hpp"
#include "zsr/necklace.hpp"
#include "zsr/oracle.hpp"

using namespace zsr;

TEST(Necklace, CanonicalRotation) {
  EXPECT_EQ(Necklace::parse("BRR").to_string(), "RRB");
  EXPECT_EQ(Necklace::parse("GBR").to_string(), "RGB");
  EXPECT_EQ(Necklace::parse("BGR"), Necklace::parse("GRB"));
  EXPECT_EQ(Necklace::parse("RBRBB").count(Bead::Blue), 3u);
  EXPECT_THROW(Necklace::parse("RXB"), PreconditionError);
  EXPECT_EQ(least_rotation(std::vector<int>{2, 1, 3, 1, 2}), 3u);
}

TEST(Necklace, SevenRedFiveBlue) {
  const GroupSpec c7 = GroupSpec::cyclic(7);
  const GroupSpec c5 = GroupSpec::cyclic(5);
  const auto s = MultiplicityVector::parse(c7, "0,0,1,1,1,0,2");
  const Necklace necklace = sequence_to_necklace(s);
  EXPECT_EQ(necklace.to_string(), "RRRBRBRBRRBB");
  EXPECT_EQ(necklace.count(Bead::Red), 7u);
  EXPECT_EQ(necklace.count(Bead::Blue), 5u);
  EXPECT_EQ(necklace_to_sequence(c7, necklace).to_string(), "0,0,1,1,1,0,2");
  EXPECT_EQ(necklace_to_sequence(c5, necklace, Bead::Blue).to_string(), "1,2,0,3,1");
  EXPECT_EQ(reciprocity_bijection(c5, s).to_string(), "1,2,0,3,1");
  EXPECT_EQ(reciprocity_bijection(c7, MultiplicityVector::parse(c5, "1,2,0,3,1")), s);
}

TEST(Necklace, AnyRotationOfTheGapVectorGivesTheSameNecklace) {
  const GroupSpec c7 = GroupSpec::cyclic(7);
  const std::vector<Int> gaps{1, 0, 2, 0, 0, 1, 1};
  for (Int l = 0; l < 7; ++l) {
    std::string word;
    for (Int x : rotate_left(gaps, l)) word += "R" + std::string(static_cast<std::size_t>(x), 'B');
    const Necklace nk = Necklace::parse(word);
    EXPECT_EQ(nk, sequence_to_necklace(MultiplicityVector::parse(c7, "0,0,1,1,1,0,2")));
    EXPECT_EQ(necklace_to_sequence(c7, nk).to_string(), "0,0,1,1,1,0,2");
  }
}

TEST(Necklace, ReciprocityIsABijection) {
  const auto groups = groups_up_to_order(8);
  for (const GroupSpec& g : groups) {
    for (const GroupSpec& h : groups) {
      if (std::gcd(g.order(), h.order()) != 1) continue;
      const auto seqs = enum_sequences(g, h.order(), g.identity());
      std::set<std::string> images;
      for (const auto& s : seqs) {
        const auto t = reciprocity_bijection(h, s);
        EXPECT_EQ(t.length(), g.order());
        EXPECT_TRUE(is_zero_sum_congruences(t));
        EXPECT_EQ(reciprocity_bijection(g, t), s);
        images.insert(t.to_string());
      }
      EXPECT_EQ(images.size(), seqs.size());
      EXPECT_EQ(images.size(), enum_sequences(h, g.order(), h.identity()).size());
    }
  }
}

TEST(Necklace, TrivialGroupSide) {
  const GroupSpec one = GroupSpec::cyclic(1);
  const GroupSpec c4 = GroupSpec::cyclic(4);
  const auto s = MultiplicityVector::parse(one, "4");
  EXPECT_EQ(sequence_to_necklace(s).to_string(), "RBBBB");
  EXPECT_EQ(reciprocity_bijection(c4, s).to_string(), "1,0,0,0");
}

TEST(Necklace, ComplementExamples) {
  const GroupSpec c5 = GroupSpec::cyclic(5);
  EXPECT_EQ(complement_bijection(IndicatorVector::parse(c5, "0,1,0,0,1")).labels(),
            (std::vector<Int>{0, 2, 3}));
  const GroupSpec c4 = GroupSpec::cyclic(4);
  EXPECT_EQ(complement_bijection(IndicatorVector::parse(c4, "1,0,0,0")).labels(),
            (std::vector<Int>{0, 1, 3}));
  EXPECT_EQ(translate_complement_bijection(IndicatorVector::parse(c4, "0,1,0,1")).labels(),
            (std::vector<Int>{1, 3}));
  EXPECT_EQ(c4.label(complement_translation(c4, 2)), 1);
}

TEST(Necklace, ComplementIsAnInvolution) {
  for (const GroupSpec& g : groups_up_to_order(12)) {
    const Int n = g.order();
    for (Int k = 1; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      const auto subsets = enum_subsets(g, k, g.identity());
      std::set<std::string> images;
      for (const auto& a : subsets) {
        const auto b = complement_bijection(a);
        EXPECT_EQ(b.cardinality(), n - k);
        EXPECT_TRUE(is_zero_sum_congruences(b));
        EXPECT_EQ(complement_bijection(b), a);
        images.insert(b.to_string());
      }
      EXPECT_EQ(images.size(), subsets.size());
    }
  }
}

TEST(Necklace, TranslateComplementIsABijectionWhenDefined) {
  for (const GroupSpec& g : groups_up_to_order(12)) {
    const Int n = g.order();
    const bool sums_to_zero = sum_all_elements_is_zero(g);
    const Int top = g.invariant_factors().empty() ? 1 : g.invariant_factors().back();
    for (Int k = 1; k < n; ++k) {
      if (!sums_to_zero && v2(k) >= v2(top)) {
        EXPECT_THROW(complement_translation(g, k), PreconditionError);
        continue;
      }
      const auto subsets = enum_subsets(g, k, g.identity());
      std::set<std::string> images;
      for (const auto& a : subsets) {
        const auto b = translate_complement_bijection(a);
        EXPECT_EQ(b.cardinality(), n - k);
        EXPECT_TRUE(is_zero_sum_congruences(b)) << g.to_string() << " " << a.to_string();
        images.insert(b.to_string());
      }
      EXPECT_EQ(images.size(), subsets.size());
      EXPECT_EQ(images.size(), enum_subsets(g, n - k, g.identity()).size());
    }
  }
}

TEST(Necklace, PairBijection) {
  std::size_t configurations = 0;
  for (Int p = 1; p <= 3; ++p) {
    for (Int q = 0; q <= 3; ++q) {
      for (Int m = 0; m <= 3; ++m) {
        if (q + m == 0 || std::gcd(p, q + m) != 1 || std::gcd(q, p + m) != 1) continue;
        if (q + m > 6 || p + m > 6) continue;
        for (const GroupSpec& g : groups_of_order(q + m)) {
          for (const GroupSpec& h : groups_of_order(p + m)) {
            ++configurations;
            const auto pairs = enum_pairs(g, p, m, g.identity());
            std::set<std::string> images;
            for (const auto& pr : pairs) {
              const auto out = pair_bijection(h, pr);
              EXPECT_EQ(out.sequence.length(), q);
              EXPECT_EQ(out.subset.cardinality(), m);
              EXPECT_TRUE(sigma(out).is_identity());
              EXPECT_EQ(pair_bijection(g, out), pr);
              const Necklace nk = pair_necklace(pr);
              EXPECT_EQ(nk.count(Bead::Red), static_cast<std::size_t>(p));
              EXPECT_EQ(nk.count(Bead::Green), static_cast<std::size_t>(m));
              EXPECT_EQ(nk.count(Bead::Blue), static_cast<std::size_t>(q));
              images.insert(out.sequence.to_string() + "|" + out.subset.to_string());
            }
            EXPECT_EQ(images.size(), pairs.size());
            EXPECT_EQ(images.size(), enum_pairs(h, q, m, h.identity()).size());
          }
        }
      }
    }
  }
  EXPECT_GT(configurations, 20u);
}
