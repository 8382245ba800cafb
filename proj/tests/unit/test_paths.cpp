#include <gtest/gtest.h>

#include <numeric>

#include <set>

#include "brute.hpp"
#include "zsr/counting.hpp"
#include "zsr/error.hpp"
#include "zsr/oracle.hpp"
#include "zsr/paths.hpp"

using namespace zsr;

TEST(Paths, Validity) {
  const std::vector<Int> good{1, 1, 0};
  const std::vector<Int> bad{0, 1, 1};
  EXPECT_TRUE(is_dyck_gaps(3, 2, good));
  EXPECT_FALSE(is_dyck_gaps(3, 2, bad));
  const std::vector<Int> single{4};
  EXPECT_TRUE(is_dyck_gaps(1, 4, single));
  EXPECT_THROW(is_dyck_gaps(3, 2, std::vector<Int>{1, 1}), PreconditionError);
  EXPECT_THROW(is_dyck_gaps(4, 2, std::vector<Int>{2, 0, 0, 0}), PreconditionError);
  EXPECT_TRUE(is_dyck_steps(2, 3, parse_steps("00101")));
  EXPECT_FALSE(is_dyck_steps(2, 3, parse_steps("10010")));
  EXPECT_THROW(is_dyck_steps(3, 2, parse_steps("00101")), PreconditionError);
  EXPECT_THROW(DyckPath::from_gaps(3, 2, bad), PreconditionError);
}

TEST(Paths, GapAndStepFormsInterconvert) {
  for (const auto& path : enum_dyck(5, 7)) {
    const auto again = DyckPath::from_steps(5, 7, path.steps());
    EXPECT_EQ(again, path);
    EXPECT_EQ(DyckPath::from_gaps(5, 7, path.gaps()), path);
  }
}

TEST(Paths, EnumDyckCounts) {
  EXPECT_EQ(enum_dyck(3, 2).size(), 2u);
  EXPECT_EQ(enum_dyck(1, 6).size(), 1u);
  EXPECT_EQ(enum_dyck(7, 5).size(), 66u);
  for (Int a = 1; a <= 13; ++a) {
    for (Int b = 0; a + b <= 14; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto paths = enum_dyck(a, b);
      if (b >= 1) EXPECT_EQ(Count(paths.size()), rational_catalan(a, b)) << a << "," << b;
      EXPECT_EQ(paths.size(), brute::count_dyck_words(a, b)) << a << "," << b;
      std::set<std::string> words;
      for (const auto& p : paths) words.insert(format_steps(p.steps()));
      EXPECT_EQ(words.size(), paths.size());
      EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
    }
  }
  EXPECT_THROW(enum_dyck(20, 7), LimitExceeded);
}

TEST(Paths, SequenceToDyckOverC7) {
  const GroupSpec g = GroupSpec::cyclic(7);
  const auto res = sequence_to_dyck(MultiplicityVector::parse(g, "0,0,1,1,1,0,2"));
  EXPECT_EQ(res.value.gaps(), (std::vector<Int>{1, 1, 1, 0, 2, 0, 0}));
  EXPECT_EQ(res.shift, 2);

  const auto back = dyck_to_sequence(g, res.value);
  EXPECT_EQ(back.value.to_string(), "0,0,1,1,1,0,2");
  EXPECT_EQ(back.shift, 5);
}

TEST(Paths, MassInColumnZeroIsFixed) {
  const GroupSpec g = GroupSpec::cyclic(5);
  const auto res = sequence_to_dyck(MultiplicityVector::parse(g, "3,0,0,0,0"));
  EXPECT_EQ(res.shift, 0);
  EXPECT_EQ(res.value.gaps(), (std::vector<Int>{3, 0, 0, 0, 0}));
}

TEST(Paths, SubsetExamples) {
  const GroupSpec g = GroupSpec::cyclic(5);
  const auto res = subset_to_dyck(IndicatorVector::parse(g, "0,1,0,0,1"));
  EXPECT_EQ(format_steps(res.value.steps()), "00101");
  EXPECT_EQ(res.shift, 2);
  const auto back = dyck_to_subset(g, DyckPath::from_steps(2, 3, parse_steps("00101")));
  EXPECT_EQ(back.value.labels(), (std::vector<Int>{1, 4}));
  // k = 1: the only zero-sum singleton is {0}
  const GroupSpec c6 = GroupSpec::cyclic(6);
  const auto one = dyck_to_subset(c6, enum_dyck(1, 5).front());
  EXPECT_EQ(one.value.labels(), (std::vector<Int>{0}));
}

TEST(Paths, SequenceRoundTripsAndUniqueRotation) {
  for (const GroupSpec& g : groups_up_to_order(8)) {
    const Int n = g.order();
    for (Int m = 1; m <= 5; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const auto seqs = enum_sequences(g, m, g.identity());
      std::set<std::vector<Int>> images;
      for (const auto& s : seqs) {
        // scaled heights are pairwise distinct
        std::set<Int> heights;
        Int prefix = 0;
        for (Int i = 0; i < n; ++i) {
          heights.insert(n * prefix - m * i);
          prefix += s[i];
        }
        EXPECT_EQ(static_cast<Int>(heights.size()), n);

        const auto fwd = sequence_to_dyck(s);
        EXPECT_TRUE(is_dyck_gaps(n, m, fwd.value.gaps()));
        EXPECT_EQ(rotate_left(s.entries(), fwd.shift), fwd.value.gaps());
        const auto back = dyck_to_sequence(g, fwd.value);
        EXPECT_EQ(back.value, s);
        EXPECT_TRUE(is_zero_sum_congruences(back.value));
        images.insert(fwd.value.gaps());
      }
      const auto paths = enum_dyck(n, m);
      EXPECT_EQ(images.size(), paths.size());
      for (const auto& p : paths) {
        Int zero_rotations = 0;
        for (Int l = 0; l < n; ++l) {
          zero_rotations += is_zero_sum_congruences(g, rotate_left(p.gaps(), l));
        }
        EXPECT_EQ(zero_rotations, 1);
        EXPECT_EQ(sequence_to_dyck(dyck_to_sequence(g, p).value).value, p);
      }
    }
  }
}

TEST(Paths, SubsetRoundTrips) {
  for (const GroupSpec& g : groups_up_to_order(10)) {
    const Int n = g.order();
    for (Int k = 1; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      const auto subsets = enum_subsets(g, k, g.identity());
      for (const auto& a : subsets) {
        const auto fwd = subset_to_dyck(a);
        EXPECT_TRUE(is_dyck_steps(k, n - k, fwd.value.steps()));
        EXPECT_EQ(dyck_to_subset(g, fwd.value).value, a);
      }
      const auto paths = enum_dyck(k, n - k);
      EXPECT_EQ(paths.size(), subsets.size());
      for (const auto& p : paths) {
        const auto a = dyck_to_subset(g, p).value;
        EXPECT_TRUE(is_zero_sum_congruences(a));
        EXPECT_EQ(subset_to_dyck(a).value, p);
      }
    }
  }
}

TEST(Paths, RejectsBadInput) {
  const GroupSpec g = GroupSpec::cyclic(4);
  EXPECT_THROW(sequence_to_dyck(MultiplicityVector::parse(g, "2,0,0,0")), PreconditionError);
  EXPECT_THROW(sequence_to_dyck(MultiplicityVector::parse(g, "0,1,0,0")), PreconditionError);
}
