#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "zsr/error.hpp"
#include "zsr/group.hpp"

using namespace zsr;

namespace {
std::vector<Int> factors_of(const GroupSpec& g) {
  return {g.invariant_factors().begin(), g.invariant_factors().end()};
}
}  // namespace

TEST(Group, NormalizeToInvariantFactors) {
  EXPECT_EQ(GroupSpec::normalize({6, 4}).to_string(), "2,12");
  EXPECT_EQ(GroupSpec::normalize({2, 3}).to_string(), "6");
  EXPECT_EQ(GroupSpec::normalize({1, 1}).to_string(), "1");
  EXPECT_EQ(GroupSpec::normalize({4, 2, 2}).to_string(), "2,2,4");
  EXPECT_EQ(GroupSpec::parse("3,2"), GroupSpec::parse("6"));
  EXPECT_EQ(GroupSpec::parse("").order(), 1);
  EXPECT_THROW(GroupSpec::parse("2,x"), PreconditionError);
  EXPECT_THROW(GroupSpec::parse("0"), PreconditionError);
}

TEST(Group, LabelsFollowMixedRadix) {
  const GroupSpec g = GroupSpec::parse("2,6");
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.label(GroupElement({1, 0})), 1);
  EXPECT_EQ(g.label(GroupElement({0, 1})), 2);
  EXPECT_EQ(g.label(GroupElement({1, 5})), 11);
  for (Int l = 0; l < g.order(); ++l) {
    EXPECT_EQ(g.label(g.unlabel(l)), l);
    EXPECT_EQ(brute::label_of(factors_of(g), g.unlabel(l).coords()), l);
  }
  EXPECT_THROW(g.unlabel(12), PreconditionError);
}

TEST(Group, ArithmeticAxioms) {
  for (const GroupSpec& g : groups_up_to_order(12)) {
    const Int n = g.order();
    for (Int a = 0; a < n; ++a) {
      const GroupElement x = g.unlabel(a);
      EXPECT_TRUE(g.add(x, g.negate(x)).is_identity());
      EXPECT_TRUE(g.multiply(n, x).is_identity());
      EXPECT_EQ(g.element_order(x), brute::element_order(factors_of(g), x.coords()));
      for (Int b = 0; b < n; ++b) {
        const GroupElement y = g.unlabel(b);
        EXPECT_EQ(g.add(x, y), g.add(y, x));
        EXPECT_EQ(g.add_labels(a, b), g.label(g.add(x, y)));
      }
    }
  }
}

TEST(Group, DigitsAndStrides) {
  const GroupSpec g = GroupSpec::parse("2,2,4");
  EXPECT_EQ(g.stride(0), 1);
  EXPECT_EQ(g.stride(1), 2);
  EXPECT_EQ(g.stride(2), 4);
  EXPECT_EQ(g.digit(13, 0), 1);
  EXPECT_EQ(g.digit(13, 1), 0);
  EXPECT_EQ(g.digit(13, 2), 3);
}

TEST(Group, CountsOfAbelianGroups) {
  // number of partitions of each prime exponent, multiplied
  const std::map<Int, std::size_t> expect{{1, 1}, {2, 1}, {4, 2},  {8, 3},  {12, 2},
                                          {16, 5}, {24, 3}, {32, 7}, {36, 4}, {72, 6}};
  for (auto [n, count] : expect) EXPECT_EQ(groups_of_order(n).size(), count) << n;
  std::set<std::string> names;
  for (const auto& g : groups_up_to_order(16)) names.insert(g.to_string());
  EXPECT_EQ(names.size(), groups_up_to_order(16).size());
}

TEST(Group, PowerOfCyclic) {
  EXPECT_EQ(power_of_cyclic(6, 2).to_string(), "6,6");
  EXPECT_EQ(power_of_cyclic(3, 1).to_string(), "3");
}

TEST(Group, OrderCountMatchesDirectCount) {
  for (const GroupSpec& g : groups_up_to_order(24)) {
    Int total = 0;
    for (Int d = 1; d <= g.order(); ++d) {
      const Int phi = order_count(g, d);
      EXPECT_EQ(phi, brute::count_of_order(factors_of(g), d)) << g.to_string() << " d=" << d;
      total += phi;
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(Group, CharacterSumMatchesCharacters) {
  for (const GroupSpec& g : groups_up_to_order(16)) {
    for (Int l = 0; l < g.order(); ++l) {
      const GroupElement x = g.unlabel(l);
      for (Int d : divisors(g.order())) {
        EXPECT_EQ(character_sum(g, x, d), brute::character_sum(factors_of(g), x.coords(), d))
            << g.to_string() << " g=" << l << " d=" << d;
      }
    }
    EXPECT_EQ(character_sum(g, g.identity(), g.exponent()), order_count(g, g.exponent()));
  }
}

TEST(Group, CharacterSumsCancelOverG) {
  for (const GroupSpec& g : groups_up_to_order(24)) {
    for (Int d : divisors(g.order())) {
      Int sum = 0;
      for (Int l = 0; l < g.order(); ++l) sum += character_sum(g, g.unlabel(l), d);
      EXPECT_EQ(sum, d == 1 ? g.order() : 0) << g.to_string() << " d=" << d;
    }
  }
}
