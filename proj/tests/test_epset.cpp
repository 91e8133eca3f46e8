#include <gtest/gtest.h>

#include <random>

#include "ugk/epset.hpp"
#include "ugk/errors.hpp"

using ugk::EPSet;
using ugk::Natural;

namespace {

EPSet random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 5), per(1, 4), bit(0, 1);
  std::vector<bool> base(len(rng)), cycle(per(rng));
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = bit(rng);
  for (std::size_t i = 0; i < cycle.size(); ++i) cycle[i] = bit(rng);
  return EPSet(base, cycle);
}

constexpr Natural kProbe = 120;

}  // namespace

TEST(EPSet, CanonicalFormIsUnique) {
  EPSet a({true, false}, {true, false, true, false});
  EXPECT_EQ(a.period(), 2u);
  EXPECT_EQ(a.threshold(), 0u);
  EXPECT_EQ(a, EPSet::progression(0, 2));
  EXPECT_EQ(EPSet::cofinite({}), EPSet::all());
}

TEST(EPSet, WorkedExamples) {
  EXPECT_EQ(EPSet::progression(3, 2).intersect(EPSet::cofinite({5})),
            EPSet::singleton(3).unite(EPSet::progression(7, 2)));
  EXPECT_EQ(EPSet::progression(3, 1).affine_image(2, 1), EPSet::progression(7, 2));
  EXPECT_TRUE(EPSet::progression(3, 2).is_subset_of(EPSet::cofinite({4})));
  EXPECT_FALSE(EPSet::progression(3, 1).is_subset_of(EPSet::cofinite({4})));
}

TEST(EPSet, BooleanOpsMatchPointwise) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    EPSet a = random_set(rng), b = random_set(rng);
    EPSet u = a.unite(b), i = a.intersect(b), d = a.minus(b), c = a.complement();
    for (Natural n = 0; n < kProbe; ++n) {
      ASSERT_EQ(u.contains(n), a.contains(n) || b.contains(n));
      ASSERT_EQ(i.contains(n), a.contains(n) && b.contains(n));
      ASSERT_EQ(d.contains(n), a.contains(n) && !b.contains(n));
      ASSERT_EQ(c.contains(n), !a.contains(n));
    }
  }
}

TEST(EPSet, AffineMapsMatchPointwise) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    EPSet a = random_set(rng);
    Natural coef = rng() % 3;
    std::int64_t offset = static_cast<std::int64_t>(rng() % 5) - 2;
    EPSet pre = a.affine_preimage(coef, offset);
    for (Natural n = 0; n < kProbe; ++n) {
      std::int64_t v = static_cast<std::int64_t>(coef * n) + offset;
      ASSERT_EQ(pre.contains(n), v >= 0 && a.contains(static_cast<Natural>(v)));
    }
    if (a.is_empty() || static_cast<std::int64_t>(coef * *a.min()) + offset < 0) continue;
    EPSet img = a.affine_image(coef, offset);
    std::vector<bool> expect(kProbe * 3 + 10, false);
    for (Natural n = 0; n < kProbe * 3; ++n)
      if (a.contains(n)) {
        Natural v = static_cast<Natural>(static_cast<std::int64_t>(coef * n) + offset);
        if (v < expect.size()) expect[v] = true;
      }
    for (Natural m = 0; m < kProbe; ++m) ASSERT_EQ(img.contains(m), expect[m]) << a.to_string();
  }
}

TEST(EPSet, NegativeImageThrows) {
  EXPECT_THROW(EPSet::progression(0, 1).affine_image(1, -1), ugk::Error);
}

TEST(EPSet, QueriesAndEnumeration) {
  EPSet a = EPSet::finite({2, 5, 9});
  EXPECT_TRUE(a.is_finite());
  EXPECT_EQ(a.cardinality(), 3u);
  EXPECT_EQ(a.min(), 2u);
  EXPECT_EQ(a.max(), 9u);
  EXPECT_EQ(EPSet::progression(4, 3).first(3), (std::vector<Natural>{4, 7, 10}));
  EXPECT_EQ(EPSet::progression(4, 3).enumerate_up_to(11), (std::vector<Natural>{4, 7, 10}));
  EXPECT_FALSE(EPSet::all().cardinality().has_value());
  EXPECT_EQ(EPSet::interval(3, 6), EPSet::finite({3, 4, 5}));
}

TEST(EPSet, StringAndParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    EPSet a = random_set(rng);
    EXPECT_EQ(ugk::parse_epset(a.to_string()), a) << a.to_string();
  }
  EXPECT_EQ(EPSet::all().to_string(), "all");
  EXPECT_EQ(EPSet().to_string(), "{}");
  EXPECT_EQ(EPSet::progression(3, 1).to_string(), "ap(3,1)");
}

TEST(EPSet, ParserOperators) {
  EXPECT_EQ(ugk::parse_epset("ap(1,1) \\ {2}"), EPSet::cofinite({0, 2}));
  EXPECT_EQ(ugk::parse_epset("cof{0} & ap(0,2) | {1}"), EPSet::progression(2, 2).unite(EPSet::singleton(1)));
  EXPECT_EQ(ugk::parse_epset("(all \\ fin{1,2}) & empty"), EPSet());
  EXPECT_THROW(ugk::parse_epset("ap(1,0)"), ugk::ParseError);
  EXPECT_THROW(ugk::parse_epset("{1,"), ugk::ParseError);
}

TEST(EPSet, JsonRoundTrip) {
  EPSet a = ugk::parse_epset("{0,2} | ap(7,3)");
  EXPECT_EQ(EPSet::from_json(a.to_json()), a);
  auto j = a.to_json();
  j["threshold"] = 0;
  EXPECT_THROW(EPSet::from_json(j), ugk::Error);
}

TEST(EPSet, OrderingIsTotal) {
  EPSet a = EPSet::singleton(1), b = EPSet::singleton(2);
  EXPECT_NE(a <=> b, std::strong_ordering::equal);
  EXPECT_EQ(a <=> a, std::strong_ordering::equal);
}
