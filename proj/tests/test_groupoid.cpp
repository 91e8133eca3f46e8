#include <gtest/gtest.h>

#include "ugk/dsl.hpp"
#include "ugk/errors.hpp"
#include "ugk/fullgroup.hpp"
#include "ugk/oracle.hpp"

using namespace ugk;

namespace {

Ultragraph fixture(const std::string& name) {
  return Ultragraph(load_presentation(std::string(UGK_FIXTURES) + "/" + name + ".ug"));
}

EdgeRef edge(const Ultragraph& g, const std::string& name, Natural index = 0) {
  return {*g.find_schema(name), index};
}

}  // namespace

TEST(Bisection, SourceRangeAndApply) {
  Ultragraph g = fixture("paper_example");
  EdgeRef e1 = edge(g, "e1"), en3 = edge(g, "en", 3);
  Bisection z = make_bisection(g, {e1}, {en3}, EPSet::singleton(1));
  EXPECT_EQ(source(g, z).to_string(g), "D(en[3]; {1}; {})");
  EXPECT_EQ(range(g, z).to_string(g), "D(e1; {1}; {})");
  auto x = BoundaryPoint::finite({en3, e1}, 0);
  EXPECT_EQ(apply(g, z, x), BoundaryPoint::finite({e1, e1}, 0));
  EXPECT_THROW(apply(g, z, BoundaryPoint::finite({e1}, 0)), UndefinedError);
  EXPECT_EQ(apply(g, inverse(z), apply(g, z, x)), x);
  EXPECT_EQ(to_string(g, z), "Z(e1; en[3]; {1}; {})");
}

TEST(Bisection, CompositionMatchesPointwise) {
  Ultragraph g = fixture("kwinf_a");
  EdgeRef a = edge(g, "a"), b = edge(g, "b"), c = edge(g, "c");
  Bisection u = make_bisection(g, {a}, {b, c}, EPSet::singleton(0));
  Bisection v = make_bisection(g, {b, c}, {a, a}, EPSet::singleton(0));
  auto uv = compose(g, u, v);
  ASSERT_TRUE(uv.has_value());
  auto t = oracle::materialize(g, 8);
  for (const auto& x : oracle::point_enum(g, t, 5)) {
    if (!source(g, *uv).contains(g, x)) continue;
    EXPECT_EQ(apply(g, *uv, x), apply(g, u, apply(g, v, x)));
  }
  EXPECT_FALSE(compose(g, v, v).has_value());
}

TEST(FullGroup, GroupLawsOnRandomElements) {
  for (const char* name : {"paper_example", "kwinf_a", "kwinf_c"}) {
    Ultragraph g = fixture(name);
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      auto a = random_element(g, seed), b = random_element(g, seed + 100), c = random_element(g, seed + 200);
      EXPECT_TRUE(equals(g, compose(g, a, compose(g, b, c)), compose(g, compose(g, a, b), c))) << name;
      EXPECT_TRUE(compose(g, a, inverse(a)).is_identity()) << name;
      EXPECT_TRUE(equals(g, compose(g, a, FullGroupElement::identity()), a)) << name;
    }
  }
}

TEST(FullGroup, PiHatIsAnInvolution) {
  Ultragraph g = fixture("paper_example");
  EdgeRef e1 = edge(g, "e1"), en3 = edge(g, "en", 3);
  auto p = pi_hat(g, {make_bisection(g, {e1}, {en3}, EPSet::singleton(1))});
  EXPECT_FALSE(p.is_identity());
  EXPECT_TRUE(compose(g, p, p).is_identity());
  EXPECT_EQ(order(g, p), 2u);
  auto x = BoundaryPoint::finite({en3, e1}, 0);
  EXPECT_TRUE(p.support(g).contains(g, x));
  EXPECT_FALSE(p.support(g).contains(g, BoundaryPoint::finite({}, 0)));
  EXPECT_THROW(pi_hat(g, {make_bisection(g, {e1}, {e1, e1}, EPSet::singleton(1))}), PreconditionViolated);
}

TEST(FullGroup, CommutatorOfOverlappingSwapsHasOrderThree) {
  Ultragraph g = fixture("kwinf_a");
  EdgeRef a = edge(g, "a"), b = edge(g, "b"), c = edge(g, "c");
  const EPSet zero = EPSet::singleton(0);
  auto v = pi_hat(g, {make_bisection(g, {a, a}, {a, b, c}, zero)});
  auto w = pi_hat(g, {make_bisection(g, {a, b, c}, {b, c}, zero)});
  EXPECT_EQ(order(g, commutator(g, v, w)), 3u);
}

TEST(Groupoid, IsolationFollowsExits) {
  Ultragraph g = fixture("no_exit_loop");
  EdgeRef l = edge(g, "l");
  EXPECT_TRUE(is_isolated(g, BoundaryPoint::periodic({}, {l})).isolated);
  Ultragraph h = fixture("exit_loop");
  EXPECT_FALSE(is_isolated(h, BoundaryPoint::periodic({}, {edge(h, "l")})).isolated);
}

TEST(Groupoid, OrbitOfIsolatedLoopIsSmall) {
  Ultragraph g = fixture("degenerate_v1");
  auto orbit = orbit_enumerate(g, BoundaryPoint::periodic({}, {edge(g, "e")}), 6);
  EXPECT_EQ(orbit.size(), 1u);
  Ultragraph k = fixture("kwinf_a");
  EXPECT_GE(orbit_enumerate(k, BoundaryPoint::periodic({}, {edge(k, "a")}), 6).size(), 10u);
}

TEST(Groupoid, ArrowsByShiftEquivalence) {
  Ultragraph g = fixture("kwinf_a");
  EdgeRef a = edge(g, "a"), b = edge(g, "b"), c = edge(g, "c"), d = edge(g, "d");
  auto x = BoundaryPoint::periodic({a}, {b, d, c});
  auto y = BoundaryPoint::periodic({}, {b, d, c});
  EXPECT_TRUE(is_arrow({x, 1, y}));
  EXPECT_TRUE(is_arrow({x, 4, y}));
  EXPECT_FALSE(is_arrow({x, 2, y}));
}
