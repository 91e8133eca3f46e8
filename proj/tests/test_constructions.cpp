#include <gtest/gtest.h>

#include "ugk/constructions.hpp"
#include "ugk/dsl.hpp"
#include "ugk/errors.hpp"

using namespace ugk;

namespace {

Ultragraph fixture(const std::string& name) {
  return Ultragraph(load_presentation(std::string(UGK_FIXTURES) + "/" + name + ".ug"));
}

EdgeRef edge(const Ultragraph& g, const std::string& name, Natural index = 0) {
  return {*g.find_schema(name), index};
}

}  // namespace

TEST(DisjointLoops, PowersOfTheShortLoop) {
  Ultragraph g = fixture("kwinf_a");
  EdgeRef a = edge(g, "a");
  auto f = disjoint_loops(g, {a}, 3, 6);
  ASSERT_EQ(f.members.size(), 3u);
  EXPECT_TRUE(is_disjoint_family(g, f));
  EXPECT_EQ(disjoint_loops(g, {a}, 1, 6).members.front().path, Path{a});
  EXPECT_THROW(disjoint_loops(g, {edge(g, "b")}, 2, 6), PreconditionViolated);
}

TEST(DisjointLoops, ExampleAtFive) {
  Ultragraph g = fixture("paper_example");
  auto f = disjoint_loops(g, {edge(g, "en", 5)}, 3, 6);
  EXPECT_TRUE(is_disjoint_family(g, f));
  for (const auto& m : f.members) EXPECT_EQ(g.source(m.path.front()), 5u);
}

TEST(DisjointLoops, SingleLoopIsInsufficient) {
  Ultragraph g = fixture("degenerate_v1");
  EXPECT_THROW(disjoint_loops(g, {edge(g, "e")}, 2, 6), WitnessNotFound);
}

TEST(DisjointPaths, WanderingPrefix) {
  Ultragraph g = fixture("paper_example");
  Path alpha{edge(g, "e2"), edge(g, "en", 4), edge(g, "en", 4)};
  auto one = disjoint_paths_W(g, alpha, 0, 4);
  ASSERT_EQ(one.members.size(), 1u);
  EXPECT_EQ(one.members[0].path, Path{alpha[0]});
  auto three = disjoint_paths_W(g, alpha, 2, 4);
  EXPECT_EQ(three.members.size(), 3u);
  EXPECT_TRUE(is_disjoint_family(g, three));
}

TEST(FourPaths, ExampleLoopAtFive) {
  Ultragraph g = fixture("paper_example");
  auto x = BoundaryPoint::periodic({}, {edge(g, "en", 5)});
  auto fp = four_disjoint_paths(g, x, 1, 6);
  ASSERT_EQ(fp.paths.size(), 4u);
  EXPECT_TRUE(x.starts_with(fp.paths[0]));
  DisjointFamily f;
  for (const auto& p : fp.paths) f.members.push_back({p, fp.set});
  EXPECT_TRUE(is_disjoint_family(g, f));
}

class Witnesses : public ::testing::TestWithParam<const char*> {};

TEST_P(Witnesses, AllThreeVerify) {
  Ultragraph g = fixture(GetParam());
  ClopenSet all(Cylinder::whole(g));
  Witness f3 = f3_witness(g, all);
  EXPECT_EQ(order(g, f3.element), 3u);
  EXPECT_TRUE(f3.element.support(g).is_subset_of(g, all));
  BoundaryPoint x = witness(g, Cylinder::whole(g));
  Witness f1 = f1_witness(g, x, all);
  EXPECT_TRUE(compose(g, f1.element, f1.element).is_identity());
  EXPECT_TRUE(f1.element.support(g).contains(g, x));
  ClopenSet a = f1.element.support(g);
  Witness f2 = f2_witness(g, f1.element, a);
  EXPECT_TRUE(f2.verification["agrees_with_tau"].get<bool>());
  EXPECT_FALSE(f2.element.is_identity());
}

INSTANTIATE_TEST_SUITE_P(Fixtures, Witnesses,
                         ::testing::Values("paper_example", "kwinf_a", "kwinf_b", "kwinf_c", "exit_loop"));

TEST(Witnesses, RefusedWhenConditionsFail) {
  Ultragraph g = fixture("degenerate_v1");
  EXPECT_THROW(f3_witness(g, ClopenSet(Cylinder::whole(g))), PreconditionViolated);
}

TEST(Witnesses, ShrinksIntoSmallNeighbourhoods) {
  Ultragraph g = fixture("paper_example");
  EdgeRef e1 = edge(g, "e1"), en3 = edge(g, "en", 3);
  ClopenSet a(Cylinder(g, {e1, en3}, EPSet::singleton(3)));
  auto x = BoundaryPoint::periodic({e1}, {en3});
  Witness f1 = f1_witness(g, x, a);
  EXPECT_TRUE(f1.element.support(g).is_subset_of(g, a));
  Witness f3 = f3_witness(g, a);
  EXPECT_TRUE(f3.element.support(g).is_subset_of(g, a));
}
