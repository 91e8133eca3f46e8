#include <gtest/gtest.h>

#include "ugk/conditions.hpp"
#include "ugk/dsl.hpp"
#include "ugk/errors.hpp"

using namespace ugk;

namespace {

Ultragraph fixture(const std::string& name) {
  return Ultragraph(load_presentation(std::string(UGK_FIXTURES) + "/" + name + ".ug"));
}

Ultragraph parse(const std::string& text) { return Ultragraph(parse_presentation(text)); }

}  // namespace

TEST(Conditions, ExampleSatisfiesEverything) {
  Ultragraph g = fixture("paper_example");
  EXPECT_EQ(check_K(g, 8).verdict, Verdict::Holds);
  EXPECT_EQ(check_infty(g, 8).verdict, Verdict::Holds);
  EXPECT_EQ(check_W(g, 10).verdict, Verdict::Holds);
  EXPECT_EQ(check_L(g, 8).verdict, Verdict::Holds);
  EXPECT_EQ(check_T(g, 8).verdict, Verdict::Holds);
  EXPECT_EQ(check_ND(g).verdict, Verdict::Holds);
  EXPECT_TRUE(degenerate_catalog(g).empty());
}

TEST(Conditions, DescentAlongAMovingTerm) {
  Ultragraph g = parse(
      "universe all\n"
      "edge a : src 0 -> { all }\n"
      "family h(n) for n in ap(1,1) : src n -> { n-1 }\n");
  auto r = check_infty(g, 4);
  EXPECT_EQ(r.verdict, Verdict::Holds) << r.certificate;
}

TEST(Conditions, InfinityFailsWhenNothingReturns) {
  Ultragraph g = fixture("degenerate_ie1");
  auto r = check_infty(g, 8);
  EXPECT_EQ(r.verdict, Verdict::Fails);
  EXPECT_NE(r.certificate.find("mie#0"), std::string::npos);
}

TEST(Conditions, ExitAndLoops) {
  EXPECT_EQ(check_L(fixture("no_exit_loop"), 8).verdict, Verdict::Fails);
  EXPECT_EQ(check_L(fixture("exit_loop"), 8).verdict, Verdict::Holds);
  auto k = check_K(fixture("degenerate_v1"), 8);
  EXPECT_EQ(k.verdict, Verdict::Fails);
  EXPECT_EQ(k.certificate, "vertex 0 has exactly one simple loop: e");
  EXPECT_EQ(check_K(fixture("kwinf_a"), 8).verdict, Verdict::Holds);
}

TEST(Conditions, SimpleLoopsMayShareRanges) {
  Ultragraph g = parse(
      "universe {1,2,3}\n"
      "edge e1 : src 1 -> { 1, 2 }\n"
      "edge e2 : src 2 -> { 1, 3 }\n"
      "edge e3 : src 3 -> { 3 }\n");
  auto s = enumerate_simple_loops(g, 1, 6);
  ASSERT_EQ(s.loops.size(), 2u);
  EXPECT_EQ(path_to_string(g, s.loops[0]), "e1");
  EXPECT_EQ(path_to_string(g, s.loops[1]), "e1.e2");
  EXPECT_FALSE(s.truncated);
  EXPECT_EQ(exits_of_loop(g, s.loops[1]).size(), 2u);
}

TEST(Conditions, WanderingStaysUnknown) {
  Ultragraph g = parse(
      "universe all\n"
      "family s(n) for n in all : src n -> { n+1 }\n"
      "family t(n) for n in all : src n -> { n+1 }\n");
  auto r = check_W(g, 10);
  EXPECT_EQ(r.verdict, Verdict::Unknown);
  EXPECT_EQ(check_W(fixture("kwinf_c"), 10).verdict, Verdict::Holds);
}

TEST(Conditions, DegenerateCatalogTags) {
  const std::pair<const char*, const char*> cases[] = {
      {"degenerate_ie1", "IE1"}, {"degenerate_ie2", "IE2"}, {"degenerate_v1", "V1"},
      {"degenerate_v2", "V2"},   {"degenerate_v3", "V3"},   {"no_exit_loop", "V2"}};
  for (const auto& [name, tag] : cases) {
    auto cat = degenerate_catalog(fixture(name));
    ASSERT_EQ(cat.size(), 1u) << name;
    EXPECT_EQ(cat[0].tag, tag) << name;
    EXPECT_EQ(check_ND(fixture(name)).verdict, Verdict::Fails) << name;
  }
  for (const char* name : {"exit_loop", "kwinf_a", "kwinf_b", "kwinf_c"})
    EXPECT_EQ(check_ND(fixture(name)).verdict, Verdict::Holds) << name;
}

TEST(Conditions, RunByName) {
  Ultragraph g = fixture("kwinf_a");
  for (const char* c : {"L", "K", "T", "ND", "INF", "W"}) EXPECT_EQ(run_condition(g, c, 6).condition, c);
  EXPECT_THROW(run_condition(g, "Q", 6), PreconditionViolated);
  auto j = check_L(g, 6).to_json();
  EXPECT_EQ(j["verdict"], "Holds");
  EXPECT_EQ(j["bound"], 6);
}
