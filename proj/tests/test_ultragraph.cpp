#include <gtest/gtest.h>

#include <filesystem>

#include "ugk/dsl.hpp"
#include "ugk/errors.hpp"
#include "ugk/ultragraph.hpp"

using namespace ugk;

namespace {

Ultragraph fixture(const std::string& name) {
  return Ultragraph(load_presentation(std::string(UGK_FIXTURES) + "/" + name + ".ug"));
}

}  // namespace

TEST(Ultragraph, ExampleHasOneEmitter) {
  Ultragraph g = fixture("paper_example");
  EXPECT_TRUE(g.validate().empty());
  ASSERT_EQ(g.mie_sets().size(), 1u);
  EXPECT_EQ(g.mie_sets()[0], EPSet::progression(3, 1));
  EXPECT_TRUE(g.infinite_emitter_vertices().empty());
}

TEST(Ultragraph, ExampleIncidence) {
  Ultragraph g = fixture("paper_example");
  auto en = *g.find_schema("en");
  EXPECT_EQ(g.edges_into(5)[en], EPSet::finite({5, 7}));
  EXPECT_EQ(g.edges_into(2)[*g.find_schema("e1")], EPSet());
  EXPECT_EQ(g.edges_with_range_containing(EPSet::finite({3, 5}))[en], EPSet::singleton(5));
  EXPECT_EQ(g.epsilon(EPSet::singleton(4))[en], EPSet::singleton(4));
  EXPECT_EQ(g.range({en, 9}), EPSet::finite({7, 9}));
  EXPECT_EQ(g.source({en, 9}), 9u);
  EXPECT_EQ(g.edge_name({en, 9}), "en[9]");
  EXPECT_THROW(g.source({en, 2}), UndefinedError);
  bool truncated = false;
  auto out = g.out_edges(EPSet::all(), 3, &truncated);
  EXPECT_TRUE(truncated);
  EXPECT_EQ(out.size(), 5u);
}

TEST(Ultragraph, DecomposeGeneralizedVertices) {
  Ultragraph g = fixture("paper_example");
  auto d = g.decompose(EPSet::cofinite({0, 2}));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->mies, std::vector<int>{0});
  EXPECT_EQ(d->finite_part, EPSet::singleton(1));
  EXPECT_FALSE(g.decompose(EPSet::progression(3, 2)).has_value());
  EXPECT_FALSE(g.decompose(EPSet::singleton(0)).has_value());
  EXPECT_THROW(g.gv(EPSet::progression(4, 2)), ValidationError);
}

TEST(Ultragraph, InfiniteEmitterVertex) {
  Ultragraph g = fixture("kwinf_b");
  EXPECT_TRUE(g.validate().empty());
  EXPECT_EQ(g.infinite_emitter_vertices(), std::vector<Natural>{0});
  ASSERT_EQ(g.mie_sets().size(), 1u);
  EXPECT_EQ(g.mie_sets()[0], EPSet::singleton(0));
  EXPECT_TRUE(g.epsilon_is_infinite(EPSet::singleton(0)));
}

TEST(Ultragraph, WholeUniverseEmitter) {
  Ultragraph g = fixture("kwinf_c");
  EXPECT_TRUE(g.validate().empty());
  ASSERT_EQ(g.mie_sets().size(), 1u);
  EXPECT_EQ(g.mie_sets()[0], EPSet::all());
}

TEST(Ultragraph, DetectsSink) {
  Ultragraph g(parse_presentation("universe {0,1}\nedge a : src 0 -> { 1 }\n"));
  auto d = g.validate();
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d[0].kind, Diagnostic::Kind::NoSink);
  EXPECT_EQ(d[0].vertex, 1u);
  EXPECT_THROW(g.require_valid(), ValidationError);
}

TEST(Ultragraph, DetectsRfumViolation) {
  Ultragraph g(parse_presentation(
      "universe all\n"
      "family f(n) for n in all : src 0 -> { 1 }\n"
      "edge a : src 1 -> { all }\n"
      "family g(n) for n in all : src n+1 -> { n+1 }\n"));
  auto d = g.validate();
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].kind, Diagnostic::Kind::RfumViolation);
  EXPECT_EQ(g.edge_name(*d[0].edge), "a");
}

TEST(Ultragraph, DetectsBadSchemas) {
  Ultragraph g(parse_presentation("universe all\nfamily f(n) for n in all : src n-1 -> { n }\n"));
  EXPECT_EQ(g.validate().at(0).kind, Diagnostic::Kind::BadSchema);
  Ultragraph h(parse_presentation("universe {0}\nedge a : src 0 -> { 3 }\n"));
  EXPECT_EQ(h.validate().at(0).kind, Diagnostic::Kind::OutsideUniverse);
}

TEST(Dsl, FixturesRoundTrip) {
  for (const auto& entry : std::filesystem::directory_iterator(UGK_FIXTURES)) {
    if (entry.path().extension() != ".ug") continue;
    Presentation p = load_presentation(entry.path().string());
    EXPECT_EQ(parse_presentation(print_presentation(p)), p) << entry.path();
    EXPECT_TRUE(Ultragraph(p).validate().empty()) << entry.path();
  }
}

TEST(Dsl, ErrorsCarryPosition) {
  try {
    parse_presentation("universe all\nedge a : src 0 -> { 1 \n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    parse_presentation("universe all\n  edge a ; src 0 -> {1}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 10);
  }
  EXPECT_EQ(Ultragraph(parse_presentation("edge a : src 0 -> {0}")).validate().at(0).kind,
            Diagnostic::Kind::OutsideUniverse);
  EXPECT_EQ(Ultragraph(parse_presentation("")).validate().at(0).kind, Diagnostic::Kind::NoSink);
  EXPECT_THROW(parse_presentation("universe all\nedge a : src n -> {0}"), ParseError);
}
