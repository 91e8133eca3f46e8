#include <gtest/gtest.h>

#include "ugk/dsl.hpp"
#include "ugk/errors.hpp"
#include "ugk/expr.hpp"

using namespace ugk;

namespace {

Ultragraph fixture(const std::string& name) {
  return Ultragraph(load_presentation(std::string(UGK_FIXTURES) + "/" + name + ".ug"));
}

}  // namespace

TEST(Expr, LiteralsRoundTrip) {
  Ultragraph g = fixture("paper_example");
  for (const char* text : {"D(e1; {3}; {})", "D(; mie#0 | {1,2}; {})", "D(e1.en[3]; {1}; {e1})"}) {
    Cylinder c = parse_cylinder(g, text);
    EXPECT_EQ(c.to_string(g), text);
  }
  Bisection z = parse_bisection(g, "Z(e1; en[3]; {1}; {})");
  EXPECT_EQ(to_string(g, z), "Z(e1; en[3]; {1}; {})");
  for (const char* text : {"fin(e1.e1; mie#0)", "evp(e2; en[3].e1)", "fin(; mie#0)"})
    EXPECT_EQ(point_to_string(g, parse_point(g, text)), text);
  EXPECT_EQ(parse_path(g, "e1.en[5]").size(), 2u);
  EXPECT_TRUE(parse_path(g, "").empty());
}

TEST(Expr, BadLiteralsReportPositions) {
  Ultragraph g = fixture("paper_example");
  try {
    parse_path(g, "e1.e2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 1);
  }
  try {
    parse_point(g, "fin(e1; mie#4)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 13);
  }
  EXPECT_THROW(parse_path(g, "en[2]"), ParseError);
  EXPECT_THROW(parse_cylinder(g, "D(e1; {2})"), ParseError);
  EXPECT_THROW(parse_point(g, "evp(; e1.e2)"), ParseError);
}

TEST(Script, WitnessOrderPrintsThree) {
  Ultragraph g = fixture("paper_example");
  Script s(g);
  auto out = s.run(
      "# f3 on the whole space\n"
      "let L = f3(all)\n"
      "print order(L)\n"
      "print is_identity(L^3)\n"
      "let x = fin(e1; mie#0)\n"
      "let p = f1(x, D(e1; mie#0 | {1}))\n"
      "print order(p)   # an involution\n"
      "print contains(support(p), x)\n");
  EXPECT_EQ(out, (std::vector<std::string>{"3", "true", "2", "true"}));
}

TEST(Script, GroupWords) {
  Ultragraph g = fixture("kwinf_a");
  Script s(g);
  auto out = s.run(
      "let v = pi_hat(Z(a.a; a.b.c; {0}))\n"
      "let w = pi_hat(Z(a.b.c; b.c; {0}))\n"
      "print order([v, w])\n"
      "print equals(v * v, id)\n"
      "print apply(v, evp(a.b; c.b))\n"
      "print equals(inv([v, w]), [w, v])\n");
  EXPECT_EQ(out, (std::vector<std::string>{"3", "true", "evp(a.a; b.c)", "true"}));
}

TEST(Script, Errors) {
  Ultragraph g = fixture("kwinf_a");
  Script s(g);
  try {
    s.run("let v = id\nprint order(q)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(s.run("print order(all)"), ParseError);
  EXPECT_THROW(s.run("print id id"), ParseError);
  EXPECT_THROW(s.run("frobnicate"), ParseError);
}
