#include "ugk/dsl.hpp"

#include <fstream>
#include <sstream>

#include "scanner.hpp"
#include "ugk/errors.hpp"

namespace ugk {

using detail::Scanner;

EPSet parse_epset(std::string_view text) {
  Scanner s(text, false);
  EPSet e = detail::parse_epset_expr(s);
  if (!s.at_end()) s.fail("unexpected trailing input");
  return e;
}

namespace {

void parse_range(Scanner& s, EdgeSchema& e) {
  s.expect("->");
  s.expect("{");
  if (s.check("}")) s.fail("range must not be empty");
  do {
    if (detail::starts_affine(s))
      e.range_terms.push_back(detail::parse_affine(s));
    else
      e.range_const = e.range_const.unite(detail::parse_epset_expr(s));
  } while (s.accept(","));
  s.expect("}");
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Scanner s(text, true);
  Presentation p;
  bool have_universe = false;
  while (!s.at_end()) {
    if (s.accept("universe")) {
      if (have_universe) s.fail("universe declared twice");
      p.universe = detail::parse_epset_expr(s);
      have_universe = true;
    } else if (s.accept("edge")) {
      EdgeSchema e;
      e.name = s.expect_ident();
      s.expect(":");
      s.expect("src");
      e.source = detail::parse_affine(s);
      if (!e.source.is_constant()) s.fail("single edge source must be a constant");
      parse_range(s, e);
      for (const auto& t : e.range_terms)
        if (!t.is_constant()) s.fail("single edge range may not mention n");
      p.schemas.push_back(std::move(e));
    } else if (s.accept("family")) {
      EdgeSchema e;
      e.family = true;
      e.name = s.expect_ident();
      s.expect("(");
      s.expect("n");
      s.expect(")");
      s.expect("for");
      s.expect("n");
      s.expect("in");
      e.domain = detail::parse_epset_expr(s);
      s.expect(":");
      s.expect("src");
      e.source = detail::parse_affine(s);
      parse_range(s, e);
      p.schemas.push_back(std::move(e));
    } else {
      s.fail("expected 'universe', 'edge' or 'family'");
    }
  }
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "universe " << p.universe.to_string() << '\n';
  for (const auto& e : p.schemas) {
    if (e.family)
      os << "family " << e.name << "(n) for n in " << e.domain.to_string();
    else
      os << "edge " << e.name;
    os << " : src " << e.source.to_string() << " -> { ";
    bool first = true;
    for (const auto& t : e.range_terms) {
      os << (first ? "" : ", ") << t.to_string();
      first = false;
    }
    if (!e.range_const.is_empty() || first) os << (first ? "" : ", ") << e.range_const.to_string();
    os << " }\n";
  }
  return os.str();
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace ugk
