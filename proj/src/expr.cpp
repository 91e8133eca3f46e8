#include "expr_parse.hpp"
#include "ugk/errors.hpp"
#include "ugk/expr.hpp"

namespace ugk {

namespace detail {

namespace {

template <class T>
T whole_text(std::string_view text, const Ultragraph& g, T (*parse)(Scanner&, const Ultragraph&)) {
  Scanner s(text, false);
  T out = parse(s, g);
  if (!s.at_end()) s.fail("unexpected trailing input");
  return out;
}

}  // namespace

EdgeRef parse_edge(Scanner& s, const Ultragraph& g) {
  Token at = s.peek();
  std::string name = s.expect_ident();
  Natural index = 0;
  if (s.accept("[")) {
    index = s.expect_int();
    s.expect("]");
  }
  auto schema = g.find_schema(name);
  if (!schema) s.fail("unknown edge " + name, at);
  EdgeRef e{*schema, index};
  if (!g.has_edge(e)) s.fail("no edge " + name + "[" + std::to_string(index) + "]", at);
  return e;
}

Path parse_path(Scanner& s, const Ultragraph& g) {
  Path p;
  if (s.check(";") || s.check(")") || s.at_end()) return p;
  Token at = s.peek();
  do {
    p.push_back(parse_edge(s, g));
  } while (s.accept("."));
  if (!is_path(g, p)) s.fail(path_to_string(g, p) + " is not a path", at);
  return p;
}

EPSet parse_component(Scanner& s, const Ultragraph& g) {
  SetHook mie = [&g](Scanner& sc) -> std::optional<EPSet> {
    if (!sc.check("mie") || !sc.check("#", 1)) return std::nullopt;
    sc.next();
    sc.next();
    Token at = sc.peek();
    Natural k = sc.expect_int();
    if (k >= g.mie_sets().size()) sc.fail("no emitter mie#" + std::to_string(k), at);
    return g.mie_sets()[k];
  };
  return parse_epset_expr(s, &mie);
}

EdgeSet parse_edge_set(Scanner& s, const Ultragraph& g) {
  EdgeSet out;
  s.expect("{");
  if (s.accept("}")) return out;
  do {
    out.insert(parse_edge(s, g));
  } while (s.accept(","));
  s.expect("}");
  return out;
}

BoundaryPoint parse_point(Scanner& s, const Ultragraph& g) {
  Token at = s.peek();
  std::optional<BoundaryPoint> x;
  if (s.accept("fin")) {
    s.expect("(");
    Path p = parse_path(s, g);
    s.expect(";");
    s.expect("mie");
    s.expect("#");
    Token k_at = s.peek();
    Natural k = s.expect_int();
    if (k >= g.mie_sets().size()) s.fail("no emitter mie#" + std::to_string(k), k_at);
    s.expect(")");
    x = BoundaryPoint::finite(std::move(p), static_cast<int>(k));
  } else if (s.accept("evp")) {
    s.expect("(");
    Path head = parse_path(s, g);
    s.expect(";");
    Path cycle = parse_path(s, g);
    s.expect(")");
    if (cycle.empty()) s.fail("empty cycle", at);
    x = BoundaryPoint::periodic(std::move(head), std::move(cycle));
  } else {
    s.fail("expected fin(...) or evp(...)");
  }
  if (!is_boundary_point(g, *x)) s.fail(point_to_string(g, *x) + " is not a boundary path", at);
  return *x;
}

Cylinder parse_cylinder(Scanner& s, const Ultragraph& g) {
  Token at = s.expect("D");
  s.expect("(");
  Path p = parse_path(s, g);
  s.expect(";");
  EPSet set = parse_component(s, g);
  EdgeSet f;
  if (s.accept(";")) f = parse_edge_set(s, g);
  s.expect(")");
  try {
    return Cylinder(g, std::move(p), std::move(set), std::move(f));
  } catch (const ValidationError& e) {
    s.fail(e.what(), at);
  }
}

Bisection parse_bisection(Scanner& s, const Ultragraph& g) {
  Token at = s.expect("Z");
  s.expect("(");
  Path alpha = parse_path(s, g);
  s.expect(";");
  Path beta = parse_path(s, g);
  s.expect(";");
  EPSet set = parse_component(s, g);
  EdgeSet f;
  if (s.accept(";")) f = parse_edge_set(s, g);
  s.expect(")");
  try {
    return make_bisection(g, std::move(alpha), std::move(beta), std::move(set), std::move(f));
  } catch (const Error& e) {
    s.fail(e.what(), at);
  }
}

}  // namespace detail

Path parse_path(const Ultragraph& g, std::string_view text) { return detail::whole_text(text, g, detail::parse_path); }

BoundaryPoint parse_point(const Ultragraph& g, std::string_view text) {
  return detail::whole_text(text, g, detail::parse_point);
}

Cylinder parse_cylinder(const Ultragraph& g, std::string_view text) {
  return detail::whole_text(text, g, detail::parse_cylinder);
}

Bisection parse_bisection(const Ultragraph& g, std::string_view text) {
  return detail::whole_text(text, g, detail::parse_bisection);
}

}  // namespace ugk
