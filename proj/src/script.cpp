#include <cctype>

#include "expr_parse.hpp"
#include "ugk/constructions.hpp"
#include "ugk/errors.hpp"
#include "ugk/expr.hpp"

namespace ugk {

namespace {

using detail::Scanner;
using detail::Tok;
using detail::Token;

/// Blanks `#` comments that start a line or follow whitespace, so that
/// `mie#0` survives and line numbers stay put.
std::string strip_comments(std::string_view src) {
  std::string out(src);
  bool in_comment = false;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == '\n') {
      in_comment = false;
      continue;
    }
    if (!in_comment && out[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(out[i - 1]))))
      in_comment = true;
    if (in_comment) out[i] = ' ';
  }
  return out;
}

const char* type_name(const Value& v) {
  static const char* names[] = {"group element", "bisection", "clopen set", "point", "integer", "boolean"};
  return names[v.index()];
}

class Evaluator {
 public:
  Evaluator(const Ultragraph& g, Scanner& s, std::map<std::string, Value>& env, std::size_t bound)
      : g_(g), s_(s), env_(env), bound_(bound) {}

  Value expr() {
    Value v = unary();
    while (s_.check("*")) {
      Token at = s_.next();
      Value rhs = unary();
      v = compose(g_, as<FullGroupElement>(v, at), as<FullGroupElement>(rhs, at));
    }
    return v;
  }

 private:
  template <class T>
  T as(const Value& v, const Token& at) {
    if (auto p = std::get_if<T>(&v)) return *p;
    static const Value probe = T{};
    s_.fail(std::string("expected a ") + type_name(probe) + ", got a " + type_name(v), at);
  }

  Value unary() {
    Value v = primary();
    if (s_.check("^")) {
      Token at = s_.next();
      bool neg = s_.accept("-");
      auto k = static_cast<std::int64_t>(s_.expect_int());
      v = power(g_, as<FullGroupElement>(v, at), neg ? -k : k);
    }
    return v;
  }

  std::vector<Value> args() {
    std::vector<Value> out;
    s_.expect("(");
    if (s_.accept(")")) return out;
    do {
      out.push_back(expr());
    } while (s_.accept(","));
    s_.expect(")");
    return out;
  }

  void arity(const std::vector<Value>& a, std::size_t n, const Token& at) {
    if (a.size() != n) s_.fail(at.text + " takes " + std::to_string(n) + " argument(s)", at);
  }

  Value primary() {
    const Token& t = s_.peek();
    if (t.kind == Tok::Int) return static_cast<std::int64_t>(s_.next().value);
    if (s_.check("(")) {
      s_.next();
      Value v = expr();
      s_.expect(")");
      return v;
    }
    if (s_.check("[")) {
      Token at = s_.next();
      Value a = expr();
      s_.expect(",");
      Value b = expr();
      s_.expect("]");
      return commutator(g_, as<FullGroupElement>(a, at), as<FullGroupElement>(b, at));
    }
    if (t.kind != Tok::Ident) s_.fail("expected an expression");
    if (t.text == "D") return ClopenSet(detail::parse_cylinder(s_, g_));
    if (t.text == "Z") return CompactBisection{detail::parse_bisection(s_, g_)};
    if ((t.text == "fin" || t.text == "evp") && s_.check("(", 1)) return detail::parse_point(s_, g_);
    Token at = s_.next();
    const std::string& w = at.text;
    if (!s_.check("(")) {
      if (w == "id") return FullGroupElement::identity();
      if (w == "all") return ClopenSet(Cylinder::whole(g_));
      if (w == "true" || w == "false") return w == "true";
      auto it = env_.find(w);
      if (it == env_.end()) s_.fail("unknown name " + w, at);
      return it->second;
    }
    return call(at, args());
  }

  Value call(const Token& at, const std::vector<Value>& a) {
    const std::string& w = at.text;
    if (w == "pi_hat" || w == "pi_tilde") {
      CompactBisection rows;
      for (const auto& v : a) {
        auto part = as<CompactBisection>(v, at);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      return w == "pi_hat" ? pi_hat(g_, rows) : pi_tilde(g_, rows);
    }
    if (w == "inv") {
      arity(a, 1, at);
      return inverse(as<FullGroupElement>(a[0], at));
    }
    if (w == "order") {
      arity(a, 1, at);
      auto k = order(g_, as<FullGroupElement>(a[0], at));
      if (!k) throw BudgetExceeded("order exceeds 64");
      return static_cast<std::int64_t>(*k);
    }
    if (w == "support") {
      arity(a, 1, at);
      return as<FullGroupElement>(a[0], at).support(g_).normalized(g_);
    }
    if (w == "image") {
      arity(a, 2, at);
      return as<FullGroupElement>(a[0], at).image(g_, as<ClopenSet>(a[1], at)).normalized(g_);
    }
    if (w == "apply") {
      arity(a, 2, at);
      return as<FullGroupElement>(a[0], at).apply(g_, as<BoundaryPoint>(a[1], at));
    }
    if (w == "equals") {
      arity(a, 2, at);
      if (std::holds_alternative<ClopenSet>(a[0])) return as<ClopenSet>(a[0], at).equals(g_, as<ClopenSet>(a[1], at));
      if (std::holds_alternative<BoundaryPoint>(a[0])) return as<BoundaryPoint>(a[0], at) == as<BoundaryPoint>(a[1], at);
      return equals(g_, as<FullGroupElement>(a[0], at), as<FullGroupElement>(a[1], at));
    }
    if (w == "is_identity") {
      arity(a, 1, at);
      return as<FullGroupElement>(a[0], at).is_identity();
    }
    if (w == "contains") {
      arity(a, 2, at);
      return as<ClopenSet>(a[0], at).contains(g_, as<BoundaryPoint>(a[1], at));
    }
    if (w == "union" || w == "meet" || w == "minus") {
      arity(a, 2, at);
      ClopenSet x = as<ClopenSet>(a[0], at), y = as<ClopenSet>(a[1], at);
      ClopenSet r = w == "union" ? x.unite(g_, y) : w == "meet" ? x.intersect(g_, y) : x.minus(g_, y);
      return r.normalized(g_);
    }
    if (w == "witness") {
      arity(a, 1, at);
      ClopenSet c = as<ClopenSet>(a[0], at).normalized(g_);
      if (c.parts().empty()) throw WitnessNotFound("empty clopen set");
      return ugk::witness(g_, c.parts().front());
    }
    if (w == "isolated") {
      arity(a, 1, at);
      return is_isolated(g_, as<BoundaryPoint>(a[0], at)).isolated;
    }
    if (w == "f3") {
      arity(a, 1, at);
      return f3_witness(g_, as<ClopenSet>(a[0], at), bound_).element;
    }
    if (w == "f1") {
      arity(a, 2, at);
      return f1_witness(g_, as<BoundaryPoint>(a[0], at), as<ClopenSet>(a[1], at), bound_).element;
    }
    if (w == "f2") {
      arity(a, 2, at);
      return f2_witness(g_, as<FullGroupElement>(a[0], at), as<ClopenSet>(a[1], at), bound_).element;
    }
    s_.fail("unknown function " + w, at);
  }

  const Ultragraph& g_;
  Scanner& s_;
  std::map<std::string, Value>& env_;
  std::size_t bound_;
};

}  // namespace

std::string value_to_string(const Ultragraph& g, const Value& v) {
  struct Printer {
    const Ultragraph& g;
    std::string operator()(const FullGroupElement& x) const { return x.to_string(g); }
    std::string operator()(const CompactBisection& x) const {
      std::string s;
      for (const auto& z : x) s += (s.empty() ? "" : " + ") + to_string(g, z);
      return s;
    }
    std::string operator()(const ClopenSet& x) const { return x.to_string(g); }
    std::string operator()(const BoundaryPoint& x) const { return point_to_string(g, x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
  };
  return std::visit(Printer{g}, v);
}

std::vector<std::string> Script::run(std::string_view source) {
  const std::string text = strip_comments(source);
  Scanner s(text, false);
  std::vector<std::string> printed;
  while (!s.at_end()) {
    const int line = s.peek().line;
    Evaluator ev(g_, s, env_, bound_);
    if (s.accept("let")) {
      std::string name = s.expect_ident();
      s.expect("=");
      env_[name] = ev.expr();
    } else if (s.accept("print")) {
      printed.push_back(value_to_string(g_, ev.expr()));
    } else {
      s.fail("expected 'let' or 'print'");
    }
    if (!s.at_end() && s.peek().line == line) s.fail("expected the end of the statement");
  }
  return printed;
}

Value Script::evaluate(std::string_view expression) {
  const std::string text = strip_comments(expression);
  Scanner s(text, false);
  Value v = Evaluator(g_, s, env_, bound_).expr();
  if (!s.at_end()) s.fail("unexpected trailing input");
  return v;
}

}  // namespace ugk
