#include "scanner.hpp"

#include <cctype>
#include <limits>

#include "ugk/errors.hpp"

namespace ugk::detail {

Scanner::Scanner(std::string_view src, bool hash_comments) {
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&]() {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '#' && hash_comments) {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        Natural d = static_cast<Natural>(src[i] - '0');
        if (t.value > (std::numeric_limits<std::int32_t>::max() - d) / 10)
          throw ParseError("integer literal too large", t.line, t.column);
        t.value = t.value * 10 + d;
        t.text += src[i];
        advance();
      }
    } else {
      t.kind = Tok::Punct;
      if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
        t.text = "->";
        advance();
      } else if (std::string_view("{}()[],:;|&\\*+-^=.#<>").find(c) != std::string_view::npos) {
        t.text = std::string(1, c);
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      advance();
    }
    tokens_.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  tokens_.push_back(end);
}

const Token& Scanner::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

Token Scanner::next() {
  Token t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool Scanner::check(std::string_view text, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind != Tok::End && t.kind != Tok::Int && t.text == text;
}

bool Scanner::accept(std::string_view text) {
  if (!check(text)) return false;
  next();
  return true;
}

Token Scanner::expect(std::string_view text) {
  if (!check(text)) fail("expected '" + std::string(text) + "'");
  return next();
}

Natural Scanner::expect_int() {
  if (peek().kind != Tok::Int) fail("expected an integer");
  return next().value;
}

std::string Scanner::expect_ident() {
  if (peek().kind != Tok::Ident) fail("expected a name");
  return next().text;
}

void Scanner::fail(const std::string& message) const { fail(message, peek()); }

void Scanner::fail(const std::string& message, const Token& at) const {
  std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
  throw ParseError(message + ", found " + found, at.line, at.column);
}

namespace {

std::vector<Natural> int_list(Scanner& s) {
  std::vector<Natural> out;
  s.expect("{");
  if (s.accept("}")) return out;
  do {
    out.push_back(s.expect_int());
  } while (s.accept(","));
  s.expect("}");
  return out;
}

EPSet atom(Scanner& s, const SetHook* hook) {
  if (s.check("{")) return EPSet::finite(int_list(s));
  if (s.accept("(")) {
    EPSet e = parse_epset_expr(s, hook);
    s.expect(")");
    return e;
  }
  if (s.peek().kind != Tok::Ident) s.fail("expected a set");
  if (hook)
    if (auto named = (*hook)(s)) return *named;
  std::string w = s.peek().text;
  if (w == "all") {
    s.next();
    return EPSet::all();
  }
  if (w == "empty") {
    s.next();
    return EPSet();
  }
  if (w == "fin") {
    s.next();
    return EPSet::finite(int_list(s));
  }
  if (w == "cof") {
    s.next();
    return EPSet::cofinite(int_list(s));
  }
  if (w == "ap") {
    s.next();
    s.expect("(");
    Natural b = s.expect_int();
    s.expect(",");
    Token at = s.peek();
    Natural step = s.expect_int();
    if (step == 0) s.fail("progression step must be positive", at);
    s.expect(")");
    return EPSet::progression(b, step);
  }
  s.fail("expected a set");
}

EPSet term(Scanner& s, const SetHook* hook) {
  EPSet e = atom(s, hook);
  while (s.accept("&")) e = e.intersect(atom(s, hook));
  return e;
}

}  // namespace

EPSet parse_epset_expr(Scanner& s, const SetHook* hook) {
  EPSet e = term(s, hook);
  for (;;) {
    if (s.accept("|"))
      e = e.unite(term(s, hook));
    else if (s.accept("\\"))
      e = e.minus(term(s, hook));
    else
      return e;
  }
}

bool starts_affine(const Scanner& s) {
  return s.peek().kind == Tok::Int || (s.peek().kind == Tok::Ident && s.peek().text == "n");
}

Affine parse_affine(Scanner& s) {
  Affine f;
  bool has_n = false;
  if (s.peek().kind == Tok::Int) {
    Natural c = s.next().value;
    if (s.accept("*")) {
      s.expect("n");
      f.coef = c;
      has_n = true;
    } else {
      f.offset = static_cast<std::int64_t>(c);
    }
  } else {
    s.expect("n");
    f.coef = 1;
    has_n = true;
  }
  if (has_n) {
    if (f.coef == 0) s.fail("coefficient of n must be positive");
    if (s.accept("+"))
      f.offset = static_cast<std::int64_t>(s.expect_int());
    else if (s.accept("-"))
      f.offset = -static_cast<std::int64_t>(s.expect_int());
  }
  return f;
}

}  // namespace ugk::detail
