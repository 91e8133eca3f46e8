#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ugk/epset.hpp"
#include "ugk/ultragraph.hpp"

namespace ugk::detail {

enum class Tok { End, Ident, Int, Punct };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
  Natural value = 0;
};

/// Tokenizer shared by the DSL and expression parsers. With
/// `hash_comments`, `#` starts a comment running to the end of the line;
/// otherwise it is an ordinary punctuation token.
class Scanner {
 public:
  Scanner(std::string_view source, bool hash_comments);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Tok::End; }
  /// Consumes the next token when its text equals `text`.
  bool accept(std::string_view text);
  bool check(std::string_view text, std::size_t ahead = 0) const;
  Token expect(std::string_view text);
  Natural expect_int();
  std::string expect_ident();
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail(const std::string& message, const Token& at) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Called on an identifier the set grammar does not know; may consume
/// tokens and return a set, or return nullopt to reject it.
using SetHook = std::function<std::optional<EPSet>(Scanner&)>;

EPSet parse_epset_expr(Scanner& s, const SetHook* hook = nullptr);
/// INT, n, INT*n, with an optional `+INT` / `-INT` after a term in n.
Affine parse_affine(Scanner& s);
bool starts_affine(const Scanner& s);

}  // namespace ugk::detail
