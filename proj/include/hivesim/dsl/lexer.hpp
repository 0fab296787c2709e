#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hivesim::dsl {

enum class TokenKind {
  Identifier,
  String,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Equals,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;  // identifier name, string contents, or number literal
  int line = 1;
  int col = 1;
};

struct LexError {
  std::string message;
  int line = 1;
  int col = 1;
};

// Tokenizes a whole program. `#` starts a comment running to end of line.
// Returns false on the first lexical error (reported via `error`).
bool lex(std::string_view source, std::vector<Token>& out, LexError& error);

}  // namespace hivesim::dsl
