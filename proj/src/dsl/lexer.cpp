#include "hivesim/dsl/lexer.hpp"

#include <cctype>

namespace hivesim::dsl {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool lex(std::string_view source, std::vector<Token>& out, LexError& error) {
  out.clear();
  int line = 1, col = 1;
  size_t i = 0;
  const size_t n = source.size();

  auto advance = [&](size_t count) {
    for (size_t k = 0; k < count && i < n; ++k, ++i) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < n) {
    const char c = source[i];
    if (c == '#') {
      while (i < n && source[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tline = line, tcol = col;
    switch (c) {
      case '(': out.push_back({TokenKind::LParen, "(", tline, tcol}); advance(1); continue;
      case ')': out.push_back({TokenKind::RParen, ")", tline, tcol}); advance(1); continue;
      case '[': out.push_back({TokenKind::LBracket, "[", tline, tcol}); advance(1); continue;
      case ']': out.push_back({TokenKind::RBracket, "]", tline, tcol}); advance(1); continue;
      case ',': out.push_back({TokenKind::Comma, ",", tline, tcol}); advance(1); continue;
      case '=': out.push_back({TokenKind::Equals, "=", tline, tcol}); advance(1); continue;
      default: break;
    }
    if (c == '\'' || c == '"') {
      const char quote = c;
      advance(1);
      std::string value;
      bool closed = false;
      while (i < n) {
        if (source[i] == quote) {
          closed = true;
          advance(1);
          break;
        }
        if (source[i] == '\n') break;  // strings do not span lines
        value.push_back(source[i]);
        advance(1);
      }
      if (!closed) {
        error = {"unterminated string literal", tline, tcol};
        return false;
      }
      out.push_back({TokenKind::String, std::move(value), tline, tcol});
      continue;
    }
    if (is_ident_start(c)) {
      std::string value;
      while (i < n && is_ident_char(source[i])) {
        value.push_back(source[i]);
        advance(1);
      }
      out.push_back({TokenKind::Identifier, std::move(value), tline, tcol});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < n && std::isdigit(static_cast<unsigned char>(source[i + 1])))) {
      std::string value;
      if (c == '-') {
        value.push_back('-');
        advance(1);
      }
      bool seen_dot = false;
      while (i < n && (std::isdigit(static_cast<unsigned char>(source[i])) ||
                       (!seen_dot && source[i] == '.'))) {
        seen_dot = seen_dot || source[i] == '.';
        value.push_back(source[i]);
        advance(1);
      }
      out.push_back({TokenKind::Number, std::move(value), tline, tcol});
      continue;
    }
    error = {std::string("unexpected character '") + c + "'", tline, tcol};
    return false;
  }
  out.push_back({TokenKind::End, "", line, col});
  return true;
}

}  // namespace hivesim::dsl
