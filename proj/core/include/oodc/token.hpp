#pragma once

#include <string>
#include <string_view>

#include "oodc/source.hpp"

namespace oodc {

enum class TokenKind {
  Keyword,
  Identifier,
  IntLiteral,
  LongLiteral,
  DoubleLiteral,
  StringLiteral,
  Symbol,  // operators and punctuation
  Eof,
};

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string lexeme;
  Span span;
  // Whitespace and comments between the previous token and this one.
  std::string leading_trivia;

  [[nodiscard]] bool is(std::string_view text) const {
    return (kind == TokenKind::Symbol || kind == TokenKind::Keyword) && lexeme == text;
  }
};

std::string_view token_kind_name(TokenKind kind);

}  // namespace oodc
