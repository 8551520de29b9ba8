#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "oodc/diagnostic.hpp"
#include "oodc/token.hpp"

namespace oodc {

/// Every symbol the lexer recognizes, two-character operators first.
std::span<const std::string_view> symbol_table();

bool is_keyword(std::string_view word);

/// Splits `source` into tokens ending with an EOF token. Concatenating each
/// token's leading trivia and lexeme reproduces `source` exactly.
///
/// Errors: E001 unrecognized character, E002 unterminated string literal,
/// E004 unterminated block comment.
Result<std::vector<Token>> tokenize(std::string_view source, std::string_view file_id);

}  // namespace oodc
