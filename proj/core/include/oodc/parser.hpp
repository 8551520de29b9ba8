#pragma once

#include <span>
#include <string_view>

#include "oodc/ast.hpp"
#include "oodc/diagnostic.hpp"
#include "oodc/token.hpp"

namespace oodc {

/// Parses a compilation unit. Stops at the first syntax error.
///
/// Errors: E010 unexpected token, E011 unbalanced delimiter,
/// E012 duplicate type parameter.
Result<Unit> parse_unit(std::span<const Token> tokens);

/// Parses a single expression spanning the whole token stream.
Result<Expr> parse_expression(std::span<const Token> tokens);

/// tokenize + parse_unit.
Result<Unit> parse_source(std::string_view source, std::string_view file_id);

/// tokenize + parse_expression.
Result<Expr> parse_expression_source(std::string_view source, std::string_view file_id = "<expr>");

}  // namespace oodc
