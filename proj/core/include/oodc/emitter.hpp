#pragma once

#include <string>

#include "oodc/ast.hpp"

namespace oodc {

/// Pretty-prints a unit: 4-space indentation, one statement per line, LF
/// newlines. Parentheses are added only where the tree's nesting would
/// otherwise be re-parsed differently.
std::string emit(const Unit& unit);

std::string emit_expr(const Expr& expr);
std::string emit_stmt(const Stmt& stmt, int indent = 0);

}  // namespace oodc
