#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oodc/ast.hpp"
#include "oodc/value.hpp"

namespace oodc::test {

/// Random infix expression over identifiers a..e with up to `max_ops` binary
/// operators drawn from + - * / % << >> & ^ | < <= > >=.
std::string random_operator_expression(std::mt19937& rng, int max_ops);

/// Shunting-yard parse of a space-free-or-spaced infix expression built only
/// from identifiers and binary operators, rendered as `(op lhs rhs)`. Written
/// independently of the compiler's parser.
std::string precedence_oracle(const std::string& expression);

/// Random syntactically valid expression tree (no Paren nodes) of depth <= `depth`.
Expr random_expr(std::mt19937& rng, int depth);
/// Random unit with one class whose methods hold random statements.
Unit random_unit(std::mt19937& rng, int depth);

/// A random well-typed program mixing BigInteger and int operators, together
/// with its output computed by direct evaluation of the generated tree.
struct RandomProgram {
  std::string source;
  std::string expected_output;  // empty when evaluation divides by zero
  bool divides_by_zero = false;
};
RandomProgram random_bigint_program(std::mt19937& rng, int depth);

/// Positive and negative operator-rule fixtures under tests/fixtures/rules.
struct RuleCase {
  std::string rule;         // e.g. "+", "<=", "[]=", "valueOf"
  std::string file;         // relative to tests/
  std::string method;       // resolved method name (positive cases)
  std::string desugared;    // a line expected verbatim in the desugared output
  std::string output;       // interpreted output (positive cases)
  std::string code;         // expected diagnostic code (negative cases)
};
const std::vector<RuleCase>& positive_rule_cases();
const std::vector<RuleCase>& negative_rule_cases();

}  // namespace oodc::test
