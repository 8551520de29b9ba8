#pragma once

#include "oodc/ast.hpp"

namespace oodc {

/// Rewrites every overloaded operator and valueOf conversion of an attributed,
/// error-free unit into the equivalent explicit method call:
///
///   e1 + e2      ->  e1.add(e2)           (and the other binary operators)
///   -e, ~e       ->  e.negate(), e.not()
///   e1 <= e2     ->  e1.compareTo(e2) <= 0
///   e1[e2]       ->  e1.get(e2)
///   e1[e2] = e3  ->  e1.set(e2, e3) or e1.put(e2, e3)
///   T v = e      ->  T v = T.valueOf(e)
///
/// Builtin nodes are copied unchanged. The result carries no attribution.
Unit desugar_unit(const Unit& typed);

Expr desugar_expr(const Expr& typed);

}  // namespace oodc
