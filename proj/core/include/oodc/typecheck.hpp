#pragma once

#include <vector>

#include "oodc/ast.hpp"
#include "oodc/class_table.hpp"
#include "oodc/diagnostic.hpp"

namespace oodc {

/// `base_only` disables the operator-overloading rules; the checker then
/// accepts exactly the unextended language.
struct Mode {
  bool base_only = false;

  static Mode overloading() { return Mode{false}; }
  static Mode base() { return Mode{true}; }
};

struct AttributedUnit {
  Unit unit;
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool ok() const { return !has_errors(diagnostics); }
};

/// Types every expression of `unit`. Base typing rules are always tried
/// first; overloading rules apply only where they fail. Every operator node
/// receives an OperatorResolution.
///
/// Errors: E100 unknown name, E101 type mismatch, E102 static context,
/// E104 no applicable method or constructor, E107 integer literal out of range,
/// E108 duplicate local variable, E120 ambiguous method, E130 operator not
/// applicable, E131 compareTo does not return int, E140 incompatible
/// assignment, E141 valueOf is not static.
/// Warnings: W050 both set and put applicable. Notes: N051 value of an
/// overloaded index assignment is used.
AttributedUnit attribute_unit(Unit unit, const ClassTable& table, Mode mode);

}  // namespace oodc
