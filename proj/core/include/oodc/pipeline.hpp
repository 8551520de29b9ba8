#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oodc/ast.hpp"
#include "oodc/class_table.hpp"
#include "oodc/diagnostic.hpp"
#include "oodc/interpreter.hpp"
#include "oodc/source.hpp"
#include "oodc/typecheck.hpp"

namespace oodc {

/// Stub library sources compiled into the binary.
std::vector<SourceFile> bundled_stubs();

/// Parsed, table-built and (when the table succeeded) attributed program.
struct Program {
  std::vector<Unit> stubs;
  std::vector<Unit> units;
  std::optional<ClassTable> table;
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool ok(bool warnings_as_errors = false) const {
    return table.has_value() && !has_errors(diagnostics, warnings_as_errors);
  }
};

Program check_sources(std::span<const SourceFile> sources, std::span<const SourceFile> stubs,
                      Mode mode);
Program check_units(std::vector<Unit> units, std::vector<Unit> stubs, Mode mode);

/// Desugars every user unit of an error-free program.
std::vector<Unit> desugar_program(const Program& program);

/// Desugar, re-check in base mode, and interpret. A failed re-check is
/// reported through `diagnostics` of the returned program.
struct ExecutedProgram {
  Program plain;
  RunOutcome outcome;
};
ExecutedProgram execute(const Program& checked, std::string_view entry_class = {},
                        std::ostream* stream = nullptr);

}  // namespace oodc
