#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oodc/source.hpp"

namespace oodc {

enum class Severity { Error, Warning, Note };

std::string_view severity_name(Severity severity);

/// Codes: E0xx lexing/parsing, E02x class table, E1xx attribution,
/// W0xx warnings, N0xx notes, R0xx runtime.
struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  Span span;
  std::string message;
};

Diagnostic make_error(std::string code, Span span, std::string message);

/// `file:line:col: severity[CODE]: message`
std::string format_diagnostic(const Diagnostic& diagnostic);

/// Orders by (file, line, column, code) and then message so output is stable.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

/// Sorted, one formatted line per diagnostic, each terminated by '\n'.
std::string format_diagnostics(std::vector<Diagnostic> diagnostics);

bool has_errors(std::span<const Diagnostic> diagnostics, bool warnings_as_errors = false);

/// A value together with the diagnostics produced while computing it. The
/// value is absent when any error was reported.
template <typename T>
struct Result {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool ok() const { return value.has_value(); }

  static Result success(T v, std::vector<Diagnostic> diags = {}) {
    return Result{std::move(v), std::move(diags)};
  }
  static Result failure(std::vector<Diagnostic> diags) {
    return Result{std::nullopt, std::move(diags)};
  }
};

}  // namespace oodc
