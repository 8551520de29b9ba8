#include "oodc/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace oodc {

std::string_view severity_name(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Note: return "note";
  }
  return "error";
}

Diagnostic make_error(std::string code, Span span, std::string message) {
  return Diagnostic{std::move(code), Severity::Error, std::move(span), std::move(message)};
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.span.file;
  out += ':' + std::to_string(d.span.line) + ':' + std::to_string(d.span.column) + ": ";
  out += severity_name(d.severity);
  out += '[' + d.code + "]: " + d.message;
  return out;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.span.file, a.span.line, a.span.column, a.code, a.message) <
           std::tie(b.span.file, b.span.line, b.span.column, b.code, b.message);
  });
}

std::string format_diagnostics(std::vector<Diagnostic> diagnostics) {
  sort_diagnostics(diagnostics);
  std::string out;
  for (const auto& d : diagnostics) {
    out += format_diagnostic(d);
    out += '\n';
  }
  return out;
}

bool has_errors(std::span<const Diagnostic> diagnostics, bool warnings_as_errors) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [&](const Diagnostic& d) {
    return d.severity == Severity::Error || (warnings_as_errors && d.severity == Severity::Warning);
  });
}

}  // namespace oodc
