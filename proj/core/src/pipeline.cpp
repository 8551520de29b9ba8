#include "oodc/pipeline.hpp"

#include "oodc/desugar.hpp"
#include "oodc/parser.hpp"

namespace oodc {
namespace {

void append(std::vector<Diagnostic>& to, std::vector<Diagnostic> from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

std::vector<Unit> parse_all(std::span<const SourceFile> files, std::vector<Diagnostic>& diags, bool& ok) {
  std::vector<Unit> units;
  for (const auto& f : files) {
    auto r = parse_source(f.text, f.name);
    append(diags, std::move(r.diagnostics));
    if (r.value) units.push_back(std::move(*r.value));
    else ok = false;
  }
  return units;
}

}  // namespace

Program check_sources(std::span<const SourceFile> sources, std::span<const SourceFile> stubs, Mode mode) {
  std::vector<Diagnostic> diags;
  bool ok = true;
  auto stub_units = parse_all(stubs, diags, ok);
  auto units = parse_all(sources, diags, ok);
  if (!ok) {
    Program p;
    p.stubs = std::move(stub_units);
    p.units = std::move(units);
    p.diagnostics = std::move(diags);
    sort_diagnostics(p.diagnostics);
    return p;
  }
  Program p = check_units(std::move(units), std::move(stub_units), mode);
  append(p.diagnostics, std::move(diags));
  sort_diagnostics(p.diagnostics);
  return p;
}

Program check_units(std::vector<Unit> units, std::vector<Unit> stubs, Mode mode) {
  Program p;
  auto table = build_class_table(units, stubs);
  p.diagnostics = std::move(table.diagnostics);
  p.stubs = std::move(stubs);
  if (!table.value) {
    p.units = std::move(units);
    sort_diagnostics(p.diagnostics);
    return p;
  }
  p.table = std::move(table.value);
  for (auto& u : units) {
    auto attributed = attribute_unit(std::move(u), *p.table, mode);
    append(p.diagnostics, std::move(attributed.diagnostics));
    p.units.push_back(std::move(attributed.unit));
  }
  sort_diagnostics(p.diagnostics);
  return p;
}

std::vector<Unit> desugar_program(const Program& program) {
  std::vector<Unit> out;
  out.reserve(program.units.size());
  for (const auto& u : program.units) out.push_back(desugar_unit(u));
  return out;
}

ExecutedProgram execute(const Program& checked, std::string_view entry_class, std::ostream* stream) {
  ExecutedProgram run;
  run.plain = check_units(desugar_program(checked), checked.stubs, Mode::base());
  if (!run.plain.ok()) return run;
  run.outcome = evaluate_program(run.plain.units, *run.plain.table, entry_class, stream);
  return run;
}

}  // namespace oodc
