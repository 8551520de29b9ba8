#pragma once

#include <string>
#include <vector>

#include "oodc/pipeline.hpp"

namespace oodc::test {

/// Root of tests/ in the source tree.
std::string data_dir();
/// Reads a file; relative paths are resolved against data_dir().
std::string read_text(const std::string& path);
/// Sorted paths (relative to data_dir()) of files in `rel_dir` with `ext`.
std::vector<std::string> list_files(const std::string& rel_dir, const std::string& ext);

Program check_text(const std::string& text, const std::string& file = "test.mj",
                   Mode mode = Mode::overloading());
Program check_file(const std::string& rel, Mode mode = Mode::overloading());

std::string emit_all(const std::vector<Unit>& units);
/// Emitted desugared source of every user unit.
std::string desugar_text(const Program& program);
ExecutedProgram run_program(const Program& program);

/// Operator nodes whose resolution is not Builtin, in pre-order.
std::vector<const Expr*> overloaded_nodes(const Unit& unit);
/// Names of every overloading target in the unit (operators and valueOf
/// conversions, including those recorded on declarations), in pre-order.
std::vector<std::string> resolved_methods(const Unit& unit);
/// Error, warning and note codes in sorted diagnostic order, comma separated.
std::string diagnostic_codes(const Program& program);
/// First line of `text` containing `needle`, without leading indentation.
std::string line_containing(const std::string& text, const std::string& needle);

}  // namespace oodc::test
