#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "oodc/emitter.hpp"

namespace oodc::test {

namespace fs = std::filesystem;

std::string data_dir() { return OODC_TEST_DATA_DIR; }

std::string read_text(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) p = fs::path(data_dir()) / p;
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> list_files(const std::string& rel_dir, const std::string& ext) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(fs::path(data_dir()) / rel_dir))
    if (e.path().extension() == ext) out.push_back(rel_dir + "/" + e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

Program check_text(const std::string& text, const std::string& file, Mode mode) {
  std::vector<SourceFile> src{{file, text}};
  return check_sources(src, bundled_stubs(), mode);
}

Program check_file(const std::string& rel, Mode mode) { return check_text(read_text(rel), rel, mode); }

std::string emit_all(const std::vector<Unit>& units) {
  std::string out;
  for (const auto& u : units) out += emit(u);
  return out;
}

std::string desugar_text(const Program& program) { return emit_all(desugar_program(program)); }

ExecutedProgram run_program(const Program& program) { return execute(program); }

std::vector<const Expr*> overloaded_nodes(const Unit& unit) {
  std::vector<const Expr*> out;
  for_each_expr(unit, [&](const Expr& e) {
    if (e.attr && e.attr->resolution && !e.attr->resolution->is_builtin()) out.push_back(&e);
  });
  return out;
}

namespace {

void collect_methods(const Stmt& s, std::vector<std::string>& out) {
  if (s.attr && s.attr->resolution && !s.attr->resolution->is_builtin())
    out.emplace_back(s.attr->resolution->method_name());
  if (s.expr)
    for_each_expr(*s.expr, [&](const Expr& e) {
      if (e.attr && e.attr->resolution && !e.attr->resolution->is_builtin())
        out.emplace_back(e.attr->resolution->method_name());
    });
  for (const auto& c : s.body) collect_methods(c, out);
}

}  // namespace

std::vector<std::string> resolved_methods(const Unit& unit) {
  std::vector<std::string> out;
  for (const auto& cls : unit.classes)
    for (const auto& m : cls.members)
      if (m.body) collect_methods(*m.body, out);
  return out;
}

std::string diagnostic_codes(const Program& program) {
  std::string out;
  for (const auto& d : program.diagnostics) out += (out.empty() ? "" : ",") + d.code;
  return out;
}

std::string line_containing(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find(needle) == std::string::npos) continue;
    auto first = line.find_first_not_of(' ');
    return first == std::string::npos ? std::string() : line.substr(first);
  }
  return {};
}

}  // namespace oodc::test
