#include "oodc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "oodc/emitter.hpp"
#include "oodc/pipeline.hpp"

namespace oodc::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::vector<std::string> files;
  bool no_oo = false;
  std::string stubs;
  std::string out_dir;
  std::string entry;
  bool warnings_as_errors = false;
};

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<SourceFile> load_stubs(const Options& opts) {
  if (opts.stubs.empty()) return bundled_stubs();
  std::error_code ec;
  if (!fs::is_directory(opts.stubs, ec)) throw UsageError{"stub directory '" + opts.stubs + "' not found"};
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(opts.stubs))
    if (entry.is_regular_file() && entry.path().extension() == ".mj") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<SourceFile> out;
  for (const auto& p : paths) out.push_back(SourceFile{p.filename().string(), read_file(p.string())});
  return out;
}

std::string describe(const RuntimeError& e) {
  Diagnostic d{e.code, Severity::Error, e.span, e.message};
  if (e.span.file.empty()) return "error[" + e.code + "]: " + e.message;
  return format_diagnostic(d);
}

int execute_command(const std::string& command, const Options& opts, std::ostream& out, std::ostream& err) {
  std::vector<SourceFile> sources;
  for (const auto& f : opts.files) sources.push_back(SourceFile{f, read_file(f)});
  auto stubs = load_stubs(opts);
  Mode mode = opts.no_oo ? Mode::base() : Mode::overloading();

  Program program = check_sources(sources, stubs, mode);
  err << format_diagnostics(program.diagnostics);
  const bool ok = program.ok(opts.warnings_as_errors);

  if (command == "emit-ast") {
    for (const auto& u : program.units) out << dump_unit(u, program.table.has_value());
    return ok ? kExitOk : kExitDiagnostics;
  }
  if (!ok) return kExitDiagnostics;
  if (command == "check") return kExitOk;

  if (command == "desugar") {
    auto plain = desugar_program(program);
    if (!opts.out_dir.empty()) fs::create_directories(opts.out_dir);
    for (std::size_t i = 0; i < plain.size(); ++i) {
      std::string text = emit(plain[i]);
      if (opts.out_dir.empty()) {
        out << text;
        continue;
      }
      fs::path target = fs::path(opts.out_dir) / fs::path(opts.files[i]).filename();
      std::ofstream file(target, std::ios::binary);
      if (!file) throw UsageError{"cannot write '" + target.string() + "'"};
      file << text;
    }
    return kExitOk;
  }

  // run
  auto executed = execute(program, opts.entry, &out);
  if (!executed.plain.ok()) {
    err << format_diagnostics(executed.plain.diagnostics);
    return kExitDiagnostics;
  }
  if (executed.outcome.error) {
    err << describe(*executed.outcome.error) << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"oodc: operator-overloading compiler for MJ-OO"};
  app.name("oodc");
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("files", opts.files, "MJ-OO source files")->required();
    sub->add_flag("--no-oo", opts.no_oo, "disable operator overloading (base language only)");
    sub->add_option("--stubs", opts.stubs, "directory of stub .mj files (default: bundled)");
    sub->add_flag("--warnings-as-errors", opts.warnings_as_errors, "treat warnings as errors");
  };
  auto* check = app.add_subcommand("check", "parse and type-check");
  auto* desugar = app.add_subcommand("desugar", "emit plain source with operators lowered to calls");
  auto* run_cmd = app.add_subcommand("run", "desugar and interpret");
  auto* ast = app.add_subcommand("emit-ast", "dump the attributed syntax tree");
  for (auto* sub : {check, desugar, run_cmd, ast}) add_common(sub);
  desugar->add_option("--out", opts.out_dir, "output directory (default: stdout)");
  run_cmd->add_option("--entry", opts.entry, "class whose static main() is run");

  std::vector<std::string> argv_store{"oodc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "oodc: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute_command(command, opts, out, err);
  } catch (const UsageError& e) {
    err << "oodc: " << e.message << '\n';
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "oodc: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace oodc::cli
