#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oodc/cli.hpp"
#include "support.hpp"

namespace oodc {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& rel) { return test::data_dir() + "/" + rel; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("oodc_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

TEST(Cli, DesugarComp) {
  auto r = run({"desugar", fixture("fixtures/examples/comp_bigint.mj")});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("a.negate().add(b.multiply(c))"), std::string::npos);
  EXPECT_EQ(r.err, "");
}

TEST(Cli, CheckWithoutExtension) {
  auto r = run({"check", "--no-oo", fixture("fixtures/examples/comp_bigint.mj")});
  EXPECT_EQ(r.code, cli::kExitDiagnostics);
  const std::string file = fixture("fixtures/examples/comp_bigint.mj");
  EXPECT_EQ(r.err,
            file + ":3:16: error[E130]: operator '-' not applicable to types BigInteger\n" +
                file + ":3:19: error[E130]: operator '+' not applicable to types BigInteger, BigInteger\n" +
                file + ":3:22: error[E130]: operator '*' not applicable to types BigInteger, BigInteger\n");
}

TEST(Cli, RunPoint) {
  auto r = run({"run", fixture("fixtures/examples/point.mj")});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "(14.0,18.0)\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check", "/nonexistent/x.mj"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check", "--stubs", "/nonexistent", fixture("fixtures/examples/comp_int.mj")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, RuntimeErrorExitCode) {
  auto dir = scratch("runtime");
  write(dir / "z.mj", "class Z {\n    static void main() {\n        int z = 0;\n        int y = 1 / z;\n    }\n}\n");
  auto r = run({"run", (dir / "z.mj").string()});
  EXPECT_EQ(r.code, cli::kExitRuntime);
  EXPECT_NE(r.err.find(":4:19: error[R003]:"), std::string::npos) << r.err;
}

TEST(Cli, DiagnosticsSortedAcrossFiles) {
  auto dir = scratch("sorted");
  write(dir / "b.mj", "class B {\n    int f() { return q; }\n    int g() { return true; }\n}\n");
  write(dir / "a.mj", "class A {\n    int f() { return p; }\n}\n");
  auto r = run({"check", (dir / "b.mj").string(), (dir / "a.mj").string()});
  EXPECT_EQ(r.code, cli::kExitDiagnostics);
  std::vector<std::string> lines;
  std::istringstream in(r.err);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 3u) << r.err;
  EXPECT_NE(lines[0].find("a.mj:2:22: error[E100]"), std::string::npos) << lines[0];
  EXPECT_NE(lines[1].find("b.mj:2:22: error[E100]"), std::string::npos) << lines[1];
  EXPECT_NE(lines[2].find("b.mj:3:22: error[E101]"), std::string::npos) << lines[2];
}

TEST(Cli, WarningsAsErrors) {
  const std::string file = fixture("fixtures/rules/warn_set_put.mj");
  auto plain = run({"check", file});
  EXPECT_EQ(plain.code, cli::kExitOk);
  EXPECT_EQ(plain.err, file + ":13:14: warning[W050]: both 'set' and 'put' applicable; 'set' chosen\n");
  EXPECT_EQ(run({"check", "--warnings-as-errors", file}).code, cli::kExitDiagnostics);
}

// Desugared files written with --out check cleanly without the extension.
TEST(Cli, DesugarOutClosesUnderBaseCheck) {
  auto dir = scratch("out");
  for (const auto& f : test::list_files("fixtures/examples", ".mj")) {
    auto r = run({"desugar", "--out", dir.string(), fixture(f)});
    ASSERT_EQ(r.code, cli::kExitOk) << f << r.err;
    const auto name = fs::path(f).filename();
    ASSERT_TRUE(fs::exists(dir / name)) << f;
    auto c = run({"check", "--no-oo", (dir / name).string()});
    EXPECT_EQ(c.code, cli::kExitOk) << f << c.err;
  }
}

TEST(Cli, StubsDirectory) {
  auto dir = scratch("stubs");
  for (const auto& s : bundled_stubs()) write(dir / s.name, s.text);
  write(dir / "Extra.mj", "class Extra {\n    static native int answer();\n}\n");
  auto src = scratch("stubs_src");
  write(src / "u.mj", "class U {\n    static int f() {\n        return Extra.answer();\n    }\n}\n");
  EXPECT_EQ(run({"check", "--stubs", dir.string(), (src / "u.mj").string()}).code, cli::kExitOk);
  EXPECT_EQ(run({"check", (src / "u.mj").string()}).code, cli::kExitDiagnostics);
}

TEST(Cli, EmitAst) {
  auto r = run({"emit-ast", fixture("fixtures/examples/comp_bigint.mj")});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("{negate}"), std::string::npos) << r.out;
}

TEST(Cli, Deterministic) {
  const std::string file = fixture("fixtures/examples/point.mj");
  auto a = run({"desugar", file});
  auto b = run({"desugar", file});
  EXPECT_EQ(a.out, b.out);
  auto c = run({"check", "--no-oo", file});
  auto d = run({"check", "--no-oo", file});
  EXPECT_EQ(c.err, d.err);
}

}  // namespace
}  // namespace oodc
