#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

#include "oodc/desugar.hpp"
#include "oodc/emitter.hpp"
#include "oodc/parser.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace oodc {
namespace {

using test::check_file;
using test::check_text;

std::string desugared_return(const std::string& params, const std::string& ret, const std::string& expr) {
  auto p = check_text("class T { static " + ret + " f(" + params + ") { return " + expr + "; } }\n");
  EXPECT_TRUE(p.ok()) << test::diagnostic_codes(p);
  if (!p.ok()) return {};
  return test::line_containing(test::desugar_text(p), "return ");
}

TEST(Desugar, BigIntegerComp) {
  EXPECT_EQ(desugared_return("BigInteger a, BigInteger b, BigInteger c", "BigInteger", "-a + b*c"),
            "return a.negate().add(b.multiply(c));");
}

TEST(Desugar, PrecedenceIsKept) {
  EXPECT_EQ(desugared_return("BigInteger a, BigInteger b, BigInteger c", "BigInteger", "a+b*c"),
            "return a.add(b.multiply(c));");
  EXPECT_EQ(desugared_return("BigInteger a, BigInteger b, BigInteger c", "BigInteger", "(a+b)*c"),
            "return a.add(b).multiply(c);");
}

TEST(Desugar, Compare) {
  EXPECT_EQ(desugared_return("BigInteger e1, BigInteger e2", "boolean", "e1 <= e2"),
            "return e1.compareTo(e2) <= 0;");
  EXPECT_EQ(desugared_return("BigInteger a, BigInteger b, BigInteger c", "boolean", "a + b > c"),
            "return a.add(b).compareTo(c) > 0;");
}

TEST(Desugar, IndexAndUnary) {
  EXPECT_EQ(desugared_return("List<BigInteger> l, int i", "BigInteger", "-l[i] + ~l[i + 1]"),
            "return l.get(i).negate().add(l.get(i + 1).not());");
  EXPECT_EQ(desugared_return("List<BigInteger> l, BigInteger v", "BigInteger", "l[0] = v"),
            "return l.set(0, v);");
  EXPECT_EQ(desugared_return("Map<String, Integer> m, String k", "Integer", "m[k] = m[k]"),
            "return m.put(k, m.get(k));");
}

TEST(Desugar, MixedBuiltinAndOverloaded) {
  EXPECT_EQ(desugared_return("BigInteger a, int n, int m", "BigInteger", "a << n * m + 1"),
            "return a.shiftLeft(n * m + 1);");
  EXPECT_EQ(desugared_return("BigInteger a, String s", "String", "s + -a"), "return s + a.negate();");
}

TEST(Desugar, ValueOf) {
  auto p = check_file("fixtures/examples/valueof.mj");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(test::line_containing(test::desugar_text(p), "BigInteger a"), "BigInteger a = BigInteger.valueOf(1);");
  auto q = check_text("class A { static BigInteger f(BigInteger a) { a = 3; return a; } }");
  ASSERT_TRUE(q.ok());
  EXPECT_EQ(test::line_containing(test::desugar_text(q), "a = "), "a = BigInteger.valueOf(3);");
}

TEST(Desugar, PlainProgramsAreUnchanged) {
  for (const auto& file : test::list_files("corpus/plain", ".mj")) {
    auto p = check_file(file);
    ASSERT_TRUE(p.ok()) << file;
    auto parsed = parse_source(test::read_text(file), file);
    auto out = desugar_program(p);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_TRUE(structurally_equal(out[0], *parsed.value)) << file;
  }
}

std::vector<std::string> fixture_files() {
  auto files = test::list_files("fixtures/examples", ".mj");
  for (const auto& f : test::list_files("fixtures/rules", ".mj"))
    if (f.find("/neg_") == std::string::npos) files.push_back(f);
  return files;
}

TEST(Desugar, Idempotent) {
  for (const auto& file : fixture_files()) {
    auto p = check_file(file);
    ASSERT_TRUE(p.ok()) << file;
    auto once = desugar_program(p);
    auto again = check_units(once, p.stubs, Mode::overloading());
    ASSERT_TRUE(again.ok()) << file;
    EXPECT_TRUE(test::overloaded_nodes(again.units[0]).empty()) << file;
    auto twice = desugar_program(again);
    EXPECT_TRUE(structurally_equal(once[0], twice[0])) << file;
    EXPECT_EQ(emit(once[0]), emit(twice[0])) << file;
  }
}

// Every non-parenthesis node of the typed tree survives exactly once.
TEST(Desugar, OperandsPreservedOnce) {
  for (const auto& file : fixture_files()) {
    auto p = check_file(file);
    ASSERT_TRUE(p.ok()) << file;
    std::map<int, int> before, after;
    for_each_expr(p.units[0], [&](const Expr& e) {
      if (e.kind != ExprKind::Paren) ++before[e.id];
    });
    auto out = desugar_unit(p.units[0]);
    for_each_expr(out, [&](const Expr& e) {
      if (e.id >= 0) ++after[e.id];
    });
    for (const auto& [id, n] : before) {
      EXPECT_EQ(n, 1) << file;
      EXPECT_EQ(after[id], 1) << file << " node " << id;
    }
  }
}

// Random BigInteger programs desugar to programs the base checker accepts.
TEST(Desugar, RandomProgramsClose) {
  std::mt19937 rng(99);
  for (int i = 0; i < 60; ++i) {
    auto gen = test::random_bigint_program(rng, 4);
    auto p = check_text(gen.source, "gen.mj");
    ASSERT_TRUE(p.ok()) << gen.source << test::diagnostic_codes(p);
    auto text = test::desugar_text(p);
    auto base = check_text(text, "gen.mj", Mode::base());
    EXPECT_TRUE(base.ok()) << text << test::diagnostic_codes(base);
  }
}

}  // namespace
}  // namespace oodc
