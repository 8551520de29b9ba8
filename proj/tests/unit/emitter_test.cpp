#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oodc/emitter.hpp"
#include "oodc/parser.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace oodc {
namespace {

Expr node(ExprKind kind, std::string text = {}) {
  Expr e;
  e.kind = kind;
  e.text = std::move(text);
  return e;
}

Expr binary(Op op, Expr l, Expr r) {
  Expr e = node(ExprKind::Binary);
  e.op = op;
  e.children = {std::move(l), std::move(r)};
  return e;
}

Expr unary(Op op, Expr x) {
  Expr e = node(ExprKind::Unary);
  e.op = op;
  e.children = {std::move(x)};
  return e;
}

Expr name(std::string n) { return node(ExprKind::Name, std::move(n)); }

TEST(Emitter, ForcedParentheses) {
  EXPECT_EQ(emit_expr(binary(Op::Mul, binary(Op::Add, name("a"), name("b")), name("c"))), "(a + b) * c");
  EXPECT_EQ(emit_expr(binary(Op::Sub, name("a"), binary(Op::Sub, name("b"), name("c")))), "a - (b - c)");
  EXPECT_EQ(emit_expr(binary(Op::Sub, binary(Op::Sub, name("a"), name("b")), name("c"))), "a - b - c");
  EXPECT_EQ(emit_expr(unary(Op::Neg, unary(Op::Neg, name("a")))), "- -a");
  EXPECT_EQ(emit_expr(unary(Op::Neg, binary(Op::Add, name("a"), name("b")))), "-(a + b)");
}

TEST(Emitter, ReceiversAreWrapped) {
  Expr call = node(ExprKind::MethodCall, "add");
  call.has_receiver = true;
  call.children = {binary(Op::Add, name("a"), name("b")), name("c")};
  EXPECT_EQ(emit_expr(call), "(a + b).add(c)");
  Expr neg = node(ExprKind::MethodCall, "negate");
  neg.has_receiver = true;
  neg.children = {unary(Op::Neg, name("a"))};
  EXPECT_EQ(emit_expr(neg), "(-a).negate()");
}

TEST(Emitter, DesugaredCompUnit) {
  auto p = test::check_file("fixtures/examples/comp_bigint.mj");
  ASSERT_TRUE(p.ok());
  EXPECT_NE(test::desugar_text(p).find("        return a.negate().add(b.multiply(c));\n"), std::string::npos);
}

TEST(Emitter, CorpusRoundTrip) {
  auto files = test::list_files("corpus/plain", ".mj");
  for (const auto& f : test::list_files("fixtures/examples", ".mj")) files.push_back(f);
  for (const auto& f : test::list_files("fixtures/rules", ".mj")) files.push_back(f);
  for (const auto& file : files) {
    auto parsed = parse_source(test::read_text(file), file);
    ASSERT_TRUE(parsed.ok()) << file;
    std::string text = emit(*parsed.value);
    auto again = parse_source(text, file);
    ASSERT_TRUE(again.ok()) << file << "\n" << text;
    EXPECT_TRUE(structurally_equal(*parsed.value, *again.value)) << file;
    EXPECT_EQ(emit(*again.value), text) << file;
  }
}

TEST(Emitter, RandomExpressionRoundTrip) {
  std::mt19937 rng(1234);
  for (int i = 0; i < 500; ++i) {
    Expr e = test::random_expr(rng, 6);
    std::string text = emit_expr(e);
    auto back = parse_expression_source(text);
    ASSERT_TRUE(back.ok()) << text;
    EXPECT_TRUE(structurally_equal(e, *back.value)) << text << "\n" << to_sexpr(e) << "\n" << to_sexpr(*back.value);
  }
}

TEST(Emitter, RandomUnitRoundTrip) {
  std::mt19937 rng(4321);
  for (int i = 0; i < 500; ++i) {
    Unit u = test::random_unit(rng, 4);
    std::string text = emit(u);
    auto back = parse_source(text, "random.mj");
    ASSERT_TRUE(back.ok()) << text;
    EXPECT_TRUE(structurally_equal(u, *back.value)) << text;
  }
}

TEST(Emitter, Deterministic) {
  auto p = test::check_file("fixtures/examples/point.mj");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(test::desugar_text(p), test::desugar_text(p));
  EXPECT_EQ(emit(p.units[0]), emit(p.units[0]));
}

TEST(Emitter, Layout) {
  auto parsed = parse_source(
      "class A{int x;int y;A(){x=1;}int f(int a){if(a<0){return 0;}else if(a<1)return 1;else{while(a>1)a=a-1;}return a;}}",
      "t.mj");
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(emit(*parsed.value),
            "class A {\n"
            "    int x;\n"
            "    int y;\n"
            "\n"
            "    A() {\n"
            "        x = 1;\n"
            "    }\n"
            "\n"
            "    int f(int a) {\n"
            "        if (a < 0) {\n"
            "            return 0;\n"
            "        } else if (a < 1)\n"
            "            return 1;\n"
            "        else {\n"
            "            while (a > 1)\n"
            "                a = a - 1;\n"
            "        }\n"
            "        return a;\n"
            "    }\n"
            "}\n");
}

}  // namespace
}  // namespace oodc
