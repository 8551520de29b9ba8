#include <gtest/gtest.h>

#include <map>
#include <string>

#include "oodc/pipeline.hpp"
#include "support.hpp"

namespace oodc {
namespace {

using test::check_file;
using test::check_text;
using test::diagnostic_codes;

const Expr* return_of(const Program& p, std::string_view method_name) {
  for (const auto& u : p.units)
    for (const auto& c : u.classes)
      for (const auto& m : c.members)
        if (m.name == method_name && m.body)
          for (const auto& s : m.body->body)
            if (s.kind == StmtKind::Return && s.expr) return &*s.expr;
  return nullptr;
}

// Types `expr` as the return value of a static method with the given params.
Program typed(const std::string& params, const std::string& ret, const std::string& expr,
              Mode mode = Mode::overloading()) {
  return check_text("class T { static " + ret + " f(" + params + ") { return " + expr + "; } }\n" +
                        "class Rel { int compareTo(Rel o) { return 0; } }\n" +
                        "class Bad { String compareTo(Bad o) { return \"\"; } }\n",
                    "t.mj", mode);
}

std::string typed_tree(const Program& p) {
  const Expr* e = return_of(p, "f");
  return e ? to_sexpr(*e, true) : std::string("<none>");
}

TEST(Typecheck, BigIntegerCompIsFullyOverloaded) {
  auto p = check_file("fixtures/examples/comp_bigint.mj");
  ASSERT_TRUE(p.ok()) << diagnostic_codes(p);
  EXPECT_EQ(to_sexpr(*return_of(p, "comp"), true),
            "(+ (neg a:BigInteger):BigInteger{negate} (* b:BigInteger c:BigInteger):BigInteger{multiply})"
            ":BigInteger{add}");
  auto nodes = test::overloaded_nodes(p.units[0]);
  ASSERT_EQ(nodes.size(), 3u);
  EXPECT_EQ(nodes[0]->attr->resolution->method_name(), "add");
  EXPECT_EQ(nodes[1]->attr->resolution->method_name(), "negate");
  EXPECT_EQ(nodes[2]->attr->resolution->method_name(), "multiply");
}

TEST(Typecheck, IntCompIsBuiltinInBothModes) {
  for (Mode mode : {Mode::overloading(), Mode::base()}) {
    auto p = check_file("fixtures/examples/comp_int.mj", mode);
    ASSERT_TRUE(p.ok());
    EXPECT_TRUE(test::overloaded_nodes(p.units[0]).empty());
    EXPECT_EQ(to_sexpr(*return_of(p, "comp"), true), "(+ (neg a:int):int (* b:int c:int):int):int");
  }
}

TEST(Typecheck, BaseModeRejectsEveryOperator) {
  auto p = check_file("fixtures/examples/comp_bigint.mj", Mode::base());
  EXPECT_FALSE(p.ok());
  EXPECT_EQ(diagnostic_codes(p), "E130,E130,E130");
  auto q = check_file("fixtures/examples/point.mj", Mode::base());
  EXPECT_EQ(diagnostic_codes(q), "E130,E130,E130");
}

TEST(Typecheck, BinaryRules) {
  EXPECT_EQ(typed_tree(typed("BigInteger a, BigInteger b", "BigInteger", "a + b")),
            "(+ a:BigInteger b:BigInteger):BigInteger{add}");
  EXPECT_EQ(typed_tree(typed("int a, int b", "int", "a + b")), "(+ a:int b:int):int");
  EXPECT_EQ(typed_tree(typed("String s, BigInteger b", "String", "s + b")),
            "(+ s:String b:BigInteger):String");
  EXPECT_EQ(typed_tree(typed("BigInteger b, String s", "String", "b + s")),
            "(+ b:BigInteger s:String):String");
  EXPECT_EQ(typed_tree(typed("Integer a, int b", "int", "a * b")), "(* a:Integer b:int):int");
  EXPECT_EQ(typed_tree(typed("long a, int b", "long", "a << b")), "(<< a:long b:int):long");
  EXPECT_EQ(typed_tree(typed("BigInteger a, int n", "BigInteger", "a >> n")),
            "(>> a:BigInteger n:int):BigInteger{shiftRight}");
}

TEST(Typecheck, PointMultiplyByDouble) {
  auto p = check_text(test::read_text("fixtures/examples/point.mj") +
                          "class Q { static Point f(Point p, Double d) { return p * d; } }\n",
                      "q.mj");
  ASSERT_TRUE(p.ok()) << diagnostic_codes(p);
  EXPECT_EQ(to_sexpr(*return_of(p, "f"), true), "(* p:Point d:Double):Point{multiply}");
}

TEST(Typecheck, GenericCompOverTypeVariables) {
  auto p = check_file("fixtures/examples/point.mj");
  ASSERT_TRUE(p.ok()) << diagnostic_codes(p);
  EXPECT_EQ(to_sexpr(*return_of(p, "comp"), true),
            "(+ (neg a:TA):TA{negate} (* b:TA c:TM):TA{multiply}):TA{add}");
}

TEST(Typecheck, UnaryRules) {
  EXPECT_EQ(typed_tree(typed("BigInteger a", "BigInteger", "-a")), "(neg a:BigInteger):BigInteger{negate}");
  EXPECT_EQ(typed_tree(typed("int a", "int", "-a")), "(neg a:int):int");
  EXPECT_EQ(typed_tree(typed("BigInteger a", "BigInteger", "~a")), "(~ a:BigInteger):BigInteger{not}");
  EXPECT_EQ(typed_tree(typed("boolean a", "boolean", "!a")), "(! a:boolean):boolean");
}

TEST(Typecheck, CompareRules) {
  auto p = typed("BigInteger a, BigInteger b", "boolean", "a < b");
  EXPECT_EQ(typed_tree(p), "(< a:BigInteger b:BigInteger):boolean{compareTo}");
  const Expr* e = return_of(p, "f");
  EXPECT_EQ(e->attr->resolution->kind, ResolutionKind::OverloadedCompare);
  EXPECT_EQ(e->attr->resolution->relation, Op::Lt);
  EXPECT_EQ(typed_tree(typed("int a, int b", "boolean", "a <= b")), "(<= a:int b:int):boolean");
  EXPECT_EQ(typed_tree(typed("Rel a, Rel b", "boolean", "a >= b")), "(>= a:Rel b:Rel):boolean{compareTo}");
  EXPECT_EQ(diagnostic_codes(typed("Bad a, Bad b", "boolean", "a < b")), "E131");
}

TEST(Typecheck, IndexRules) {
  EXPECT_EQ(typed_tree(typed("List<Integer> l, int i", "Integer", "l[i]")),
            "([] l:List<Integer> i:int):Integer{get}");
  EXPECT_EQ(typed_tree(typed("int[] a, int i", "int", "a[i]")), "([] a:int[] i:int):int");
  auto p = check_text(test::read_text("fixtures/examples/point.mj") +
                          "class Q { static void f(Map<String, Point> m, String k, Point v) { m[k] = v; } }\n",
                      "q.mj");
  ASSERT_TRUE(p.ok()) << diagnostic_codes(p);
  auto nodes = test::overloaded_nodes(p.units[0]);
  ASSERT_FALSE(nodes.empty());
  EXPECT_EQ(to_sexpr(*nodes.back(), true), "([]= m:Map<String, Point> k:String v:Point):Point{put}");
}

TEST(Typecheck, AssignmentRules) {
  auto p = check_file("fixtures/examples/valueof.mj");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(test::resolved_methods(p.units[0]), std::vector<std::string>{"valueOf"});
  auto plain = check_text("class A { static int f() { int a = 1; return a; } }");
  ASSERT_TRUE(plain.ok());
  EXPECT_TRUE(test::resolved_methods(plain.units[0]).empty());
  auto bad = check_text(test::read_text("fixtures/examples/point.mj") +
                        "class Q { static void f() { String s = new Point(0.0, 0.0); } }\n");
  EXPECT_EQ(diagnostic_codes(bad), "E140");
  auto base = check_file("fixtures/examples/valueof.mj", Mode::base());
  EXPECT_EQ(diagnostic_codes(base), "E140");
}

TEST(Typecheck, ValueOfOnPlainAssignment) {
  auto p = check_text("class A { static BigInteger f() { BigInteger a = 2; a = 7; return a; } }");
  ASSERT_TRUE(p.ok()) << diagnostic_codes(p);
  EXPECT_EQ(test::resolved_methods(p.units[0]), (std::vector<std::string>{"valueOf", "valueOf"}));
}

TEST(Typecheck, OtherErrors) {
  EXPECT_EQ(diagnostic_codes(check_text("class A { int f() { return y; } }")), "E100");
  EXPECT_EQ(diagnostic_codes(check_text("class A { int f() { return true; } }")), "E101");
  EXPECT_EQ(diagnostic_codes(check_text("class A { int x; static int f() { return x; } }")), "E102");
  EXPECT_EQ(diagnostic_codes(check_text("class A { int f() { return g(1); } int g() { return 1; } }")), "E104");
  EXPECT_EQ(diagnostic_codes(check_text("class A { int f() { return 3000000000; } }")), "E107");
  EXPECT_EQ(diagnostic_codes(check_text("class A { void f() { int a = 1; int a = 2; } }")), "E108");
  EXPECT_EQ(diagnostic_codes(check_text("class A { void f() { if (1) { } } }")), "E101");
}

TEST(Typecheck, SetPreferredOverPut) {
  auto p = check_file("fixtures/rules/warn_set_put.mj");
  EXPECT_TRUE(p.ok());
  EXPECT_FALSE(p.ok(true));
  EXPECT_EQ(diagnostic_codes(p), "W050");
}

TEST(Typecheck, UsedIndexAssignmentValueIsNoted) {
  auto p = check_text("class A { static Integer f(List<Integer> l) { return l[0] = 5; } }");
  EXPECT_TRUE(p.ok());
  EXPECT_EQ(diagnostic_codes(p), "N051");
}

// Programs without overloaded operators are typed identically in both modes.
TEST(Typecheck, LowestPriorityOnCorpus) {
  for (const auto& file : test::list_files("corpus/plain", ".mj")) {
    auto oo = check_file(file);
    auto base = check_file(file, Mode::base());
    ASSERT_TRUE(oo.ok()) << file;
    ASSERT_TRUE(base.ok()) << file;
    EXPECT_EQ(dump_unit(oo.units[0], true), dump_unit(base.units[0], true)) << file;
    EXPECT_TRUE(test::overloaded_nodes(oo.units[0]).empty()) << file;
  }
}

void collect_types(const Unit& u, std::map<int, std::string>& out) {
  for_each_expr(u, [&](const Expr& e) {
    if (e.id >= 0 && e.attr) out[e.id] = e.attr->type.str();
  });
}

// Desugared nodes keep the type their operator had.
TEST(Typecheck, DesugarPreservesTypes) {
  std::vector<std::string> files = test::list_files("fixtures/examples", ".mj");
  for (const auto& f : test::list_files("fixtures/rules", ".mj"))
    if (f.find("/pos_") != std::string::npos) files.push_back(f);
  for (const auto& file : files) {
    auto oo = check_file(file);
    ASSERT_TRUE(oo.ok()) << file;
    auto re = check_units(desugar_program(oo), oo.stubs, Mode::base());
    ASSERT_TRUE(re.ok()) << file << ": " << diagnostic_codes(re);
    std::map<int, std::string> before, after;
    collect_types(oo.units[0], before);
    collect_types(re.units[0], after);
    int compared = 0;
    for (const auto& [id, type] : after) {
      auto it = before.find(id);
      if (it == before.end()) continue;
      EXPECT_EQ(type, it->second) << file << " node " << id;
      ++compared;
    }
    EXPECT_GT(compared, 0) << file;
  }
}

}  // namespace
}  // namespace oodc
