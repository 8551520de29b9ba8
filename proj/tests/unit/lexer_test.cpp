#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "oodc/lexer.hpp"

namespace oodc {
namespace {

std::vector<std::string> lexemes(std::string_view source) {
  auto r = tokenize(source, "t.mj");
  EXPECT_TRUE(r.ok());
  std::vector<std::string> out;
  if (r.value)
    for (const auto& t : *r.value) out.push_back(t.kind == TokenKind::Eof ? "<eof>" : t.lexeme);
  return out;
}

std::string first_code(std::string_view source) {
  auto r = tokenize(source, "t.mj");
  return r.diagnostics.empty() ? std::string() : r.diagnostics.front().code;
}

TEST(Lexer, UnaryMinusExpression) {
  auto r = tokenize("-a + b*c", "t.mj");
  ASSERT_TRUE(r.ok());
  const auto& t = *r.value;
  ASSERT_EQ(t.size(), 7u);
  EXPECT_TRUE(t[0].is("-"));
  EXPECT_EQ(t[1].kind, TokenKind::Identifier);
  EXPECT_EQ(t[1].lexeme, "a");
  EXPECT_TRUE(t[2].is("+"));
  EXPECT_EQ(t[3].lexeme, "b");
  EXPECT_TRUE(t[4].is("*"));
  EXPECT_EQ(t[5].lexeme, "c");
  EXPECT_EQ(t[6].kind, TokenKind::Eof);
}

TEST(Lexer, EmptyInputIsEof) {
  auto r = tokenize("", "t.mj");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.value->size(), 1u);
  EXPECT_EQ(r.value->front().kind, TokenKind::Eof);
}

TEST(Lexer, LessEqualIsOneToken) {
  EXPECT_EQ(lexemes("a <= b"), (std::vector<std::string>{"a", "<=", "b", "<eof>"}));
}

// Every ordered pair of operator characters lexes as one token exactly when
// the pair is a two-character operator of the language.
TEST(Lexer, MaximalMunchAgainstPairOracle) {
  const std::string chars = "+-*/%&|^~!<>=()[]{};,.";
  const std::set<std::string> pairs = {"<=", ">=", "==", "!=", "&&", "||", "<<", ">>"};
  int checked = 0;
  for (char a : chars)
    for (char b : chars) {
      std::string s{a, b};
      if (s == "//" || s == "/*") continue;
      auto got = lexemes(s);
      std::vector<std::string> want =
          pairs.count(s) ? std::vector<std::string>{s, "<eof>"}
                         : std::vector<std::string>{std::string(1, a), std::string(1, b), "<eof>"};
      EXPECT_EQ(got, want) << "pair " << s;
      ++checked;
    }
  EXPECT_EQ(checked, 22 * 22 - 2);
}

TEST(Lexer, TriviaReproducesSource) {
  const std::string src =
      "// header\nclass A {\n    /* block\n */ int x; // tail\n\n    String s = \"a\\\"b\";\n}\n";
  auto r = tokenize(src, "t.mj");
  ASSERT_TRUE(r.ok());
  std::string rebuilt;
  for (const auto& t : *r.value) rebuilt += t.leading_trivia + t.lexeme;
  EXPECT_EQ(rebuilt, src);
}

TEST(Lexer, RandomTriviaRoundTrip) {
  std::mt19937 rng(7);
  const std::vector<std::string> pieces = {"a", "b1", "_x", "12", "7L", "3.5", "\"s\"", "+",  "<=",
                                           ">>", "(",  ")",  "[",  "]",  " ",   "\n",   "\t", "// c\n",
                                           "/* d */", "class", "new", "."};
  for (int round = 0; round < 200; ++round) {
    std::string src;
    for (int i = 0; i < 30; ++i) {
      src += pieces[rng() % pieces.size()];
      src += ' ';
    }
    auto r = tokenize(src, "t.mj");
    ASSERT_TRUE(r.ok()) << src;
    std::string rebuilt;
    for (const auto& t : *r.value) rebuilt += t.leading_trivia + t.lexeme;
    EXPECT_EQ(rebuilt, src);
  }
}

TEST(Lexer, LiteralKinds) {
  auto r = tokenize("12 12L 1.5 \"x\" true null", "t.mj");
  ASSERT_TRUE(r.ok());
  const auto& t = *r.value;
  EXPECT_EQ(t[0].kind, TokenKind::IntLiteral);
  EXPECT_EQ(t[1].kind, TokenKind::LongLiteral);
  EXPECT_EQ(t[2].kind, TokenKind::DoubleLiteral);
  EXPECT_EQ(t[3].kind, TokenKind::StringLiteral);
  EXPECT_EQ(t[4].kind, TokenKind::Keyword);
  EXPECT_EQ(t[5].kind, TokenKind::Keyword);
}

TEST(Lexer, Errors) {
  EXPECT_EQ(first_code("a # b"), "E001");
  EXPECT_EQ(first_code("\"open"), "E002");
  EXPECT_EQ(first_code("a /* never closed"), "E004");
}

TEST(Lexer, SpansAreOneBased) {
  auto r = tokenize("a\n  bb", "f.mj");
  ASSERT_TRUE(r.ok());
  const auto& b = (*r.value)[1];
  EXPECT_EQ(b.span.file, "f.mj");
  EXPECT_EQ(b.span.line, 2);
  EXPECT_EQ(b.span.column, 3);
  EXPECT_EQ(b.span.length, 2);
}

}  // namespace
}  // namespace oodc
