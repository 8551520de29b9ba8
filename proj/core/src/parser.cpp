#include "oodc/parser.hpp"

#include <algorithm>

#include "oodc/lexer.hpp"

namespace oodc {

namespace {

struct ParseError {};

bool is_primitive_keyword(const Token& t) {
  return t.kind == TokenKind::Keyword && primitive_from_name(t.lexeme).has_value();
}

bool is_closer(const Token& t) { return t.is(")") || t.is("]") || t.is("}"); }

std::string describe(const Token& t) {
  if (t.kind == TokenKind::Eof) return "end of file";
  if (t.kind == TokenKind::Identifier) return "identifier '" + t.lexeme + "'";
  return "'" + t.lexeme + "'";
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

  Result<Unit> unit() {
    try {
      Unit u;
      u.file = toks_.empty() ? std::string() : toks_.back().span.file;
      while (peek().kind != TokenKind::Eof) u.classes.push_back(class_decl());
      return Result<Unit>::success(std::move(u));
    } catch (const ParseError&) {
      return Result<Unit>::failure(std::move(diags_));
    }
  }

  Result<Expr> whole_expression() {
    try {
      Expr e = expression();
      if (peek().kind != TokenKind::Eof) {
        if (is_closer(peek())) fail("E011", peek().span, "unmatched " + describe(peek()));
        fail("E010", peek().span, "expected end of expression, found " + describe(peek()));
      }
      return Result<Expr>::success(std::move(e));
    } catch (const ParseError&) {
      return Result<Expr>::failure(std::move(diags_));
    }
  }

 private:
  struct State {
    std::size_t pos;
    bool pending_gt;
    Token split;
    Span last;
    std::size_t diag_count;
    int next_id;
  };

  // ---- token access -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    if (pending_gt_) {
      if (ahead == 0) return split_;
      --ahead;
      return at(pos_ + 1 + ahead);
    }
    return at(pos_ + ahead);
  }

  const Token& at(std::size_t i) const { return i < toks_.size() ? toks_[i] : toks_.back(); }

  void advance() {
    if (pending_gt_) {
      pending_gt_ = false;
      last_ = split_.span;
      ++pos_;
      return;
    }
    last_ = at(pos_).span;
    if (pos_ + 1 < toks_.size()) ++pos_;
    else pos_ = toks_.size() - 1;
  }

  bool accept(std::string_view sym) {
    if (!peek().is(sym)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const char* code, const Span& span, std::string message) {
    diags_.push_back(make_error(code, span, std::move(message)));
    throw ParseError{};
  }

  void expect(std::string_view sym, std::string_view context = {}) {
    if (accept(sym)) return;
    std::string msg = "expected '" + std::string(sym) + "'";
    if (!context.empty()) msg += " " + std::string(context);
    msg += ", found " + describe(peek());
    fail("E010", peek().span, std::move(msg));
  }

  /// Consumes `close`, reporting E011 if the delimiter opened at `open` is
  /// left unbalanced.
  void expect_close(std::string_view close, const Token& open_tok) {
    if (accept(close)) return;
    std::string msg = "expected '" + std::string(close) + "' to close '" + open_tok.lexeme +
                      "' opened at " + std::to_string(open_tok.span.line) + ":" +
                      std::to_string(open_tok.span.column) + ", found " + describe(peek());
    if (peek().kind == TokenKind::Eof || is_closer(peek())) fail("E011", peek().span, msg);
    fail("E010", peek().span, msg);
  }

  std::string identifier(std::string_view what) {
    if (peek().kind != TokenKind::Identifier)
      fail("E010", peek().span, "expected " + std::string(what) + ", found " + describe(peek()));
    std::string name = peek().lexeme;
    advance();
    return name;
  }

  /// Closes a type-argument list, splitting `>>` into two tokens.
  void close_angle() {
    if (pending_gt_ || peek().is(">")) {
      advance();
      return;
    }
    if (peek().is(">>")) {
      const Token& tok = at(pos_);
      last_ = tok.span;
      last_.length = 1;
      split_ = tok;
      split_.lexeme = ">";
      split_.leading_trivia.clear();
      split_.span.offset += 1;
      split_.span.column += 1;
      split_.span.length = 1;
      pending_gt_ = true;
      return;
    }
    fail("E010", peek().span, "expected '>' to close type arguments, found " + describe(peek()));
  }

  State save() const { return State{pos_, pending_gt_, split_, last_, diags_.size(), next_id_}; }
  void restore(const State& s) {
    pos_ = s.pos;
    pending_gt_ = s.pending_gt;
    split_ = s.split;
    last_ = s.last;
    diags_.resize(s.diag_count);
    next_id_ = s.next_id;
  }

  Span from(const Span& start) const { return Span::cover(start, last_); }

  // ---- declarations -------------------------------------------------------

  Modifiers modifiers() {
    Modifiers m;
    while (true) {
      bool* flag = nullptr;
      if (peek().is("public")) flag = &m.is_public;
      else if (peek().is("static")) flag = &m.is_static;
      else if (peek().is("native")) flag = &m.is_native;
      else break;
      if (*flag) fail("E010", peek().span, "repeated modifier '" + peek().lexeme + "'");
      *flag = true;
      advance();
    }
    return m;
  }

  std::vector<TypeParamDecl> type_params() {
    std::vector<TypeParamDecl> out;
    expect("<");
    do {
      TypeParamDecl p;
      p.span = peek().span;
      p.name = identifier("type parameter name");
      auto dup = std::find_if(out.begin(), out.end(), [&](const auto& q) { return q.name == p.name; });
      if (dup != out.end()) fail("E012", p.span, "duplicate type parameter '" + p.name + "'");
      if (accept("extends")) p.bound = type(false);
      p.span = from(p.span);
      out.push_back(std::move(p));
    } while (accept(","));
    close_angle();
    return out;
  }

  ClassDecl class_decl() {
    ClassDecl c;
    Span start = peek().span;
    c.mods = modifiers();
    if (accept("class")) {
      c.kind = ClassKind::Class;
    } else if (accept("interface")) {
      c.kind = ClassKind::Interface;
    } else {
      if (is_closer(peek())) fail("E011", peek().span, "unmatched " + describe(peek()));
      fail("E010", peek().span, "expected class or interface declaration, found " + describe(peek()));
    }
    if (c.mods.is_static || c.mods.is_native)
      fail("E010", start, "modifier not allowed on a type declaration");
    c.name = identifier("type name");
    if (peek().is("<")) c.type_params = type_params();
    if (c.kind == ClassKind::Class) {
      if (accept("extends")) c.superclass = type(false);
      if (accept("implements")) {
        do c.interfaces.push_back(type(false));
        while (accept(","));
      }
    } else if (accept("extends")) {
      do c.interfaces.push_back(type(false));
      while (accept(","));
    }
    Token open = peek();
    expect("{", "to open the type body");
    while (!peek().is("}")) {
      if (peek().kind == TokenKind::Eof) expect_close("}", open);
      c.members.push_back(member(c));
    }
    advance();
    c.span = from(start);
    return c;
  }

  MemberDecl member(const ClassDecl& owner) {
    MemberDecl m;
    Span start = peek().span;
    m.mods = modifiers();
    const bool in_interface = owner.kind == ClassKind::Interface;
    if (peek().is("<")) m.type_params = type_params();

    if (peek().kind == TokenKind::Identifier && peek().lexeme == owner.name && peek(1).is("(")) {
      m.kind = MemberKind::Constructor;
      if (in_interface) fail("E010", peek().span, "interfaces cannot declare constructors");
      if (!m.type_params.empty()) fail("E010", start, "generic constructors are not supported");
      if (m.mods.is_static) fail("E010", start, "constructors cannot be static");
      m.name = identifier("constructor name");
      m.params = params();
      m.body = method_body(m, in_interface);
      m.span = from(start);
      return m;
    }

    if (peek().is("void")) {
      m.type = TypeRef{"void", {}, false, peek().span};
      advance();
    } else {
      m.type = type(true);
    }
    Span name_span = peek().span;
    std::string name = identifier("member name");
    if (peek().is("(")) {
      m.kind = MemberKind::Method;
      m.name = std::move(name);
      if (in_interface && m.mods.is_static)
        fail("E010", start, "static interface methods are not supported");
      m.params = params();
      m.body = method_body(m, in_interface);
      m.span = from(start);
      return m;
    }

    m.kind = MemberKind::Field;
    if (in_interface) fail("E010", name_span, "interfaces contain only method signatures");
    if (!m.type_params.empty()) fail("E010", start, "fields cannot declare type parameters");
    if (m.type.name == "void") fail("E010", m.type.span, "fields cannot have type void");
    if (m.mods.is_static) fail("E010", start, "static fields are not supported");
    if (m.mods.is_native) fail("E010", start, "fields cannot be native");
    m.names.push_back(std::move(name));
    while (accept(",")) m.names.push_back(identifier("field name"));
    if (peek().is("=")) fail("E010", peek().span, "field initializers are not supported");
    expect(";", "after field declaration");
    m.span = from(start);
    return m;
  }

  std::vector<Param> params() {
    std::vector<Param> out;
    Token open = peek();
    expect("(");
    if (!peek().is(")")) {
      do {
        Param p;
        p.span = peek().span;
        p.type = type(true);
        if (p.type.name == "void") fail("E010", p.type.span, "parameters cannot have type void");
        p.name = identifier("parameter name");
        p.span = from(p.span);
        out.push_back(std::move(p));
      } while (accept(","));
    }
    expect_close(")", open);
    return out;
  }

  std::optional<Stmt> method_body(const MemberDecl& m, bool in_interface) {
    const bool bodiless = m.mods.is_native || in_interface;
    if (peek().is(";")) {
      if (!bodiless) fail("E010", peek().span, "missing body for '" + m.name + "'");
      advance();
      return std::nullopt;
    }
    if (bodiless && peek().is("{"))
      fail("E010", peek().span,
           in_interface ? "interface methods cannot have a body" : "native methods cannot have a body");
    return block();
  }

  // ---- types --------------------------------------------------------------

  TypeRef type(bool allow_array) {
    TypeRef t;
    t.span = peek().span;
    if (is_primitive_keyword(peek())) {
      t.name = peek().lexeme;
      advance();
    } else if (peek().kind == TokenKind::Identifier) {
      t.name = peek().lexeme;
      advance();
      while (peek().is(".") && peek(1).kind == TokenKind::Identifier) {
        advance();
        t.name += "." + peek().lexeme;
        advance();
      }
      if (peek().is("<")) {
        advance();
        do t.args.push_back(type(true));
        while (accept(","));
        close_angle();
      }
    } else {
      fail("E010", peek().span, "expected type, found " + describe(peek()));
    }
    if (allow_array && peek().is("[") && peek(1).is("]")) {
      advance();
      advance();
      t.is_array = true;
      if (peek().is("[") && peek(1).is("]"))
        fail("E010", peek().span, "arrays of arrays are not supported");
    }
    t.span = from(t.span);
    return t;
  }

  // ---- statements ---------------------------------------------------------

  Stmt block() {
    Stmt s;
    s.kind = StmtKind::Block;
    Span start = peek().span;
    Token open = peek();
    expect("{");
    while (!peek().is("}")) {
      if (peek().kind == TokenKind::Eof) expect_close("}", open);
      s.body.push_back(statement());
    }
    advance();
    s.span = from(start);
    return s;
  }

  Stmt statement() {
    Span start = peek().span;
    if (peek().is("{")) return block();
    if (peek().is("if")) {
      advance();
      Stmt s;
      s.kind = StmtKind::If;
      s.expr = condition();
      s.body.push_back(statement());
      if (accept("else")) s.body.push_back(statement());
      s.span = from(start);
      return s;
    }
    if (peek().is("while")) {
      advance();
      Stmt s;
      s.kind = StmtKind::While;
      s.expr = condition();
      s.body.push_back(statement());
      s.span = from(start);
      return s;
    }
    if (peek().is("return")) {
      advance();
      Stmt s;
      s.kind = StmtKind::Return;
      if (!peek().is(";")) s.expr = expression();
      expect(";", "after return statement");
      s.span = from(start);
      return s;
    }
    if (peek().is("for") || peek().is("super"))
      fail("E010", peek().span, "'" + peek().lexeme + "' is not supported");
    if (peek().is(";")) fail("E010", peek().span, "empty statements are not supported");

    if (is_primitive_keyword(peek())) return local_var(start);
    if (peek().kind == TokenKind::Identifier) {
      State saved = save();
      bool is_decl = false;
      try {
        type(true);
        is_decl = peek().kind == TokenKind::Identifier;
      } catch (const ParseError&) {
      }
      restore(saved);
      if (is_decl) return local_var(start);
    }

    Stmt s;
    s.kind = StmtKind::ExprStmt;
    s.expr = expression();
    switch (s.expr->kind) {
      case ExprKind::Assign:
      case ExprKind::IndexWrite:
      case ExprKind::MethodCall:
      case ExprKind::New: break;
      default: fail("E010", s.expr->span, "not a statement");
    }
    expect(";", "after expression statement");
    s.span = from(start);
    return s;
  }

  Stmt local_var(const Span& start) {
    Stmt s;
    s.kind = StmtKind::LocalVar;
    s.var_type = type(true);
    s.var_name = identifier("variable name");
    if (accept("=")) s.expr = expression();
    expect(";", "after variable declaration");
    s.span = from(start);
    return s;
  }

  Expr condition() {
    Token open = peek();
    expect("(");
    Expr e = expression();
    expect_close(")", open);
    return e;
  }

  // ---- expressions --------------------------------------------------------

  Expr node(ExprKind kind, const Span& start) {
    Expr e;
    e.kind = kind;
    e.id = next_id_++;
    e.span = from(start);
    return e;
  }

  Expr expression() { return assignment(); }

  Expr assignment() {
    Expr lhs = binary(2);
    if (!peek().is("=")) return lhs;
    Span op_span = peek().span;
    advance();
    Expr rhs = assignment();
    Expr e;
    if (lhs.kind == ExprKind::IndexRead) {
      e = node(ExprKind::IndexWrite, lhs.span);
      e.children = std::move(lhs.children);
    } else if (lhs.kind == ExprKind::Name || lhs.kind == ExprKind::FieldAccess) {
      e = node(ExprKind::Assign, lhs.span);
      e.children.push_back(std::move(lhs));
    } else {
      fail("E010", lhs.span, "invalid assignment target");
    }
    e.op_span = op_span;
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr binary(int min_prec) {
    Expr lhs = unary();
    while (true) {
      const Token& tok = peek();
      if (tok.kind != TokenKind::Symbol) break;
      auto op = binary_op_from_text(tok.lexeme);
      if (!op || binary_precedence(*op) < min_prec) break;
      Span op_span = tok.span;
      advance();
      Expr rhs = binary(binary_precedence(*op) + 1);
      Span start = lhs.span;
      Expr e = node(ExprKind::Binary, start);
      e.op = *op;
      e.op_span = op_span;
      e.children.push_back(std::move(lhs));
      e.children.push_back(std::move(rhs));
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr unary() {
    std::optional<Op> op;
    if (peek().is("-")) op = Op::Neg;
    else if (peek().is("~")) op = Op::BitNot;
    else if (peek().is("!")) op = Op::Not;
    if (!op) return postfix();
    Span start = peek().span;
    advance();
    Expr operand = unary();
    Expr e = node(ExprKind::Unary, start);
    e.op = *op;
    e.op_span = start;
    e.children.push_back(std::move(operand));
    return e;
  }

  std::vector<Expr> arguments() {
    std::vector<Expr> out;
    Token open = peek();
    expect("(");
    if (!peek().is(")")) {
      do out.push_back(expression());
      while (accept(","));
    }
    expect_close(")", open);
    return out;
  }

  Expr postfix() {
    Expr e = primary();
    while (true) {
      if (peek().is(".")) {
        advance();
        std::string name = identifier("member name after '.'");
        Span start = e.span;
        if (peek().is("(")) {
          auto args = arguments();
          Expr call = node(ExprKind::MethodCall, start);
          call.text = std::move(name);
          call.has_receiver = true;
          call.children.push_back(std::move(e));
          for (auto& a : args) call.children.push_back(std::move(a));
          e = std::move(call);
        } else {
          Expr fa = node(ExprKind::FieldAccess, start);
          fa.text = std::move(name);
          fa.children.push_back(std::move(e));
          e = std::move(fa);
        }
      } else if (peek().is("[")) {
        Token open = peek();
        advance();
        Expr key = expression();
        expect_close("]", open);
        Span start = e.span;
        Expr ix = node(ExprKind::IndexRead, start);
        ix.op_span = open.span;
        ix.children.push_back(std::move(e));
        ix.children.push_back(std::move(key));
        e = std::move(ix);
      } else {
        return e;
      }
    }
  }

  Expr literal(LiteralKind kind) {
    Span start = peek().span;
    std::string text = peek().lexeme;
    advance();
    Expr e = node(ExprKind::Literal, start);
    e.literal = kind;
    e.text = std::move(text);
    return e;
  }

  Expr primary() {
    const Token& tok = peek();
    Span start = tok.span;
    switch (tok.kind) {
      case TokenKind::IntLiteral: return literal(LiteralKind::Int);
      case TokenKind::LongLiteral: return literal(LiteralKind::Long);
      case TokenKind::DoubleLiteral: return literal(LiteralKind::Double);
      case TokenKind::StringLiteral: return literal(LiteralKind::String);
      case TokenKind::Identifier: {
        std::string name = tok.lexeme;
        if (peek(1).is("(")) {
          advance();
          auto args = arguments();
          Expr call = node(ExprKind::MethodCall, start);
          call.text = std::move(name);
          call.children = std::move(args);
          return call;
        }
        advance();
        Expr e = node(ExprKind::Name, start);
        e.text = std::move(name);
        return e;
      }
      default: break;
    }
    if (tok.is("true") || tok.is("false")) return literal(LiteralKind::Boolean);
    if (tok.is("null")) return literal(LiteralKind::Null);
    if (tok.is("this")) {
      advance();
      return node(ExprKind::This, start);
    }
    if (tok.is("new")) {
      advance();
      TypeRef t = type(false);
      if (peek().is("(")) {
        auto args = arguments();
        Expr e = node(ExprKind::New, start);
        e.type_ref = std::move(t);
        e.children = std::move(args);
        return e;
      }
      if (peek().is("[")) {
        Token open = peek();
        advance();
        Expr len = expression();
        expect_close("]", open);
        if (peek().is("[")) fail("E010", peek().span, "arrays of arrays are not supported");
        Expr e = node(ExprKind::NewArray, start);
        e.type_ref = std::move(t);
        e.children.push_back(std::move(len));
        return e;
      }
      fail("E010", peek().span, "expected '(' or '[' after 'new " + t.str() + "', found " + describe(peek()));
    }
    if (tok.is("(")) {
      Token open = tok;
      advance();
      Expr inner = expression();
      expect_close(")", open);
      Expr e = node(ExprKind::Paren, start);
      e.children.push_back(std::move(inner));
      return e;
    }
    if (is_closer(tok)) fail("E011", tok.span, "unmatched " + describe(tok));
    fail("E010", tok.span, "expected expression, found " + describe(tok));
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
  bool pending_gt_ = false;
  Token split_;
  Span last_;
  std::vector<Diagnostic> diags_;
  int next_id_ = 0;
};

Result<std::vector<Token>> ensure_eof(std::span<const Token> tokens) {
  std::vector<Token> out(tokens.begin(), tokens.end());
  if (out.empty() || out.back().kind != TokenKind::Eof) out.push_back(Token{TokenKind::Eof, "", {}, ""});
  return Result<std::vector<Token>>::success(std::move(out));
}

}  // namespace

Result<Unit> parse_unit(std::span<const Token> tokens) {
  auto toks = ensure_eof(tokens);
  return Parser(*toks.value).unit();
}

Result<Expr> parse_expression(std::span<const Token> tokens) {
  auto toks = ensure_eof(tokens);
  return Parser(*toks.value).whole_expression();
}

Result<Unit> parse_source(std::string_view source, std::string_view file_id) {
  auto toks = tokenize(source, file_id);
  if (!toks.ok()) return Result<Unit>::failure(std::move(toks.diagnostics));
  auto unit = parse_unit(*toks.value);
  if (unit.ok()) unit.value->file = std::string(file_id);
  return unit;
}

Result<Expr> parse_expression_source(std::string_view source, std::string_view file_id) {
  auto toks = tokenize(source, file_id);
  if (!toks.ok()) return Result<Expr>::failure(std::move(toks.diagnostics));
  return parse_expression(*toks.value);
}

}  // namespace oodc
