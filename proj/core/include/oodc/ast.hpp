#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oodc/source.hpp"
#include "oodc/types.hpp"

namespace oodc {

struct MethodSig;

enum class Op {
  // binary
  Add, Sub, Mul, Div, Rem, BitAnd, BitOr, BitXor, Shl, Shr,
  Lt, Le, Gt, Ge, Eq, Ne, LogAnd, LogOr,
  // unary
  Neg, BitNot, Not,
};

std::string_view op_text(Op op);
std::optional<Op> binary_op_from_text(std::string_view text);

/// Binding strength of a binary operator; higher binds tighter.
/// Assignment is 1, `||` 2 ... multiplicative 11.
int binary_precedence(Op op);
inline constexpr int kAssignPrecedence = 1;
inline constexpr int kUnaryPrecedence = 12;
inline constexpr int kPostfixPrecedence = 13;

bool is_relational(Op op);  // < <= > >=

enum class ExprKind {
  Literal, Name, This, FieldAccess, MethodCall, New, NewArray,
  Binary, Unary, IndexRead, IndexWrite, Assign, Paren,
};

enum class LiteralKind { Int, Long, Double, String, Boolean, Null };

/// A type as written in source.
struct TypeRef {
  std::string name;
  std::vector<TypeRef> args;
  bool is_array = false;
  Span span;

  [[nodiscard]] std::string str() const;
};

enum class ResolutionKind {
  Builtin,
  OverloadedBinary,
  OverloadedUnary,
  OverloadedCompare,
  OverloadedIndexRead,
  OverloadedIndexWrite,
  ValueOfConversion,
};

std::string_view resolution_kind_name(ResolutionKind kind);

/// How an operator node (or an initialized declaration) was typed. For every
/// kind other than Builtin, `method` is the target of the desugared call.
struct OperatorResolution {
  ResolutionKind kind = ResolutionKind::Builtin;
  const MethodSig* method = nullptr;
  Op relation = Op::Lt;  // OverloadedCompare only

  [[nodiscard]] bool is_builtin() const { return kind == ResolutionKind::Builtin; }
  [[nodiscard]] std::string_view method_name() const;

  static OperatorResolution builtin() { return {}; }
};

/// What a Name or FieldAccess refers to.
enum class NameRole { Unresolved, Local, Field, Class, ArrayLength };

/// Facts recorded on a node by attribution.
struct Attribution {
  Type type;
  std::optional<OperatorResolution> resolution;  // operator nodes only
  const MethodSig* method = nullptr;             // calls and constructor calls
  std::vector<Type> param_types;                 // instantiated parameters of `method`
  NameRole role = NameRole::Unresolved;
};

/// Child layout by kind:
///   FieldAccess [object]            MethodCall [receiver?, args...]
///   New [args...]                   NewArray [length]
///   Binary [lhs, rhs]               Unary [operand]
///   IndexRead [coll, key]           IndexWrite [coll, key, value]
///   Assign [target, value]          Paren [inner]
struct Expr {
  ExprKind kind = ExprKind::Literal;
  Op op = Op::Add;
  LiteralKind literal = LiteralKind::Int;
  std::string text;   // identifier, member name or literal lexeme
  TypeRef type_ref;   // New and NewArray
  bool has_receiver = false;
  std::vector<Expr> children;
  Span span;
  Span op_span;       // operator token for Binary/Unary/Index*/Assign
  int id = -1;        // stable across desugaring; -1 for synthesized nodes
  std::optional<Attribution> attr;

  [[nodiscard]] const Expr& child(std::size_t i) const { return children[i]; }
  [[nodiscard]] Expr& child(std::size_t i) { return children[i]; }
  [[nodiscard]] const Expr* receiver() const {
    return has_receiver ? &children.front() : nullptr;
  }
  [[nodiscard]] std::span<const Expr> args() const {
    return std::span<const Expr>(children).subspan(has_receiver ? 1 : 0);
  }
  [[nodiscard]] std::span<Expr> args() {
    return std::span<Expr>(children).subspan(has_receiver ? 1 : 0);
  }
  [[nodiscard]] bool is_operator() const;
};

enum class StmtKind { Block, LocalVar, ExprStmt, If, While, Return };

/// `body`: Block statements; If [then, else?]; While [body].
/// `expr`: condition, initializer, expression or return value.
struct Stmt {
  StmtKind kind = StmtKind::Block;
  std::vector<Stmt> body;
  std::optional<Expr> expr;
  TypeRef var_type;
  std::string var_name;
  Span span;
  // LocalVar: declared type and how the initializer was converted.
  std::optional<Attribution> attr;
};

struct Modifiers {
  bool is_public = false;
  bool is_static = false;
  bool is_native = false;
};

struct TypeParamDecl {
  std::string name;
  std::optional<TypeRef> bound;
  Span span;
};

struct Param {
  TypeRef type;
  std::string name;
  Span span;
};

enum class MemberKind { Field, Method, Constructor };

struct MemberDecl {
  MemberKind kind = MemberKind::Method;
  Modifiers mods;
  std::vector<TypeParamDecl> type_params;
  TypeRef type;                    // field type or return type
  std::vector<std::string> names;  // field declarators
  std::string name;                // method or constructor name
  std::vector<Param> params;
  std::optional<Stmt> body;        // absent for native and interface methods
  Span span;
};

enum class ClassKind { Class, Interface };

struct ClassDecl {
  ClassKind kind = ClassKind::Class;
  Modifiers mods;
  std::string name;
  std::vector<TypeParamDecl> type_params;
  std::optional<TypeRef> superclass;
  std::vector<TypeRef> interfaces;  // `implements`, or `extends` for interfaces
  std::vector<MemberDecl> members;
  Span span;
};

struct Unit {
  std::string file;
  std::vector<ClassDecl> classes;
};

/// Structural equality ignoring spans, ids, attribution and Paren nodes.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const Unit& a, const Unit& b);

/// S-expression dump, e.g. `(+ (neg a) (* b c))`. With `typed`, attributed
/// nodes are suffixed with `:Type` and overloaded ones with `{method}`.
std::string to_sexpr(const Expr& expr, bool typed = false);
std::string dump_unit(const Unit& unit, bool typed = false);

/// Calls `fn` on every expression of the unit in pre-order.
template <typename Fn>
void for_each_expr(const Expr& e, Fn&& fn) {
  fn(e);
  for (const auto& c : e.children) for_each_expr(c, fn);
}

template <typename Fn>
void for_each_expr(const Stmt& s, Fn&& fn) {
  if (s.expr) for_each_expr(*s.expr, fn);
  for (const auto& c : s.body) for_each_expr(c, fn);
}

template <typename Fn>
void for_each_expr(const Unit& u, Fn&& fn) {
  for (const auto& cls : u.classes)
    for (const auto& m : cls.members)
      if (m.body) for_each_expr(*m.body, fn);
}

}  // namespace oodc
