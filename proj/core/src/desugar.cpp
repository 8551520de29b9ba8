#include "oodc/desugar.hpp"

#include "oodc/class_table.hpp"

namespace oodc {
namespace {

const OperatorResolution* overloaded(const Expr& e) {
  if (!e.attr || !e.attr->resolution || e.attr->resolution->is_builtin()) return nullptr;
  return &*e.attr->resolution;
}

Expr call(const Expr& origin, std::string name, std::vector<Expr> children) {
  Expr c;
  c.kind = ExprKind::MethodCall;
  c.text = std::move(name);
  c.has_receiver = true;
  c.children = std::move(children);
  c.span = origin.span;
  c.id = origin.id;
  return c;
}

Expr value_of(const std::string& class_name, const OperatorResolution& res, Expr rhs) {
  Expr cls;
  cls.kind = ExprKind::Name;
  cls.text = class_name;
  cls.span = rhs.span;
  Expr c;
  c.kind = ExprKind::MethodCall;
  c.text = res.method->name;
  c.has_receiver = true;
  c.span = rhs.span;
  c.children.push_back(std::move(cls));
  c.children.push_back(std::move(rhs));
  return c;
}

Stmt desugar_stmt(const Stmt& s) {
  Stmt out;
  out.kind = s.kind;
  out.var_type = s.var_type;
  out.var_name = s.var_name;
  out.span = s.span;
  for (const auto& c : s.body) out.body.push_back(desugar_stmt(c));
  if (s.expr) {
    Expr e = desugar_expr(*s.expr);
    const auto* res = s.attr && s.attr->resolution ? &*s.attr->resolution : nullptr;
    if (s.kind == StmtKind::LocalVar && res && res->kind == ResolutionKind::ValueOfConversion)
      e = value_of(s.attr->type.name, *res, std::move(e));
    out.expr = std::move(e);
  }
  return out;
}

}  // namespace

Expr desugar_expr(const Expr& typed) {
  std::vector<Expr> children;
  children.reserve(typed.children.size());
  for (const auto& c : typed.children) children.push_back(desugar_expr(c));

  if (typed.kind == ExprKind::Paren) {
    const auto* inner = overloaded(typed.child(0));
    if (inner && inner->kind != ResolutionKind::OverloadedCompare &&
        inner->kind != ResolutionKind::ValueOfConversion)
      return std::move(children.front());
  }

  const auto* res = overloaded(typed);
  if (!res) {
    Expr out;
    out.kind = typed.kind;
    out.op = typed.op;
    out.literal = typed.literal;
    out.text = typed.text;
    out.type_ref = typed.type_ref;
    out.has_receiver = typed.has_receiver;
    out.children = std::move(children);
    out.span = typed.span;
    out.op_span = typed.op_span;
    out.id = typed.id;
    return out;
  }

  switch (res->kind) {
    case ResolutionKind::OverloadedBinary:
    case ResolutionKind::OverloadedUnary:
    case ResolutionKind::OverloadedIndexRead:
    case ResolutionKind::OverloadedIndexWrite:
      return call(typed, res->method->name, std::move(children));
    case ResolutionKind::OverloadedCompare: {
      Expr cmp = call(typed, res->method->name, std::move(children));
      cmp.id = -1;
      Expr zero;
      zero.kind = ExprKind::Literal;
      zero.literal = LiteralKind::Int;
      zero.text = "0";
      zero.span = typed.op_span;
      Expr out;
      out.kind = ExprKind::Binary;
      out.op = res->relation;
      out.span = typed.span;
      out.op_span = typed.op_span;
      out.id = typed.id;
      out.children.push_back(std::move(cmp));
      out.children.push_back(std::move(zero));
      return out;
    }
    case ResolutionKind::ValueOfConversion: {
      Expr out;
      out.kind = typed.kind;
      out.span = typed.span;
      out.op_span = typed.op_span;
      out.id = typed.id;
      Expr rhs = std::move(children[1]);
      out.children.push_back(std::move(children[0]));
      out.children.push_back(value_of(typed.attr->type.name, *res, std::move(rhs)));
      return out;
    }
    case ResolutionKind::Builtin: break;
  }
  return typed;
}

Unit desugar_unit(const Unit& typed) {
  Unit out;
  out.file = typed.file;
  out.classes = typed.classes;
  for (auto& cls : out.classes)
    for (auto& m : cls.members)
      if (m.body) m.body = desugar_stmt(*m.body);
  return out;
}

}  // namespace oodc
