#include "oodc/emitter.hpp"

namespace oodc {
namespace {

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 4, ' '); }

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Assign:
    case ExprKind::IndexWrite: return kAssignPrecedence;
    case ExprKind::Binary: return binary_precedence(e.op);
    case ExprKind::Unary: return kUnaryPrecedence;
    default: return kPostfixPrecedence;
  }
}

std::string expr(const Expr& e, int min_prec);

std::string args(std::span<const Expr> list) {
  std::string out = "(";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ", ";
    out += expr(list[i], 0);
  }
  return out + ")";
}

std::string receiver(const Expr& e) {
  // `new int[n][i]` would re-parse as a two-dimensional allocation.
  if (e.kind == ExprKind::NewArray) return "(" + expr(e, 0) + ")";
  return expr(e, kPostfixPrecedence);
}

std::string render(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Literal:
    case ExprKind::Name: return e.text;
    case ExprKind::This: return "this";
    case ExprKind::FieldAccess: return receiver(e.child(0)) + "." + e.text;
    case ExprKind::MethodCall: {
      std::string head = e.has_receiver ? receiver(e.child(0)) + "." + e.text : e.text;
      return head + args(e.args());
    }
    case ExprKind::New: return "new " + e.type_ref.str() + args(e.children);
    case ExprKind::NewArray: {
      TypeRef elem = e.type_ref;
      elem.is_array = false;
      return "new " + elem.str() + "[" + expr(e.child(0), 0) + "]";
    }
    case ExprKind::Binary: {
      int p = binary_precedence(e.op);
      return expr(e.child(0), p) + " " + std::string(op_text(e.op)) + " " + expr(e.child(1), p + 1);
    }
    case ExprKind::Unary: {
      std::string operand = expr(e.child(0), kUnaryPrecedence);
      std::string op(op_text(e.op));
      if (!operand.empty() && operand.front() == op.back() && op == "-") op += ' ';
      return op + operand;
    }
    case ExprKind::IndexRead: return receiver(e.child(0)) + "[" + expr(e.child(1), 0) + "]";
    case ExprKind::IndexWrite:
      return receiver(e.child(0)) + "[" + expr(e.child(1), 0) + "] = " + expr(e.child(2), kAssignPrecedence);
    case ExprKind::Assign:
      return expr(e.child(0), kPostfixPrecedence) + " = " + expr(e.child(1), kAssignPrecedence);
    case ExprKind::Paren: return "(" + expr(e.child(0), 0) + ")";
  }
  return {};
}

std::string expr(const Expr& e, int min_prec) {
  std::string text = render(e);
  if (precedence(e) < min_prec) return "(" + text + ")";
  return text;
}

std::string block(const Stmt& s, int indent) {
  std::string out = "{\n";
  for (const auto& c : s.body) out += emit_stmt(c, indent + 1);
  return out + pad(indent) + "}";
}

/// Header plus controlled statement; ends in a newline.
std::string controlled(std::string header, const Stmt& body, int indent) {
  if (body.kind == StmtKind::Block) return header + " " + block(body, indent) + "\n";
  return header + "\n" + emit_stmt(body, indent + 1);
}

std::string if_stmt(const Stmt& s, int indent) {
  std::string head = "if (" + expr(*s.expr, 0) + ")";
  const Stmt& then = s.body[0];
  if (s.body.size() < 2) return controlled(head, then, indent);
  const Stmt& other = s.body[1];
  std::string out;
  if (then.kind == StmtKind::Block) {
    out = head + " " + block(then, indent) + " else";
  } else {
    out = head + "\n" + emit_stmt(then, indent + 1) + pad(indent) + "else";
  }
  if (other.kind == StmtKind::If) return out + " " + if_stmt(other, indent);
  return controlled(out, other, indent);
}

std::string modifiers(const Modifiers& m) {
  std::string out;
  if (m.is_public) out += "public ";
  if (m.is_static) out += "static ";
  if (m.is_native) out += "native ";
  return out;
}

std::string type_params(const std::vector<TypeParamDecl>& tps) {
  if (tps.empty()) return {};
  std::string out = "<";
  for (std::size_t i = 0; i < tps.size(); ++i) {
    if (i) out += ", ";
    out += tps[i].name;
    if (tps[i].bound) out += " extends " + tps[i].bound->str();
  }
  return out + ">";
}

std::string member(const MemberDecl& m, int indent) {
  std::string out = pad(indent) + modifiers(m.mods);
  if (m.kind == MemberKind::Field) {
    out += m.type.str() + " ";
    for (std::size_t i = 0; i < m.names.size(); ++i) out += (i ? ", " : "") + m.names[i];
    return out + ";\n";
  }
  if (!m.type_params.empty()) out += type_params(m.type_params) + " ";
  if (m.kind == MemberKind::Method) out += m.type.str() + " ";
  out += m.name + "(";
  for (std::size_t i = 0; i < m.params.size(); ++i) {
    if (i) out += ", ";
    out += m.params[i].type.str() + " " + m.params[i].name;
  }
  out += ")";
  if (!m.body) return out + ";\n";
  return out + " " + block(*m.body, indent) + "\n";
}

std::string class_decl(const ClassDecl& c) {
  std::string out = modifiers(c.mods);
  out += c.kind == ClassKind::Interface ? "interface " : "class ";
  out += c.name + type_params(c.type_params);
  if (c.superclass) out += " extends " + c.superclass->str();
  if (!c.interfaces.empty()) {
    out += c.kind == ClassKind::Interface ? " extends " : " implements ";
    for (std::size_t i = 0; i < c.interfaces.size(); ++i) out += (i ? ", " : "") + c.interfaces[i].str();
  }
  out += " {\n";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    bool both_fields = i > 0 && c.members[i].kind == MemberKind::Field &&
                       c.members[i - 1].kind == MemberKind::Field;
    if (i > 0 && !both_fields) out += "\n";
    out += member(c.members[i], 1);
  }
  return out + "}\n";
}

}  // namespace

std::string emit_expr(const Expr& e) { return expr(e, 0); }

std::string emit_stmt(const Stmt& s, int indent) {
  std::string p = pad(indent);
  switch (s.kind) {
    case StmtKind::Block: return p + block(s, indent) + "\n";
    case StmtKind::LocalVar: {
      std::string out = p + s.var_type.str() + " " + s.var_name;
      if (s.expr) out += " = " + expr(*s.expr, kAssignPrecedence);
      return out + ";\n";
    }
    case StmtKind::ExprStmt: return p + expr(*s.expr, 0) + ";\n";
    case StmtKind::If: return p + if_stmt(s, indent);
    case StmtKind::While: return p + controlled("while (" + expr(*s.expr, 0) + ")", s.body[0], indent);
    case StmtKind::Return: return p + (s.expr ? "return " + expr(*s.expr, 0) : std::string("return")) + ";\n";
  }
  return {};
}

std::string emit(const Unit& unit) {
  std::string out;
  for (std::size_t i = 0; i < unit.classes.size(); ++i) {
    if (i) out += "\n";
    out += class_decl(unit.classes[i]);
  }
  return out;
}

}  // namespace oodc
