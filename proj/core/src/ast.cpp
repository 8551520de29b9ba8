#include "oodc/ast.hpp"

#include "oodc/class_table.hpp"

namespace oodc {

std::string_view op_text(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Rem: return "%";
    case Op::BitAnd: return "&";
    case Op::BitOr: return "|";
    case Op::BitXor: return "^";
    case Op::Shl: return "<<";
    case Op::Shr: return ">>";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::Eq: return "==";
    case Op::Ne: return "!=";
    case Op::LogAnd: return "&&";
    case Op::LogOr: return "||";
    case Op::Neg: return "-";
    case Op::BitNot: return "~";
    case Op::Not: return "!";
  }
  return "?";
}

std::optional<Op> binary_op_from_text(std::string_view t) {
  static constexpr Op kBinary[] = {Op::Add, Op::Sub, Op::Mul, Op::Div, Op::Rem, Op::BitAnd,
                                   Op::BitOr, Op::BitXor, Op::Shl, Op::Shr, Op::Lt, Op::Le,
                                   Op::Gt, Op::Ge, Op::Eq, Op::Ne, Op::LogAnd, Op::LogOr};
  for (Op op : kBinary)
    if (op_text(op) == t) return op;
  return std::nullopt;
}

int binary_precedence(Op op) {
  switch (op) {
    case Op::LogOr: return 2;
    case Op::LogAnd: return 3;
    case Op::BitOr: return 4;
    case Op::BitXor: return 5;
    case Op::BitAnd: return 6;
    case Op::Eq:
    case Op::Ne: return 7;
    case Op::Lt:
    case Op::Le:
    case Op::Gt:
    case Op::Ge: return 8;
    case Op::Shl:
    case Op::Shr: return 9;
    case Op::Add:
    case Op::Sub: return 10;
    case Op::Mul:
    case Op::Div:
    case Op::Rem: return 11;
    case Op::Neg:
    case Op::BitNot:
    case Op::Not: return kUnaryPrecedence;
  }
  return 0;
}

bool is_relational(Op op) { return op == Op::Lt || op == Op::Le || op == Op::Gt || op == Op::Ge; }

std::string TypeRef::str() const {
  std::string out = name;
  if (!args.empty()) {
    out += '<';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ", ";
      out += args[i].str();
    }
    out += '>';
  }
  if (is_array) out += "[]";
  return out;
}

std::string_view resolution_kind_name(ResolutionKind kind) {
  switch (kind) {
    case ResolutionKind::Builtin: return "Builtin";
    case ResolutionKind::OverloadedBinary: return "OverloadedBinary";
    case ResolutionKind::OverloadedUnary: return "OverloadedUnary";
    case ResolutionKind::OverloadedCompare: return "OverloadedCompare";
    case ResolutionKind::OverloadedIndexRead: return "OverloadedIndexRead";
    case ResolutionKind::OverloadedIndexWrite: return "OverloadedIndexWrite";
    case ResolutionKind::ValueOfConversion: return "ValueOfConversion";
  }
  return "Builtin";
}

std::string_view OperatorResolution::method_name() const {
  return method ? std::string_view(method->name) : std::string_view();
}

bool Expr::is_operator() const {
  switch (kind) {
    case ExprKind::Binary:
    case ExprKind::Unary:
    case ExprKind::IndexRead:
    case ExprKind::IndexWrite:
    case ExprKind::Assign: return true;
    default: return false;
  }
}

namespace {

const Expr& strip_parens(const Expr& e) {
  const Expr* p = &e;
  while (p->kind == ExprKind::Paren) p = &p->children.front();
  return *p;
}

bool equal_type_refs(const TypeRef& a, const TypeRef& b) {
  if (a.name != b.name || a.is_array != b.is_array || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!equal_type_refs(a.args[i], b.args[i])) return false;
  return true;
}

bool equal_opt_type_refs(const std::optional<TypeRef>& a, const std::optional<TypeRef>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || equal_type_refs(*a, *b);
}

bool equal_type_params(const std::vector<TypeParamDecl>& a, const std::vector<TypeParamDecl>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].name != b[i].name || !equal_opt_type_refs(a[i].bound, b[i].bound)) return false;
  return true;
}

bool equal_mods(const Modifiers& a, const Modifiers& b) {
  return a.is_public == b.is_public && a.is_static == b.is_static && a.is_native == b.is_native;
}

bool equal_members(const MemberDecl& a, const MemberDecl& b) {
  if (a.kind != b.kind || !equal_mods(a.mods, b.mods) || a.name != b.name || a.names != b.names)
    return false;
  if (!equal_type_params(a.type_params, b.type_params)) return false;
  if (a.kind != MemberKind::Constructor && !equal_type_refs(a.type, b.type)) return false;
  if (a.params.size() != b.params.size()) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i)
    if (a.params[i].name != b.params[i].name || !equal_type_refs(a.params[i].type, b.params[i].type))
      return false;
  if (a.body.has_value() != b.body.has_value()) return false;
  return !a.body || structurally_equal(*a.body, *b.body);
}

bool equal_classes(const ClassDecl& a, const ClassDecl& b) {
  if (a.kind != b.kind || a.name != b.name || !equal_mods(a.mods, b.mods)) return false;
  if (!equal_type_params(a.type_params, b.type_params)) return false;
  if (!equal_opt_type_refs(a.superclass, b.superclass)) return false;
  if (a.interfaces.size() != b.interfaces.size() || a.members.size() != b.members.size()) return false;
  for (std::size_t i = 0; i < a.interfaces.size(); ++i)
    if (!equal_type_refs(a.interfaces[i], b.interfaces[i])) return false;
  for (std::size_t i = 0; i < a.members.size(); ++i)
    if (!equal_members(a.members[i], b.members[i])) return false;
  return true;
}

std::string unary_name(Op op) {
  switch (op) {
    case Op::Neg: return "neg";
    case Op::BitNot: return "~";
    default: return "!";
  }
}

void append_attr(std::string& out, const Expr& e) {
  if (!e.attr) return;
  out += ':';
  out += e.attr->type.str();
  if (e.attr->resolution && !e.attr->resolution->is_builtin()) {
    out += '{';
    out += e.attr->resolution->method_name();
    out += '}';
  }
}

void sexpr(std::string& out, const Expr& e, bool typed) {
  auto list = [&](std::string head, std::size_t from) {
    out += '(' + head;
    for (std::size_t i = from; i < e.children.size(); ++i) {
      out += ' ';
      sexpr(out, e.children[i], typed);
    }
    out += ')';
  };
  switch (e.kind) {
    case ExprKind::Literal:
    case ExprKind::Name: out += e.text; break;
    case ExprKind::This: out += "this"; break;
    case ExprKind::FieldAccess:
      out += "(. ";
      sexpr(out, e.children[0], typed);
      out += ' ' + e.text + ')';
      break;
    case ExprKind::MethodCall:
      out += "(call ";
      if (e.has_receiver) sexpr(out, e.children[0], typed);
      else out += '_';
      out += ' ' + e.text;
      for (const auto& a : e.args()) {
        out += ' ';
        sexpr(out, a, typed);
      }
      out += ')';
      break;
    case ExprKind::New: list("new " + e.type_ref.str(), 0); break;
    case ExprKind::NewArray: list("newarray " + e.type_ref.str(), 0); break;
    case ExprKind::Binary: list(std::string(op_text(e.op)), 0); break;
    case ExprKind::Unary: list(unary_name(e.op), 0); break;
    case ExprKind::IndexRead: list("[]", 0); break;
    case ExprKind::IndexWrite: list("[]=", 0); break;
    case ExprKind::Assign: list("=", 0); break;
    case ExprKind::Paren: list("paren", 0); break;
  }
  if (typed) append_attr(out, e);
}

void dump_stmt(std::string& out, const Stmt& s, bool typed, int indent) {
  out += std::string(static_cast<std::size_t>(indent) * 2, ' ');
  auto expr_text = [&] { return s.expr ? to_sexpr(*s.expr, typed) : std::string(); };
  switch (s.kind) {
    case StmtKind::Block:
      out += "(block\n";
      for (const auto& c : s.body) dump_stmt(out, c, typed, indent + 1);
      out += std::string(static_cast<std::size_t>(indent) * 2, ' ') + ")\n";
      return;
    case StmtKind::LocalVar:
      out += "(var " + s.var_type.str() + ' ' + s.var_name;
      if (s.expr) out += ' ' + expr_text();
      if (typed && s.attr && s.attr->resolution && !s.attr->resolution->is_builtin())
        out += " {" + std::string(s.attr->resolution->method_name()) + '}';
      out += ")\n";
      return;
    case StmtKind::ExprStmt: out += "(expr " + expr_text() + ")\n"; return;
    case StmtKind::Return: out += s.expr ? "(return " + expr_text() + ")\n" : "(return)\n"; return;
    case StmtKind::If:
    case StmtKind::While:
      out += (s.kind == StmtKind::If ? "(if " : "(while ") + expr_text() + '\n';
      for (const auto& c : s.body) dump_stmt(out, c, typed, indent + 1);
      out += std::string(static_cast<std::size_t>(indent) * 2, ' ') + ")\n";
      return;
  }
}

}  // namespace

bool structurally_equal(const Expr& a0, const Expr& b0) {
  const Expr& a = strip_parens(a0);
  const Expr& b = strip_parens(b0);
  if (a.kind != b.kind || a.text != b.text || a.has_receiver != b.has_receiver) return false;
  if (a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case ExprKind::Binary:
    case ExprKind::Unary:
      if (a.op != b.op) return false;
      break;
    case ExprKind::Literal:
      if (a.literal != b.literal) return false;
      break;
    case ExprKind::New:
    case ExprKind::NewArray:
      if (!equal_type_refs(a.type_ref, b.type_ref)) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(a.children[i], b.children[i])) return false;
  return true;
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.var_name != b.var_name || a.body.size() != b.body.size()) return false;
  if (a.kind == StmtKind::LocalVar && !equal_type_refs(a.var_type, b.var_type)) return false;
  if (a.expr.has_value() != b.expr.has_value()) return false;
  if (a.expr && !structurally_equal(*a.expr, *b.expr)) return false;
  for (std::size_t i = 0; i < a.body.size(); ++i)
    if (!structurally_equal(a.body[i], b.body[i])) return false;
  return true;
}

bool structurally_equal(const Unit& a, const Unit& b) {
  if (a.classes.size() != b.classes.size()) return false;
  for (std::size_t i = 0; i < a.classes.size(); ++i)
    if (!equal_classes(a.classes[i], b.classes[i])) return false;
  return true;
}

std::string to_sexpr(const Expr& expr, bool typed) {
  std::string out;
  sexpr(out, expr, typed);
  return out;
}

std::string dump_unit(const Unit& unit, bool typed) {
  std::string out = "(unit " + unit.file + '\n';
  for (const auto& cls : unit.classes) {
    out += std::string(cls.kind == ClassKind::Interface ? "  (interface " : "  (class ") + cls.name + '\n';
    for (const auto& m : cls.members) {
      switch (m.kind) {
        case MemberKind::Field: {
          out += "    (field " + m.type.str();
          for (const auto& n : m.names) out += ' ' + n;
          out += ")\n";
          break;
        }
        case MemberKind::Method:
        case MemberKind::Constructor: {
          out += m.kind == MemberKind::Method ? "    (method " + m.name : "    (constructor " + m.name;
          out += " (";
          for (std::size_t i = 0; i < m.params.size(); ++i) {
            if (i) out += ' ';
            out += m.params[i].type.str() + ' ' + m.params[i].name;
          }
          out += ')';
          if (m.kind == MemberKind::Method) out += " : " + m.type.str();
          out += '\n';
          if (m.body) dump_stmt(out, *m.body, typed, 3);
          out += "    )\n";
          break;
        }
      }
    }
    out += "  )\n";
  }
  out += ")\n";
  return out;
}

}  // namespace oodc
