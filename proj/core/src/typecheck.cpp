#include "oodc/typecheck.hpp"

#include <charconv>
#include <map>
#include <string>

namespace oodc {
namespace {

std::string_view overload_name(Op op) {
  switch (op) {
    case Op::Add: return "add";
    case Op::Sub: return "subtract";
    case Op::Mul: return "multiply";
    case Op::Div: return "divide";
    case Op::Rem: return "remainder";
    case Op::BitAnd: return "and";
    case Op::BitOr: return "or";
    case Op::BitXor: return "xor";
    case Op::Shl: return "shiftLeft";
    case Op::Shr: return "shiftRight";
    case Op::Lt:
    case Op::Le:
    case Op::Gt:
    case Op::Ge: return "compareTo";
    case Op::Neg: return "negate";
    case Op::BitNot: return "not";
    default: return {};
  }
}

bool is_string(const Type& t) { return t.is_named("String"); }

std::string type_list(std::initializer_list<const Type*> types) {
  std::string out;
  for (const Type* t : types) {
    if (!out.empty()) out += ", ";
    out += t->str();
  }
  return out;
}

std::string arg_list(std::span<const Type> types) {
  std::string out;
  for (const auto& t : types) {
    if (!out.empty()) out += ", ";
    out += t.str();
  }
  return out;
}

class Checker {
 public:
  Checker(const ClassTable& table, Mode mode) : t_(table), mode_(mode) {}

  std::vector<Diagnostic> run(Unit& unit) {
    for (auto& decl : unit.classes) {
      cls_ = t_.find(decl.name);
      if (!cls_) continue;
      for (std::size_t i = 0; i < decl.members.size(); ++i) {
        auto& m = decl.members[i];
        if (!m.body) continue;
        const MethodSig* sig = find_sig(static_cast<int>(i), m.kind);
        if (!sig) continue;
        body(*sig, *m.body);
      }
    }
    return std::move(diags_);
  }

 private:
  const MethodSig* find_sig(int index, MemberKind kind) const {
    const auto& list = kind == MemberKind::Constructor ? cls_->constructors : cls_->methods;
    for (const auto& m : list)
      if (m->member_index == index) return m.get();
    return nullptr;
  }

  void body(const MethodSig& sig, Stmt& stmt) {
    static_ctx_ = sig.is_static;
    ret_ = sig.ret;
    scope_.clear();
    for (int id : sig.type_params) scope_.emplace_back(t_.type_param(id).name, id);
    if (!sig.is_static)
      for (int id : cls_->type_params) scope_.emplace_back(t_.type_param(id).name, id);
    locals_.assign(1, {});
    for (std::size_t i = 0; i < sig.params.size(); ++i) locals_.back()[sig.param_names[i]] = sig.params[i];
    statement(stmt);
    locals_.clear();
  }

  void error(const std::string& code, const Span& span, std::string msg) {
    diags_.push_back(make_error(code, span, std::move(msg)));
  }

  // ---- statements -----------------------------------------------------------

  void statement(Stmt& s) {
    switch (s.kind) {
      case StmtKind::Block:
        locals_.emplace_back();
        for (auto& c : s.body) statement(c);
        locals_.pop_back();
        return;
      case StmtKind::LocalVar: {
        Type declared = t_.resolve(s.var_type, scope_, diags_);
        Attribution attr;
        attr.type = declared;
        attr.resolution = OperatorResolution::builtin();
        if (s.expr) {
          Type rhs = expr(*s.expr);
          assign_conversion(declared, rhs, *s.expr, attr);
        }
        s.attr = std::move(attr);
        if (lookup_local(s.var_name)) {
          error("E108", s.span, "variable '" + s.var_name + "' is already defined");
        } else {
          locals_.back()[s.var_name] = declared;
        }
        return;
      }
      case StmtKind::ExprStmt:
        expr(*s.expr, false);
        return;
      case StmtKind::If:
      case StmtKind::While:
        condition(*s.expr);
        for (auto& c : s.body) {
          locals_.emplace_back();
          statement(c);
          locals_.pop_back();
        }
        return;
      case StmtKind::Return: {
        if (!s.expr) {
          if (!ret_.is_void() && !ret_.is_error())
            error("E101", s.span, "missing return value; expected " + ret_.str());
          return;
        }
        Type t = expr(*s.expr);
        if (ret_.is_void()) {
          error("E101", s.expr->span, "cannot return a value from a method returning void");
        } else if (!t.is_error() && !ret_.is_error() && !t_.assignable(t, ret_)) {
          error("E101", s.expr->span, "incompatible return type: " + t.str() + " cannot be converted to " + ret_.str());
        }
        return;
      }
    }
  }

  void condition(Expr& e) {
    Type t = expr(e);
    if (t.is_error()) return;
    auto p = as_primitive(t);
    if (!p || *p != Primitive::Boolean)
      error("E101", e.span, "condition must be boolean, found " + t.str());
  }

  const Type* lookup_local(const std::string& name) const {
    for (auto it = locals_.rbegin(); it != locals_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return &f->second;
    }
    return nullptr;
  }

  /// Assignment conversion of `rhs` (already typed) to `target`; records the
  /// resolution (Builtin or valueOf) in `attr`.
  void assign_conversion(const Type& target, const Type& rhs_type, const Expr& rhs, Attribution& attr) {
    attr.resolution = OperatorResolution::builtin();
    if (target.is_error() || rhs_type.is_error()) return;
    if (!rhs_type.is_void() && t_.assignable(rhs_type, target)) return;
    const std::string incompatible =
        "incompatible types: " + rhs_type.str() + " cannot be converted to " + target.str();
    if (mode_.base_only || !target.is_named() || rhs_type.is_void()) {
      error("E140", rhs.span, incompatible);
      return;
    }
    std::vector<Type> args{rhs_type};
    auto r = resolve_method(target, "valueOf", args, t_, true);
    if (r.status == MethodResolution::Status::Ambiguous) {
      error("E120", rhs.span, ambiguity("valueOf", target, r));
      return;
    }
    if (r.status == MethodResolution::Status::Found && t_.assignable(r.method->ret, target)) {
      attr.resolution = OperatorResolution{ResolutionKind::ValueOfConversion, r.method->sig, Op::Lt};
      attr.method = r.method->sig;
      attr.param_types = r.method->params;
      return;
    }
    if (r.status == MethodResolution::Status::NotFound &&
        resolve_method(target, "valueOf", args, t_, false).status == MethodResolution::Status::Found) {
      error("E141", rhs.span, "method valueOf(" + rhs_type.str() + ") in '" + target.str() + "' is not static");
      return;
    }
    error("E140", rhs.span, incompatible);
  }

  std::string ambiguity(std::string_view name, const Type& recv, const MethodResolution& r) const {
    std::string msg = "ambiguous call to '" + std::string(name) + "' on " + recv.str() + ": candidates";
    for (std::size_t i = 0; i < r.candidates.size(); ++i)
      msg += (i ? ", " : " ") + r.candidates[i].owner.str() + "." + r.candidates[i].sig->signature();
    return msg;
  }

  // ---- expressions ----------------------------------------------------------

  Type set(Expr& e, Type t, std::optional<OperatorResolution> res = std::nullopt) {
    if (!e.attr) e.attr.emplace();
    e.attr->type = t;
    if (res) e.attr->resolution = *res;
    return t;
  }

  Type expr(Expr& e, bool used = true) {
    Type t = operand(e, used);
    if (e.attr && e.attr->role == NameRole::Class) {
      error("E100", e.span, "cannot find symbol '" + e.text + "'");
      return set(e, Type::error());
    }
    return t;
  }

  /// Like expr, but a bare class name is accepted (receiver position).
  Type operand(Expr& e, bool used = true) {
    switch (e.kind) {
      case ExprKind::Literal: return literal(e, false);
      case ExprKind::Name: return name(e);
      case ExprKind::This:
        if (static_ctx_) {
          error("E102", e.span, "'this' cannot be referenced from a static context");
          return set(e, Type::error());
        }
        return set(e, cls_->this_type(t_));
      case ExprKind::FieldAccess: return field_access(e);
      case ExprKind::MethodCall: return call(e);
      case ExprKind::New: return construct(e);
      case ExprKind::NewArray: return new_array(e);
      case ExprKind::Paren: return set(e, expr(e.child(0)));
      case ExprKind::Assign: return assign(e);
      case ExprKind::Binary: return binary(e);
      case ExprKind::Unary: return unary(e);
      case ExprKind::IndexRead: return index_read(e);
      case ExprKind::IndexWrite: return index_write(e, used);
    }
    return set(e, Type::error());
  }

  Type literal(Expr& e, bool negated) {
    switch (e.literal) {
      case LiteralKind::Int:
      case LiteralKind::Long: {
        bool is_long = e.literal == LiteralKind::Long;
        std::string_view digits = e.text;
        if (is_long) digits.remove_suffix(1);
        unsigned long long v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        unsigned long long limit = is_long ? 9223372036854775807ULL : 2147483647ULL;
        if (negated) ++limit;
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || v > limit) {
          error("E107", e.span, std::string(is_long ? "long" : "integer") + " literal " + e.text + " is out of range");
          return set(e, Type::error());
        }
        return set(e, Type::primitive(is_long ? Primitive::Long : Primitive::Int));
      }
      case LiteralKind::Double: return set(e, Type::primitive(Primitive::Double));
      case LiteralKind::String: return set(e, Type::named("String"));
      case LiteralKind::Boolean: return set(e, Type::primitive(Primitive::Boolean));
      case LiteralKind::Null: return set(e, Type::null_type());
    }
    return set(e, Type::error());
  }

  Type name(Expr& e) {
    e.attr.emplace();
    if (const Type* local = lookup_local(e.text)) {
      e.attr->role = NameRole::Local;
      return set(e, *local);
    }
    if (auto ft = t_.field_type(cls_->this_type(t_), e.text)) {
      if (static_ctx_) {
        error("E102", e.span, "non-static field '" + e.text + "' cannot be referenced from a static context");
        return set(e, Type::error());
      }
      e.attr->role = NameRole::Field;
      return set(e, *ft);
    }
    if (t_.find(e.text)) {
      e.attr->role = NameRole::Class;
      return set(e, Type::named(e.text));
    }
    error("E100", e.span, "cannot find symbol '" + e.text + "'");
    return set(e, Type::error());
  }

  Type field_access(Expr& e) {
    Type obj = operand(e.child(0));
    e.attr.emplace();
    if (obj.is_error()) return set(e, Type::error());
    if (e.child(0).attr->role == NameRole::Class) {
      error("E100", e.span, "cannot find static field '" + e.text + "' in class " + obj.str());
      return set(e, Type::error());
    }
    if (obj.is_array() && e.text == "length") {
      e.attr->role = NameRole::ArrayLength;
      return set(e, Type::primitive(Primitive::Int));
    }
    if (auto ft = t_.field_type(obj, e.text)) {
      e.attr->role = NameRole::Field;
      return set(e, *ft);
    }
    error("E100", e.span, "cannot find field '" + e.text + "' in type " + obj.str());
    return set(e, Type::error());
  }

  std::optional<std::vector<Type>> arguments(std::span<Expr> args) {
    std::vector<Type> out;
    bool ok = true;
    for (auto& a : args) {
      out.push_back(expr(a));
      ok = ok && !out.back().is_error();
    }
    if (!ok) return std::nullopt;
    return out;
  }

  Type finish_call(Expr& e, const ResolvedMethod& m) {
    e.attr->method = m.sig;
    e.attr->param_types = m.params;
    return set(e, m.ret);
  }

  Type call(Expr& e) {
    std::optional<Type> recv;
    bool static_recv = false;
    if (e.has_receiver) {
      Type r = operand(e.child(0));
      static_recv = e.child(0).attr && e.child(0).attr->role == NameRole::Class;
      if (!r.is_error()) recv = r;
      else recv = Type::error();
    }
    auto args = arguments(e.args());
    e.attr.emplace();
    if (!args || (recv && recv->is_error())) return set(e, Type::error());

    if (!recv) {
      Type self = cls_->this_type(t_);
      auto r = resolve_method(self, e.text, *args, t_, false);
      if (r.status == MethodResolution::Status::NotFound) {
        auto s = resolve_method(self, e.text, *args, t_, true);
        if (s.status != MethodResolution::Status::NotFound) r = std::move(s);
      } else if (static_ctx_ && r.status == MethodResolution::Status::Found) {
        error("E102", e.span, "non-static method '" + r.method->sig->signature() + "' cannot be referenced from a static context");
        return set(e, Type::error());
      }
      return call_result(e, self, r, *args);
    }
    if (!recv->is_reference() || recv->is_null()) {
      error("E104", e.span, "cannot call method '" + e.text + "' on type " + recv->str());
      return set(e, Type::error());
    }
    auto r = resolve_method(*recv, e.text, *args, t_, static_recv);
    if (static_recv && r.status == MethodResolution::Status::NotFound &&
        resolve_method(*recv, e.text, *args, t_, false).status != MethodResolution::Status::NotFound) {
      error("E102", e.span, "non-static method '" + e.text + "' cannot be referenced from a static context");
      return set(e, Type::error());
    }
    return call_result(e, *recv, r, *args);
  }

  Type call_result(Expr& e, const Type& recv, const MethodResolution& r, std::span<const Type> args) {
    switch (r.status) {
      case MethodResolution::Status::Found: return finish_call(e, *r.method);
      case MethodResolution::Status::Ambiguous:
        error("E120", e.span, ambiguity(e.text, recv, r));
        break;
      case MethodResolution::Status::NotFound:
        error("E104", e.span, "no applicable method '" + e.text + "(" + arg_list(args) + ")' in type " + recv.str());
        break;
    }
    return set(e, Type::error());
  }

  Type construct(Expr& e) {
    Type t = t_.resolve(e.type_ref, scope_, diags_);
    auto args = arguments(e.children);
    e.attr.emplace();
    if (t.is_error() || !args) return set(e, Type::error());
    const ClassSig* c = t.is_named() ? t_.find(t.name) : nullptr;
    if (!c || c->kind == ClassKind::Interface) {
      error("E101", e.type_ref.span, "cannot instantiate " + t.str());
      return set(e, Type::error());
    }
    auto r = resolve_constructor(t, *args, t_);
    switch (r.status) {
      case MethodResolution::Status::Found: return finish_call(e, *r.method);
      case MethodResolution::Status::Ambiguous:
        error("E120", e.span, ambiguity("<init>", t, r));
        break;
      case MethodResolution::Status::NotFound:
        error("E104", e.span, "no applicable constructor " + t.str() + "(" + arg_list(*args) + ")");
        break;
    }
    return set(e, Type::error());
  }

  Type new_array(Expr& e) {
    TypeRef elem_ref = e.type_ref;
    elem_ref.is_array = false;
    Type elem = t_.resolve(elem_ref, scope_, diags_);
    Type len = expr(e.child(0));
    if (!len.is_error() && !t_.assignable(len, Type::primitive(Primitive::Int)))
      error("E101", e.child(0).span, "array length must be int, found " + len.str());
    if (elem.is_error()) return set(e, Type::error());
    return set(e, Type::array(elem));
  }

  Type assign(Expr& e) {
    Expr& target = e.child(0);
    Type lhs = operand(target);
    Type rhs = expr(e.child(1));
    e.attr.emplace();
    e.attr->resolution = OperatorResolution::builtin();
    if (lhs.is_error()) return set(e, Type::error());
    NameRole role = target.attr ? target.attr->role : NameRole::Unresolved;
    if (role != NameRole::Local && role != NameRole::Field) {
      error("E101", target.span, "cannot assign to '" + (target.text.empty() ? to_sexpr(target) : target.text) + "'");
      return set(e, Type::error());
    }
    assign_conversion(lhs, rhs, e.child(1), *e.attr);
    return set(e, lhs);
  }

  // ---- operators --------------------------------------------------------------

  void not_applicable(const Expr& e, std::string_view op, std::initializer_list<const Type*> types) {
    error("E130", e.op_span, "operator '" + std::string(op) + "' not applicable to types " + type_list(types));
  }

  /// Base typing of a binary operator; nullopt if no base rule applies.
  std::optional<Type> base_binary(Op op, const Type& l, const Type& r) const {
    auto lp = as_primitive(l);
    auto rp = as_primitive(r);
    bool numeric = lp && rp && is_numeric(*lp) && is_numeric(*rp);
    bool integral = lp && rp && is_integral(*lp) && is_integral(*rp);
    bool boolean = lp && rp && *lp == Primitive::Boolean && *rp == Primitive::Boolean;
    switch (op) {
      case Op::Add:
        if ((is_string(l) || is_string(r)) && !l.is_void() && !r.is_void()) return Type::named("String");
        [[fallthrough]];
      case Op::Sub:
      case Op::Mul:
      case Op::Div:
      case Op::Rem:
        if (numeric) return Type::primitive(promote(*lp, *rp));
        return std::nullopt;
      case Op::BitAnd:
      case Op::BitOr:
      case Op::BitXor:
        if (boolean) return Type::primitive(Primitive::Boolean);
        if (integral) return Type::primitive(promote(*lp, *rp));
        return std::nullopt;
      case Op::Shl:
      case Op::Shr:
        if (integral) return Type::primitive(promote(*lp, *lp));
        return std::nullopt;
      case Op::Lt:
      case Op::Le:
      case Op::Gt:
      case Op::Ge:
        if (numeric) return Type::primitive(Primitive::Boolean);
        return std::nullopt;
      case Op::Eq:
      case Op::Ne:
        if (numeric || boolean) return Type::primitive(Primitive::Boolean);
        if (l.is_reference() && r.is_reference()) return Type::primitive(Primitive::Boolean);
        return std::nullopt;
      case Op::LogAnd:
      case Op::LogOr:
        if (boolean) return Type::primitive(Primitive::Boolean);
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  static bool overloadable_receiver(const Type& t) { return t.is_named() || t.is_type_var(); }

  Type binary(Expr& e) {
    Type l = expr(e.child(0));
    Type r = expr(e.child(1));
    e.attr.emplace();
    if (l.is_error() || r.is_error()) return set(e, Type::error());
    if (auto t = base_binary(e.op, l, r)) return set(e, *t, OperatorResolution::builtin());

    std::string_view method = overload_name(e.op);
    if (method.empty() || !overloadable_receiver(l)) {
      not_applicable(e, op_text(e.op), {&l, &r});
      return set(e, Type::error());
    }
    std::vector<Type> args{r};
    auto res = resolve_method(l, method, args, t_, false);
    bool compare = is_relational(e.op);
    if (mode_.base_only) {
      not_applicable(e, op_text(e.op), {&l, &r});
      if (res.status != MethodResolution::Status::Found) return set(e, Type::error());
      return set(e, compare ? Type::primitive(Primitive::Boolean) : res.method->ret);
    }
    switch (res.status) {
      case MethodResolution::Status::NotFound:
        not_applicable(e, op_text(e.op), {&l, &r});
        return set(e, Type::error());
      case MethodResolution::Status::Ambiguous:
        error("E120", e.op_span, ambiguity(method, l, res));
        return set(e, Type::error());
      case MethodResolution::Status::Found: break;
    }
    e.attr->method = res.method->sig;
    e.attr->param_types = res.method->params;
    if (compare) {
      if (!res.method->ret.is_primitive(Primitive::Int)) {
        error("E131", e.op_span, "compareTo must return int for operator '" + std::string(op_text(e.op)) +
                                     "', found " + res.method->ret.str());
        return set(e, Type::error());
      }
      return set(e, Type::primitive(Primitive::Boolean),
                 OperatorResolution{ResolutionKind::OverloadedCompare, res.method->sig, e.op});
    }
    return set(e, res.method->ret, OperatorResolution{ResolutionKind::OverloadedBinary, res.method->sig, e.op});
  }

  Type unary(Expr& e) {
    Expr& inner = e.child(0);
    Type t;
    bool min_literal = inner.kind == ExprKind::Literal &&
                       (inner.literal == LiteralKind::Int || inner.literal == LiteralKind::Long);
    if (e.op == Op::Neg && min_literal) t = literal(inner, true);
    else t = expr(inner);
    e.attr.emplace();
    if (t.is_error()) return set(e, Type::error());
    auto p = as_primitive(t);
    switch (e.op) {
      case Op::Neg:
        if (p && is_numeric(*p)) return set(e, Type::primitive(promote(*p, *p)), OperatorResolution::builtin());
        break;
      case Op::BitNot:
        if (p && is_integral(*p)) return set(e, Type::primitive(promote(*p, *p)), OperatorResolution::builtin());
        break;
      case Op::Not:
        if (p && *p == Primitive::Boolean) return set(e, Type::primitive(Primitive::Boolean), OperatorResolution::builtin());
        not_applicable(e, op_text(e.op), {&t});
        return set(e, Type::error());
      default: break;
    }
    if (!overloadable_receiver(t)) {
      not_applicable(e, op_text(e.op), {&t});
      return set(e, Type::error());
    }
    std::string_view method = overload_name(e.op);
    auto res = resolve_method(t, method, {}, t_, false);
    if (mode_.base_only) {
      not_applicable(e, op_text(e.op), {&t});
      return set(e, res.status == MethodResolution::Status::Found ? res.method->ret : Type::error());
    }
    switch (res.status) {
      case MethodResolution::Status::NotFound:
        not_applicable(e, op_text(e.op), {&t});
        return set(e, Type::error());
      case MethodResolution::Status::Ambiguous:
        error("E120", e.op_span, ambiguity(method, t, res));
        return set(e, Type::error());
      case MethodResolution::Status::Found: break;
    }
    e.attr->method = res.method->sig;
    return set(e, res.method->ret, OperatorResolution{ResolutionKind::OverloadedUnary, res.method->sig, e.op});
  }

  bool int_index(const Type& key) const { return t_.assignable(key, Type::primitive(Primitive::Int)); }

  Type index_read(Expr& e) {
    Type c = expr(e.child(0));
    Type k = expr(e.child(1));
    e.attr.emplace();
    if (c.is_error() || k.is_error()) return set(e, Type::error());
    if (c.is_array() && int_index(k)) return set(e, c.element(), OperatorResolution::builtin());
    if (mode_.base_only || !overloadable_receiver(c)) {
      not_applicable(e, "[]", {&c, &k});
      return set(e, Type::error());
    }
    std::vector<Type> args{k};
    auto res = resolve_method(c, "get", args, t_, false);
    switch (res.status) {
      case MethodResolution::Status::NotFound:
        not_applicable(e, "[]", {&c, &k});
        return set(e, Type::error());
      case MethodResolution::Status::Ambiguous:
        error("E120", e.op_span, ambiguity("get", c, res));
        return set(e, Type::error());
      case MethodResolution::Status::Found: break;
    }
    e.attr->method = res.method->sig;
    e.attr->param_types = res.method->params;
    return set(e, res.method->ret, OperatorResolution{ResolutionKind::OverloadedIndexRead, res.method->sig, Op::Lt});
  }

  Type index_write(Expr& e, bool used) {
    Type c = expr(e.child(0));
    Type k = expr(e.child(1));
    Type v = expr(e.child(2));
    e.attr.emplace();
    if (c.is_error() || k.is_error() || v.is_error()) return set(e, Type::error());
    if (c.is_array() && int_index(k) && t_.assignable(v, c.element()))
      return set(e, c.element(), OperatorResolution::builtin());
    if (mode_.base_only || !overloadable_receiver(c)) {
      not_applicable(e, "[]=", {&c, &k, &v});
      return set(e, Type::error());
    }
    std::vector<Type> args{k, v};
    auto set_r = resolve_method(c, "set", args, t_, false);
    auto put_r = resolve_method(c, "put", args, t_, false);
    const MethodResolution* chosen = nullptr;
    if (set_r.status == MethodResolution::Status::Found) {
      chosen = &set_r;
      if (put_r.status == MethodResolution::Status::Found) {
        diags_.push_back(Diagnostic{"W050", Severity::Warning, e.op_span,
                                    "both 'set' and 'put' applicable; 'set' chosen"});
      }
    } else if (set_r.status == MethodResolution::Status::Ambiguous) {
      error("E120", e.op_span, ambiguity("set", c, set_r));
      return set(e, Type::error());
    } else if (put_r.status == MethodResolution::Status::Found) {
      chosen = &put_r;
    } else if (put_r.status == MethodResolution::Status::Ambiguous) {
      error("E120", e.op_span, ambiguity("put", c, put_r));
      return set(e, Type::error());
    } else {
      not_applicable(e, "[]=", {&c, &k, &v});
      return set(e, Type::error());
    }
    const auto& m = *chosen->method;
    e.attr->method = m.sig;
    e.attr->param_types = m.params;
    if (used) {
      diags_.push_back(Diagnostic{"N051", Severity::Note, e.op_span,
                                  "value of indexed assignment is the result of '" + m.sig->name + "', of type " +
                                      m.ret.str()});
    }
    return set(e, m.ret, OperatorResolution{ResolutionKind::OverloadedIndexWrite, m.sig, Op::Lt});
  }

  const ClassTable& t_;
  Mode mode_;
  std::vector<Diagnostic> diags_;
  const ClassSig* cls_ = nullptr;
  bool static_ctx_ = false;
  Type ret_;
  TypeScope scope_;
  std::vector<std::map<std::string, Type>> locals_;
};

}  // namespace

AttributedUnit attribute_unit(Unit unit, const ClassTable& table, Mode mode) {
  auto diags = Checker(table, mode).run(unit);
  return AttributedUnit{std::move(unit), std::move(diags)};
}

}  // namespace oodc
