#include "oodc/interpreter.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace oodc {
namespace {

constexpr int kMaxDepth = 1500;

[[noreturn]] void fail(std::string code, const Span& span, std::string message) {
  throw RuntimeError{std::move(code), span, std::move(message)};
}

std::string unescape(std::string_view lexeme) {
  std::string out;
  std::string_view body = lexeme.substr(1, lexeme.size() - 2);
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c != '\\' || i + 1 == body.size()) {
      out += c;
      continue;
    }
    switch (char n = body[++i]) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      case '0': out += '\0'; break;
      default: out += n; break;
    }
  }
  return out;
}

template <typename T>
T parse_integer(std::string_view text) {
  if (!text.empty() && (text.back() == 'L' || text.back() == 'l')) text.remove_suffix(1);
  unsigned long long v = 0;
  std::from_chars(text.data(), text.data() + text.size(), v);
  return static_cast<T>(v);
}

std::int64_t as_long(const Value& v, const Span& where) {
  if (auto p = std::get_if<std::int32_t>(&v)) return *p;
  if (auto p = std::get_if<std::int64_t>(&v)) return *p;
  if (is_null(v)) fail("R001", where, "null value cannot be unboxed");
  fail("R004", where, "expected an integral value");
}

double as_double(const Value& v, const Span& where) {
  if (auto p = std::get_if<double>(&v)) return *p;
  return static_cast<double>(as_long(v, where));
}

bool as_bool(const Value& v, const Span& where) {
  if (auto p = std::get_if<bool>(&v)) return *p;
  if (is_null(v)) fail("R001", where, "null value cannot be unboxed");
  fail("R004", where, "expected a boolean value");
}

std::int32_t wrap32(std::int64_t v) { return static_cast<std::int32_t>(static_cast<std::uint32_t>(v)); }

std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}
std::int64_t wrap_sub(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}
std::int64_t wrap_mul(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

std::optional<Primitive> static_primitive(const Expr& e) {
  return e.attr ? as_primitive(e.attr->type) : std::nullopt;
}

const BigInt& big(const Value& v, const Span& where) {
  if (auto p = std::get_if<BigInt>(&v)) return *p;
  if (is_null(v)) fail("R001", where, "null BigInteger argument");
  fail("R004", where, "expected a BigInteger value");
}

BigInt shift_left(const BigInt& x, std::int64_t n) {
  if (n >= 0) return x << static_cast<unsigned>(n);
  return x >> static_cast<unsigned>(-n);
}

template <typename T>
std::shared_ptr<T> object_of(const Value& v, const Span& where) {
  if (auto p = std::get_if<std::shared_ptr<T>>(&v)) return *p;
  fail("R001", where, "null receiver");
}

void check_attributed(const Expr& e) {
  if (!e.attr)
    throw std::invalid_argument("interpreter requires attributed input (node " + to_sexpr(e) + ")");
  if (e.attr->resolution && !e.attr->resolution->is_builtin())
    throw std::invalid_argument("interpreter requires desugared input; found overloaded '" +
                                std::string(e.attr->resolution->method_name()) + "'");
  for (const auto& c : e.children) check_attributed(c);
}

void check_attributed(const Stmt& s) {
  if (s.attr && s.attr->resolution && !s.attr->resolution->is_builtin())
    throw std::invalid_argument("interpreter requires desugared input; found valueOf conversion");
  if (s.expr) check_attributed(*s.expr);
  for (const auto& c : s.body) check_attributed(c);
}

}  // namespace

Value* Environment::lookup(const std::string& name) {
  for (auto f = frames_.rbegin(); f != frames_.rend(); ++f)
    for (auto it = f->rbegin(); it != f->rend(); ++it)
      if (it->first == name) return &it->second;
  return nullptr;
}

Interpreter::Interpreter(const ClassTable& table, std::span<const Unit> units, std::ostream* stream)
    : table_(table), stream_(stream) {
  for (const auto& u : units) {
    for (const auto& c : u.classes) {
      decls_[c.name] = &c;
      for (const auto& m : c.members)
        if (m.body) check_attributed(*m.body);
    }
  }
}

std::vector<std::string> Interpreter::native_names() {
  return {"BigInteger.add",       "BigInteger.and",      "BigInteger.compareTo", "BigInteger.divide",
          "BigInteger.multiply",  "BigInteger.negate",   "BigInteger.not",       "BigInteger.or",
          "BigInteger.remainder", "BigInteger.shiftLeft", "BigInteger.shiftRight", "BigInteger.subtract",
          "BigInteger.toString",  "BigInteger.valueOf",  "BigInteger.xor",       "Boolean.valueOf",
          "Double.valueOf",       "Integer.valueOf",     "List.<init>",          "List.add",
          "List.get",             "List.set",            "List.size",            "Long.valueOf",
          "Map.<init>",           "Map.get",             "Map.put",              "Map.size",
          "Object.toString",      "Out.println"};
}

void Interpreter::print_line(const std::string& line) {
  output_ += line;
  output_ += '\n';
  if (stream_) *stream_ << line << '\n';
}

std::string Interpreter::stringify(const Value& v, const Span& where) {
  if (!std::holds_alternative<std::shared_ptr<Object>>(v)) return render_value(v);
  const ClassSig* object = table_.find("Object");
  if (!object) return render_value(v);
  for (const auto& m : object->methods)
    if (m->name == "toString" && m->params.empty()) {
      Value s = invoke(m.get(), v, {}, where);
      return is_null(s) ? "null" : render_value(s);
    }
  return render_value(v);
}

Value Interpreter::call_native(const std::string& q, const Value& recv, std::vector<Value> args,
                               const Span& where) {
  auto arg_long = [&](std::size_t i) { return as_long(args.at(i), where); };
  auto index = [&](std::size_t size) {
    std::int64_t i = arg_long(0);
    if (i < 0 || static_cast<std::size_t>(i) >= size)
      fail("R002", where, "index " + std::to_string(i) + " out of bounds for length " + std::to_string(size));
    return static_cast<std::size_t>(i);
  };

  if (q == "Object.toString") return render_value(recv);
  if (q == "Out.println") {
    print_line(is_null(args.at(0)) ? "null" : render_value(args.at(0)));
    return Null{};
  }
  if (q == "Integer.valueOf") return static_cast<std::int32_t>(arg_long(0));
  if (q == "Long.valueOf") return arg_long(0);
  if (q == "Double.valueOf") return as_double(args.at(0), where);
  if (q == "Boolean.valueOf") return as_bool(args.at(0), where);

  if (q.starts_with("BigInteger.")) {
    std::string_view m = std::string_view(q).substr(11);
    if (m == "valueOf") return BigInt(arg_long(0));
    const BigInt& x = big(recv, where);
    if (m == "toString") return x.str();
    if (m == "negate") return BigInt(-x);
    if (m == "not") return BigInt(-x - 1);
    if (m == "shiftLeft") return shift_left(x, arg_long(0));
    if (m == "shiftRight") return shift_left(x, -arg_long(0));
    const BigInt& y = big(args.at(0), where);
    if (m == "add") return BigInt(x + y);
    if (m == "subtract") return BigInt(x - y);
    if (m == "multiply") return BigInt(x * y);
    if (m == "and") return BigInt(x & y);
    if (m == "or") return BigInt(x | y);
    if (m == "xor") return BigInt(x ^ y);
    if (m == "compareTo") return static_cast<std::int32_t>(x < y ? -1 : (x == y ? 0 : 1));
    if (m == "divide" || m == "remainder") {
      if (y == 0) fail("R003", where, "BigInteger divide by zero");
      return m == "divide" ? BigInt(x / y) : BigInt(x % y);
    }
  }

  if (q == "List.<init>") return std::make_shared<ListObject>();
  if (q.starts_with("List.")) {
    auto list = object_of<ListObject>(recv, where);
    if (q == "List.size") return static_cast<std::int32_t>(list->items.size());
    if (q == "List.add") {
      list->items.push_back(args.at(0));
      return true;
    }
    if (q == "List.get") return list->items[index(list->items.size())];
    if (q == "List.set") {
      std::size_t i = index(list->items.size());
      Value old = std::move(list->items[i]);
      list->items[i] = args.at(1);
      return old;
    }
  }

  if (q == "Map.<init>") return std::make_shared<MapObject>();
  if (q.starts_with("Map.")) {
    auto map = object_of<MapObject>(recv, where);
    if (q == "Map.size") return static_cast<std::int32_t>(map->entries.size());
    auto find = [&]() -> std::pair<Value, Value>* {
      for (auto& entry : map->entries)
        if (values_equal(entry.first, args.at(0))) return &entry;
      return nullptr;
    };
    if (q == "Map.get") {
      auto* e = find();
      return e ? e->second : Value(Null{});
    }
    if (q == "Map.put") {
      if (auto* e = find()) {
        Value old = std::move(e->second);
        e->second = args.at(1);
        return old;
      }
      map->entries.emplace_back(args.at(0), args.at(1));
      return Null{};
    }
  }
  fail("R004", where, "no native binding for '" + q + "'");
}

Value Interpreter::default_value(const Type& t) const {
  if (!t.is_primitive()) return Null{};
  switch (t.prim) {
    case Primitive::Int:
    case Primitive::Char: return std::int32_t{0};
    case Primitive::Long: return std::int64_t{0};
    case Primitive::Double: return 0.0;
    case Primitive::Boolean: return false;
  }
  return Null{};
}

Value Interpreter::coerce(Value v, const Type& target, const Span& where) const {
  std::optional<Primitive> p;
  if (target.is_primitive()) p = target.prim;
  else if (target.is_named()) p = unboxed(target);
  if (!p) return v;
  if (is_null(v)) {
    if (target.is_primitive()) fail("R001", where, "null value cannot be unboxed to " + target.str());
    return v;
  }
  switch (*p) {
    case Primitive::Long:
      if (auto i = std::get_if<std::int32_t>(&v)) return std::int64_t{*i};
      break;
    case Primitive::Double:
      if (auto i = std::get_if<std::int32_t>(&v)) return static_cast<double>(*i);
      if (auto l = std::get_if<std::int64_t>(&v)) return static_cast<double>(*l);
      break;
    default: break;
  }
  return v;
}

const Stmt* Interpreter::body_of(const MethodSig* sig) const {
  if (sig->member_index < 0) return nullptr;
  auto it = decls_.find(sig->declaring_class);
  if (it == decls_.end()) return nullptr;
  const auto& m = it->second->members.at(static_cast<std::size_t>(sig->member_index));
  return m.body ? &*m.body : nullptr;
}

Value Interpreter::call_static(std::string_view cls, std::string_view method, std::vector<Value> args) {
  const ClassSig* c = table_.find(cls);
  if (c)
    for (const auto& m : c->methods)
      if (m->name == method && m->is_static && m->params.size() == args.size())
        return invoke(m.get(), Null{}, std::move(args), c->span);
  fail("R006", Span{}, "no static method '" + std::string(cls) + "." + std::string(method) + "'");
}

Value Interpreter::invoke(const MethodSig* sig, Value receiver, std::vector<Value> args, const Span& where) {
  const MethodSig* impl = sig;
  if (!sig->is_static && !sig->is_constructor()) {
    if (is_null(receiver)) fail("R001", where, "null receiver for '" + sig->name + "'");
    impl = table_.dispatch(runtime_class_name(receiver), sig);
  }
  if (impl->is_native) return call_native(impl->qualified_name(), receiver, std::move(args), where);
  const Stmt* body = body_of(impl);
  if (!body) {
    if (impl->is_abstract) fail("R004", where, "no implementation of '" + impl->qualified_name() + "'");
    return Null{};
  }
  if (++depth_ > kMaxDepth) {
    depth_ = 0;
    fail("R005", where, "call depth exceeded in '" + impl->qualified_name() + "'");
  }
  Environment env(std::move(receiver));
  for (std::size_t i = 0; i < args.size(); ++i)
    env.declare(impl->param_names[i], coerce(std::move(args[i]), impl->params[i], where));
  Environment* saved_env = std::exchange(env_, &env);
  Type saved_ret = std::exchange(ret_type_, impl->ret);
  Value result = Null{};
  if (exec(*body) == Flow::Return) result = std::move(return_value_);
  return_value_ = Null{};
  env_ = saved_env;
  ret_type_ = std::move(saved_ret);
  --depth_;
  return result;
}

void Interpreter::run_constructor(const MethodSig* ctor, const Value& self, std::vector<Value> args,
                                  const Span& where) {
  const ClassSig* cls = table_.find(ctor->declaring_class);
  if (cls && cls->superclass) {
    const ClassSig* super = table_.find(cls->superclass->name);
    if (super && !super->is_stub)
      for (const auto& c : super->constructors)
        if (c->params.empty()) run_constructor(c.get(), self, {}, where);
  }
  invoke(ctor, self, std::move(args), where);
}

Value Interpreter::construct(const Expr& e) {
  const MethodSig* ctor = e.attr->method;
  auto args = eval_args(e.children, e.attr->param_types);
  if (ctor->is_native) return call_native(ctor->declaring_class + ".<init>", Null{}, std::move(args), e.span);
  auto obj = std::make_shared<Object>();
  obj->class_name = ctor->declaring_class;
  obj->serial = next_serial_++;
  for (const auto& f : table_.all_fields(obj->class_name)) obj->fields.emplace_back(f.name, default_value(f.type));
  Value self = obj;
  run_constructor(ctor, self, std::move(args), e.span);
  return self;
}

std::vector<Value> Interpreter::eval_args(std::span<const Expr> args, const std::vector<Type>& types) {
  std::vector<Value> out;
  out.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    Value v = eval(args[i]);
    out.push_back(i < types.size() ? coerce(std::move(v), types[i], args[i].span) : std::move(v));
  }
  return out;
}

Value Interpreter::call(const Expr& e) {
  const MethodSig* sig = e.attr->method;
  if (!sig) throw std::invalid_argument("unresolved call '" + e.text + "'");
  Value recv = Null{};
  if (e.has_receiver) {
    const Expr& r = *e.receiver();
    bool class_ref = r.attr && r.attr->role == NameRole::Class;
    if (!class_ref) recv = eval(r);
  } else if (!sig->is_static) {
    recv = env_->self();
  }
  auto args = eval_args(e.args(), e.attr->param_types);
  if (sig->is_static) recv = Null{};
  return invoke(sig, std::move(recv), std::move(args), e.span);
}

Value Interpreter::assign(const Expr& e) {
  const Expr& target = e.child(0);
  const Type& type = e.attr->type;
  if (target.kind == ExprKind::FieldAccess) {
    Value obj = eval(target.child(0));
    Value v = coerce(eval(e.child(1)), type, e.span);
    auto o = std::get_if<std::shared_ptr<Object>>(&obj);
    if (!o) fail("R001", target.span, "null receiver for field '" + target.text + "'");
    *(*o)->field(target.text) = v;
    return v;
  }
  Value v = coerce(eval(e.child(1)), type, e.span);
  if (target.attr->role == NameRole::Local) {
    *env_->lookup(target.text) = v;
  } else {
    auto& self = std::get<std::shared_ptr<Object>>(env_->self());
    *self->field(target.text) = v;
  }
  return v;
}

Value Interpreter::eval(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Literal:
      switch (e.literal) {
        case LiteralKind::Int: return parse_integer<std::int32_t>(e.text);
        case LiteralKind::Long: return parse_integer<std::int64_t>(e.text);
        case LiteralKind::Double: return std::strtod(e.text.c_str(), nullptr);
        case LiteralKind::String: return unescape(e.text);
        case LiteralKind::Boolean: return e.text == "true";
        case LiteralKind::Null: return Null{};
      }
      return Null{};
    case ExprKind::Name:
      if (e.attr->role == NameRole::Local) return *env_->lookup(e.text);
      if (e.attr->role == NameRole::Field)
        return *std::get<std::shared_ptr<Object>>(env_->self())->field(e.text);
      throw std::invalid_argument("name '" + e.text + "' is not a value");
    case ExprKind::This: return env_->self();
    case ExprKind::FieldAccess: {
      Value obj = eval(e.child(0));
      if (e.attr->role == NameRole::ArrayLength)
        return static_cast<std::int32_t>(object_of<ArrayObject>(obj, e.span)->items.size());
      auto o = std::get_if<std::shared_ptr<Object>>(&obj);
      if (!o) fail("R001", e.span, "null receiver for field '" + e.text + "'");
      return *(*o)->field(e.text);
    }
    case ExprKind::MethodCall: return call(e);
    case ExprKind::New: return construct(e);
    case ExprKind::NewArray: {
      std::int64_t n = as_long(eval(e.child(0)), e.span);
      if (n < 0) fail("R002", e.span, "negative array size " + std::to_string(n));
      auto arr = std::make_shared<ArrayObject>();
      arr->items.assign(static_cast<std::size_t>(n), default_value(e.attr->type.element()));
      return arr;
    }
    case ExprKind::Paren: return eval(e.child(0));
    case ExprKind::Assign: return assign(e);
    case ExprKind::Binary: return eval_binary(e);
    case ExprKind::Unary: return eval_unary(e);
    case ExprKind::IndexRead:
    case ExprKind::IndexWrite: {
      Value coll = eval(e.child(0));
      std::int64_t i = as_long(eval(e.child(1)), e.child(1).span);
      auto arr = object_of<ArrayObject>(coll, e.span);
      if (i < 0 || static_cast<std::size_t>(i) >= arr->items.size())
        fail("R002", e.span, "index " + std::to_string(i) + " out of bounds for length " +
                                 std::to_string(arr->items.size()));
      if (e.kind == ExprKind::IndexRead) return arr->items[static_cast<std::size_t>(i)];
      Value v = coerce(eval(e.child(2)), e.attr->type, e.span);
      arr->items[static_cast<std::size_t>(i)] = v;
      return v;
    }
  }
  return Null{};
}

Value Interpreter::eval_unary(const Expr& e) {
  const Expr& inner = e.child(0);
  if (e.op == Op::Neg && inner.kind == ExprKind::Literal && inner.literal == LiteralKind::Int &&
      inner.text == "2147483648")
    return std::numeric_limits<std::int32_t>::min();
  if (e.op == Op::Neg && inner.kind == ExprKind::Literal && inner.literal == LiteralKind::Long &&
      inner.text.starts_with("9223372036854775808"))
    return std::numeric_limits<std::int64_t>::min();
  Value v = eval(inner);
  Primitive p = e.attr->type.prim;
  switch (e.op) {
    case Op::Not: return !as_bool(v, e.span);
    case Op::Neg:
      if (p == Primitive::Double) return -as_double(v, e.span);
      if (p == Primitive::Long) return wrap_sub(0, as_long(v, e.span));
      return wrap32(-as_long(v, e.span));
    case Op::BitNot:
      if (p == Primitive::Long) return ~as_long(v, e.span);
      return wrap32(~as_long(v, e.span));
    default: break;
  }
  throw std::invalid_argument("not a unary operator");
}

Value Interpreter::eval_binary(const Expr& e) {
  if (e.op == Op::LogAnd) return as_bool(eval(e.child(0)), e.span) && as_bool(eval(e.child(1)), e.span);
  if (e.op == Op::LogOr) return as_bool(eval(e.child(0)), e.span) || as_bool(eval(e.child(1)), e.span);

  Value l = eval(e.child(0));
  Value r = eval(e.child(1));
  const Type& result = e.attr->type;

  if (e.op == Op::Add && result.is_named("String")) return stringify(l, e.span) + stringify(r, e.span);

  auto lp = static_primitive(e.child(0));
  auto rp = static_primitive(e.child(1));
  bool numeric = lp && rp && is_numeric(*lp) && is_numeric(*rp);

  if (e.op == Op::Eq || e.op == Op::Ne) {
    bool prim_operand = e.child(0).attr->type.is_primitive() || e.child(1).attr->type.is_primitive();
    bool eq;
    if (prim_operand && numeric) {
      Primitive p = promote(*lp, *rp);
      eq = p == Primitive::Double ? as_double(l, e.span) == as_double(r, e.span)
                                  : as_long(l, e.span) == as_long(r, e.span);
    } else if (prim_operand) {
      eq = as_bool(l, e.span) == as_bool(r, e.span);
    } else {
      eq = values_equal(l, r);
    }
    return e.op == Op::Eq ? eq : !eq;
  }

  if (lp && rp && *lp == Primitive::Boolean) {
    bool a = as_bool(l, e.span);
    bool b = as_bool(r, e.span);
    switch (e.op) {
      case Op::BitAnd: return a && b;
      case Op::BitOr: return a || b;
      case Op::BitXor: return a != b;
      default: break;
    }
  }
  if (!numeric) throw std::invalid_argument("operator '" + std::string(op_text(e.op)) + "' on non-numeric operands");

  if (e.op == Op::Shl || e.op == Op::Shr) {
    std::int64_t n = as_long(r, e.span);
    if (result.prim == Primitive::Long) {
      std::int64_t a = as_long(l, e.span);
      int s = static_cast<int>(n & 63);
      if (e.op == Op::Shl) return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) << s);
      return a >> s;
    }
    std::int32_t a = static_cast<std::int32_t>(as_long(l, e.span));
    int s = static_cast<int>(n & 31);
    if (e.op == Op::Shl) return static_cast<std::int32_t>(static_cast<std::uint32_t>(a) << s);
    return a >> s;
  }

  Primitive p = promote(*lp, *rp);
  if (p == Primitive::Double) {
    double a = as_double(l, e.span);
    double b = as_double(r, e.span);
    switch (e.op) {
      case Op::Add: return a + b;
      case Op::Sub: return a - b;
      case Op::Mul: return a * b;
      case Op::Div: return a / b;
      case Op::Rem: return std::fmod(a, b);
      case Op::Lt: return a < b;
      case Op::Le: return a <= b;
      case Op::Gt: return a > b;
      case Op::Ge: return a >= b;
      default: break;
    }
    throw std::invalid_argument("invalid double operator");
  }

  std::int64_t a = as_long(l, e.span);
  std::int64_t b = as_long(r, e.span);
  std::int64_t v = 0;
  switch (e.op) {
    case Op::Lt: return a < b;
    case Op::Le: return a <= b;
    case Op::Gt: return a > b;
    case Op::Ge: return a >= b;
    case Op::Add: v = wrap_add(a, b); break;
    case Op::Sub: v = wrap_sub(a, b); break;
    case Op::Mul: v = wrap_mul(a, b); break;
    case Op::Div:
    case Op::Rem:
      if (b == 0) fail("R003", e.op_span, "division by zero");
      if (b == -1) v = e.op == Op::Div ? wrap_sub(0, a) : 0;
      else v = e.op == Op::Div ? a / b : a % b;
      break;
    case Op::BitAnd: v = a & b; break;
    case Op::BitOr: v = a | b; break;
    case Op::BitXor: v = a ^ b; break;
    default: throw std::invalid_argument("invalid integral operator");
  }
  if (p == Primitive::Long) return v;
  return wrap32(v);
}

Interpreter::Flow Interpreter::exec(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::Block: {
      env_->push();
      for (const auto& c : s.body) {
        if (exec(c) == Flow::Return) {
          env_->pop();
          return Flow::Return;
        }
      }
      env_->pop();
      return Flow::Normal;
    }
    case StmtKind::LocalVar: {
      const Type& t = s.attr->type;
      Value v = s.expr ? coerce(eval(*s.expr), t, s.span) : default_value(t);
      env_->declare(s.var_name, std::move(v));
      return Flow::Normal;
    }
    case StmtKind::ExprStmt:
      eval(*s.expr);
      return Flow::Normal;
    case StmtKind::If: {
      bool c = as_bool(eval(*s.expr), s.expr->span);
      const Stmt* branch = c ? &s.body[0] : (s.body.size() > 1 ? &s.body[1] : nullptr);
      if (!branch) return Flow::Normal;
      env_->push();
      Flow f = exec(*branch);
      env_->pop();
      return f;
    }
    case StmtKind::While:
      while (as_bool(eval(*s.expr), s.expr->span)) {
        env_->push();
        Flow f = exec(s.body[0]);
        env_->pop();
        if (f == Flow::Return) return f;
      }
      return Flow::Normal;
    case StmtKind::Return:
      return_value_ = s.expr ? coerce(eval(*s.expr), ret_type_, s.span) : Value(Null{});
      return Flow::Return;
  }
  return Flow::Normal;
}

RunOutcome evaluate_program(std::span<const Unit> units, const ClassTable& table,
                            std::string_view entry_class, std::ostream* stream) {
  RunOutcome outcome;
  std::string entry(entry_class);
  if (entry.empty()) {
    std::vector<std::string> found;
    for (const auto& u : units)
      for (const auto& c : u.classes)
        if (const ClassSig* sig = table.find(c.name))
          for (const auto& m : sig->methods)
            if (m->name == "main" && m->is_static && m->params.empty()) found.push_back(c.name);
    if (found.size() != 1) {
      outcome.error = RuntimeError{"R006", {},
                                   found.empty() ? "no class declares a static main()"
                                                 : "several classes declare a static main(); choose one"};
      return outcome;
    }
    entry = found.front();
  }
  Interpreter interp(table, units, stream);
  try {
    outcome.exit_value = interp.call_static(entry, "main", {});
  } catch (const RuntimeError& err) {
    outcome.error = err;
  }
  outcome.output = interp.output();
  return outcome;
}

}  // namespace oodc
