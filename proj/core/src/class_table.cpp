#include "oodc/class_table.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

namespace oodc {

std::string MethodSig::qualified_name() const { return declaring_class + "." + name; }

std::string MethodSig::signature() const {
  std::string out = (is_constructor() ? declaring_class : name) + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += params[i].str();
  }
  return out + ")";
}

Type ClassSig::this_type(const ClassTable& table) const {
  std::vector<Type> args;
  for (int id : type_params) args.push_back(Type::type_var(table.type_param(id).name, id));
  return Type::named(name, std::move(args));
}

Type substitute(const Type& t, const std::map<int, Type>& subst) {
  if (subst.empty()) return t;
  if (t.is_type_var()) {
    auto it = subst.find(t.var_id);
    return it == subst.end() ? t : it->second;
  }
  if (t.args.empty()) return t;
  Type out = t;
  for (auto& a : out.args) a = substitute(a, subst);
  return out;
}

namespace {

std::map<int, Type> class_subst(const ClassSig& cls, const Type& inst) {
  std::map<int, Type> m;
  if (inst.args.size() != cls.type_params.size()) return m;
  for (std::size_t i = 0; i < cls.type_params.size(); ++i) m[cls.type_params[i]] = inst.args[i];
  return m;
}

std::vector<Type> substitute_all(const std::vector<Type>& ts, const std::map<int, Type>& subst) {
  std::vector<Type> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(substitute(t, subst));
  return out;
}

/// Receiver type used for member lookup: type variables are replaced by their
/// bound, arrays by Object.
std::optional<Type> lookup_root(const Type& receiver, const ClassTable& table) {
  Type t = receiver;
  for (int guard = 0; t.is_type_var() && guard < 64; ++guard) t = table.type_param(t.var_id).bound;
  if (t.is_array()) return table.object_type();
  if (!t.is_named() || !table.find(t.name)) return std::nullopt;
  return t;
}

/// Ancestors of a class type in breadth-first order, the type itself first.
std::vector<Type> ancestors(const Type& start, const ClassTable& table) {
  std::vector<Type> out;
  std::set<std::string> seen;
  std::deque<Type> queue{start};
  while (!queue.empty()) {
    Type t = std::move(queue.front());
    queue.pop_front();
    if (!seen.insert(t.name).second) continue;
    for (auto& s : table.direct_supertypes(t)) queue.push_back(std::move(s));
    out.push_back(std::move(t));
  }
  return out;
}

/// Parameter types of `m` as seen from `inst` (an instantiation of its
/// declaring class), with method type variables renamed to `rename_to`.
std::vector<Type> params_as_seen(const MethodSig& m, const ClassSig& decl, const Type& inst,
                                 const std::vector<int>& rename_to, const ClassTable& table) {
  auto subst = class_subst(decl, inst);
  for (std::size_t i = 0; i < m.type_params.size() && i < rename_to.size(); ++i)
    subst[m.type_params[i]] = Type::type_var(table.type_param(rename_to[i]).name, rename_to[i]);
  return substitute_all(m.params, subst);
}

/// Whether `m` (declared in some class) has the same signature as `target`
/// when both are viewed from `viewpoint`.
bool same_signature_from(const Type& viewpoint, const MethodSig& m, const MethodSig& target,
                         const ClassTable& table) {
  if (m.name != target.name || m.is_static || target.is_static) return false;
  if (m.params.size() != target.params.size() || m.type_params.size() != target.type_params.size())
    return false;
  auto m_inst = table.as_super(viewpoint, m.declaring_class);
  auto t_inst = table.as_super(viewpoint, target.declaring_class);
  if (!m_inst || !t_inst) return false;
  const ClassSig* m_cls = table.find(m.declaring_class);
  const ClassSig* t_cls = table.find(target.declaring_class);
  return params_as_seen(m, *m_cls, *m_inst, m.type_params, table) ==
         params_as_seen(target, *t_cls, *t_inst, m.type_params, table);
}

// ---- unification for generic method calls ---------------------------------

struct Inference {
  const ClassTable& table;
  std::set<int> vars;
  std::map<int, Type> inst;

  bool is_var(const Type& t) const { return t.is_type_var() && vars.count(t.var_id); }

  bool unify(const Type& param, const Type& arg) {
    if (arg.is_error() || arg.is_null()) return true;
    if (is_var(param)) {
      Type a = arg;
      if (arg.is_primitive()) {
        auto boxed = box_name(arg.prim);
        if (!boxed) return false;
        a = Type::named(std::string(*boxed));
      }
      if (a.is_void()) return false;
      auto it = inst.find(param.var_id);
      if (it == inst.end()) {
        inst.emplace(param.var_id, std::move(a));
        return true;
      }
      if (it->second == a || is_subtype(a, it->second, table)) return true;
      if (is_subtype(it->second, a, table)) {
        it->second = std::move(a);
        return true;
      }
      return false;
    }
    if (param.is_named() && !param.args.empty()) {
      auto sup = table.as_super(arg, param.name);
      if (!sup || sup->args.size() != param.args.size()) return true;
      for (std::size_t i = 0; i < param.args.size(); ++i)
        if (!unify_exact(param.args[i], sup->args[i])) return false;
      return true;
    }
    if (param.is_array() && arg.is_array()) return unify_exact(param.element(), arg.element());
    return true;
  }

  bool unify_exact(const Type& param, const Type& arg) {
    if (is_var(param)) {
      auto it = inst.find(param.var_id);
      if (it == inst.end()) {
        inst.emplace(param.var_id, arg);
        return true;
      }
      return it->second == arg;
    }
    if ((param.is_named() || param.is_array()) && param.kind == arg.kind && param.name == arg.name &&
        param.args.size() == arg.args.size()) {
      for (std::size_t i = 0; i < param.args.size(); ++i)
        if (!unify_exact(param.args[i], arg.args[i])) return false;
    }
    return true;
  }
};

bool more_specific_param(const Type& a, const Type& b, const ClassTable& table) {
  if (a == b) return true;
  if (a.is_primitive() && b.is_primitive()) return widens(a.prim, b.prim);
  if (a.is_reference() && b.is_reference()) return is_subtype(a, b, table);
  return false;
}

bool more_specific(const ResolvedMethod& a, const ResolvedMethod& b, const ClassTable& table) {
  if (a.params.size() != b.params.size()) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i)
    if (!more_specific_param(a.params[i], b.params[i], table)) return false;
  return true;
}

void sort_candidates(std::vector<ResolvedMethod>& v) {
  std::sort(v.begin(), v.end(), [](const ResolvedMethod& a, const ResolvedMethod& b) {
    return std::make_tuple(a.sig->declaring_class, a.sig->signature(), a.sig->is_static) <
           std::make_tuple(b.sig->declaring_class, b.sig->signature(), b.sig->is_static);
  });
}

}  // namespace

// ---- ClassTable queries -----------------------------------------------------

const ClassSig* ClassTable::find(std::string_view name) const {
  auto it = classes_.find(name);
  return it == classes_.end() ? nullptr : it->second.get();
}

std::vector<const ClassSig*> ClassTable::classes() const {
  std::vector<const ClassSig*> out;
  for (const auto& [_, c] : classes_) out.push_back(c.get());
  return out;
}

std::vector<Type> ClassTable::direct_supertypes(const Type& named) const {
  std::vector<Type> out;
  if (!named.is_named()) return out;
  const ClassSig* c = find(named.name);
  if (!c) return out;
  auto subst = class_subst(*c, named);
  if (c->superclass) out.push_back(substitute(*c->superclass, subst));
  for (const auto& i : c->interfaces) out.push_back(substitute(i, subst));
  if (c->kind == ClassKind::Interface && c->interfaces.empty() && find("Object"))
    out.push_back(object_type());
  return out;
}

std::optional<Type> ClassTable::as_super(const Type& t, std::string_view cls) const {
  if (t.is_type_var()) return as_super(type_param(t.var_id).bound, cls);
  if (t.is_array()) {
    if (cls == "Object") return object_type();
    return std::nullopt;
  }
  if (!t.is_named()) return std::nullopt;
  for (const auto& a : ancestors(t, *this))
    if (a.name == cls) return a;
  return std::nullopt;
}

std::optional<Type> ClassTable::field_type(const Type& receiver, std::string_view name) const {
  auto root = lookup_root(receiver, *this);
  if (!root) return std::nullopt;
  std::optional<Type> t = root;
  while (t) {
    const ClassSig* c = find(t->name);
    if (!c) break;
    for (const auto& f : c->fields)
      if (f.name == name) return substitute(f.type, class_subst(*c, *t));
    if (!c->superclass) break;
    t = substitute(*c->superclass, class_subst(*c, *t));
  }
  return std::nullopt;
}

std::vector<FieldSig> ClassTable::all_fields(std::string_view cls) const {
  std::vector<const ClassSig*> chain;
  for (const ClassSig* c = find(cls); c; c = c->superclass ? find(c->superclass->name) : nullptr) {
    chain.push_back(c);
    if (chain.size() > classes_.size()) break;
  }
  std::vector<FieldSig> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    out.insert(out.end(), (*it)->fields.begin(), (*it)->fields.end());
  return out;
}

bool ClassTable::convertible(const Type& from, const Type& to, Applicability mode) const {
  if (from.is_error() || to.is_error()) return true;
  if (from.is_void() || to.is_void()) return false;
  if (from == to) return true;
  if (from.is_primitive() && to.is_primitive()) return widens(from.prim, to.prim);
  if (from.is_primitive()) {
    if (mode == Applicability::Strict) return false;
    auto boxed = box_name(from.prim);
    return boxed && is_subtype(Type::named(std::string(*boxed)), to, *this);
  }
  if (to.is_primitive()) {
    if (mode == Applicability::Strict) return false;
    auto p = unboxed(from);
    return p && widens(*p, to.prim);
  }
  return is_subtype(from, to, *this);
}

bool ClassTable::overrides(const MethodSig* method, const MethodSig* target) const {
  if (!method || !target || method == target) return false;
  const ClassSig* c = find(method->declaring_class);
  if (!c || method->declaring_class == target->declaring_class) return false;
  return same_signature_from(c->this_type(*this), *method, *target, *this);
}

const MethodSig* ClassTable::dispatch(std::string_view runtime_class, const MethodSig* target) const {
  if (!target || target->is_static || target->is_constructor()) return target;
  const ClassSig* c = find(runtime_class);
  if (!c) return target;
  Type view = c->this_type(*this);
  // Superclass chain only: interfaces carry no implementations.
  for (std::size_t guard = 0; c && guard <= classes_.size(); ++guard) {
    for (const auto& m : c->methods)
      if (m.get() == target || (!m->is_abstract && same_signature_from(view, *m, *target, *this)))
        return m.get();
    c = c->superclass ? find(c->superclass->name) : nullptr;
  }
  return target;
}

Type ClassTable::resolve(const TypeRef& ref, const TypeScope& scope, std::vector<Diagnostic>& diags,
                         bool allow_void) const {
  auto finish = [&](Type t) { return ref.is_array && !t.is_error() ? Type::array(std::move(t)) : t; };
  if (ref.name == "void") {
    if (allow_void && !ref.is_array) return Type::void_type();
    diags.push_back(make_error("E025", ref.span, "'void' is not allowed here"));
    return Type::error();
  }
  if (auto p = primitive_from_name(ref.name)) {
    if (!ref.args.empty()) {
      diags.push_back(make_error("E024", ref.span, "primitive type '" + ref.name + "' cannot have type arguments"));
      return Type::error();
    }
    return finish(Type::primitive(*p));
  }
  for (const auto& [name, id] : scope) {
    if (name == ref.name) {
      if (!ref.args.empty()) {
        diags.push_back(make_error("E024", ref.span, "type variable '" + name + "' cannot have type arguments"));
        return Type::error();
      }
      return finish(Type::type_var(name, id));
    }
  }
  const ClassSig* c = find(ref.name);
  if (!c) {
    diags.push_back(make_error("E025", ref.span, "unknown type '" + ref.name + "'"));
    return Type::error();
  }
  if (ref.args.size() != c->type_params.size()) {
    diags.push_back(make_error("E024", ref.span,
                               "wrong number of type arguments for '" + ref.name + "': expected " +
                                   std::to_string(c->type_params.size()) + ", found " +
                                   std::to_string(ref.args.size())));
    return Type::error();
  }
  std::vector<Type> args;
  for (const auto& a : ref.args) {
    Type t = resolve(a, scope, diags);
    if (t.is_error()) return Type::error();
    if (t.is_primitive()) {
      diags.push_back(make_error("E025", a.span, "primitive type '" + t.str() + "' cannot be a type argument"));
      return Type::error();
    }
    args.push_back(std::move(t));
  }
  return finish(Type::named(ref.name, std::move(args)));
}

// ---- construction -------------------------------------------------------------

class ClassTableBuilder {
 public:
  ClassTableBuilder(ClassTable& table, std::vector<Diagnostic>& diags) : t_(table), diags_(diags) {}

  void run(std::span<const Unit> units, std::span<const Unit> stubs) {
    for (const auto& u : stubs) declare(u, true);
    for (const auto& u : units) declare(u, false);
    for (auto& [cls, decl] : decls_) supertypes(*cls, *decl);
    break_cycles();
    for (auto& [cls, decl] : decls_) members(*cls, *decl);
    for (auto& [cls, decl] : decls_) check_implements(*cls);
  }

 private:
  void declare(const Unit& unit, bool is_stub) {
    for (const auto& decl : unit.classes) {
      if (t_.find(decl.name)) {
        diags_.push_back(make_error("E020", decl.span, "duplicate class '" + decl.name + "'"));
        continue;
      }
      auto cls = std::make_unique<ClassSig>();
      cls->name = decl.name;
      cls->kind = decl.kind;
      cls->is_stub = is_stub;
      cls->span = decl.span;
      for (const auto& tp : decl.type_params) cls->type_params.push_back(new_type_param(tp.name));
      decls_.emplace_back(cls.get(), &decl);
      t_.classes_.emplace(decl.name, std::move(cls));
    }
  }

  int new_type_param(const std::string& name) {
    t_.type_params_.push_back(TypeParamInfo{name, Type::named("Object")});
    return static_cast<int>(t_.type_params_.size()) - 1;
  }

  TypeScope class_scope(const ClassSig& cls) const {
    TypeScope scope;
    for (int id : cls.type_params) scope.emplace_back(t_.type_param(id).name, id);
    return scope;
  }

  void resolve_bounds(const std::vector<TypeParamDecl>& decls, const std::vector<int>& ids,
                      const TypeScope& scope) {
    for (std::size_t i = 0; i < decls.size(); ++i) {
      if (!decls[i].bound) continue;
      Type b = t_.resolve(*decls[i].bound, scope, diags_);
      if (!b.is_error() && !b.is_named() && !b.is_type_var()) {
        diags_.push_back(make_error("E025", decls[i].bound->span, "invalid type-parameter bound '" + b.str() + "'"));
        continue;
      }
      if (!b.is_error()) t_.type_params_[ids[i]].bound = std::move(b);
    }
  }

  std::optional<Type> supertype(const TypeRef& ref, const TypeScope& scope, ClassKind expected,
                                const ClassSig& owner) {
    const ClassSig* target = t_.find(ref.name);
    if (!target) {
      diags_.push_back(make_error("E021", ref.span, "unknown supertype '" + ref.name + "' of '" + owner.name + "'"));
      return std::nullopt;
    }
    if (target->kind != expected) {
      std::string what = expected == ClassKind::Class ? "a class" : "an interface";
      diags_.push_back(make_error("E021", ref.span, "supertype '" + ref.name + "' of '" + owner.name + "' is not " + what));
      return std::nullopt;
    }
    Type t = t_.resolve(ref, scope, diags_);
    if (t.is_error()) return std::nullopt;
    return t;
  }

  void supertypes(ClassSig& cls, const ClassDecl& decl) {
    TypeScope scope = class_scope(cls);
    resolve_bounds(decl.type_params, cls.type_params, scope);
    if (decl.superclass) {
      cls.superclass = supertype(*decl.superclass, scope, ClassKind::Class, cls);
    } else if (cls.kind == ClassKind::Class && cls.name != "Object" && t_.find("Object")) {
      cls.superclass = Type::named("Object");
    }
    for (const auto& i : decl.interfaces)
      if (auto t = supertype(i, scope, ClassKind::Interface, cls)) cls.interfaces.push_back(std::move(*t));
  }

  void break_cycles() {
    // 0 = unvisited, 1 = on stack, 2 = done
    std::map<std::string, int> state;
    std::function<bool(ClassSig&)> visit = [&](ClassSig& c) -> bool {
      state[c.name] = 1;
      std::vector<std::string> supers;
      if (c.superclass) supers.push_back(c.superclass->name);
      for (const auto& i : c.interfaces) supers.push_back(i.name);
      for (const auto& s : supers) {
        auto it = t_.classes_.find(s);
        if (it == t_.classes_.end()) continue;
        int st = state[s];
        if (st == 1) return false;
        if (st == 0 && !visit(*it->second)) {
          state[c.name] = 2;
          return false;
        }
      }
      state[c.name] = 2;
      return true;
    };
    for (auto& [cls, decl] : decls_) {
      if (state[cls->name] != 0) continue;
      if (!visit(*cls)) {
        // Report once per cycle member and detach supertypes so later queries terminate.
        for (auto& [c2, d2] : decls_) {
          if (in_cycle(*c2)) {
            diags_.push_back(make_error("E022", d2->span, "cyclic inheritance involving '" + c2->name + "'"));
            c2->superclass.reset();
            c2->interfaces.clear();
          }
        }
      }
    }
  }

  bool in_cycle(const ClassSig& start) const {
    std::set<std::string> seen;
    std::function<bool(const ClassSig&)> reaches = [&](const ClassSig& c) -> bool {
      std::vector<std::string> supers;
      if (c.superclass) supers.push_back(c.superclass->name);
      for (const auto& i : c.interfaces) supers.push_back(i.name);
      for (const auto& s : supers) {
        if (s == start.name) return true;
        if (!seen.insert(s).second) continue;
        if (const ClassSig* n = t_.find(s); n && reaches(*n)) return true;
      }
      return false;
    };
    return reaches(start);
  }

  std::string erased(const Type& t) const {
    if (t.is_type_var()) return erased(t_.type_param(t.var_id).bound);
    if (t.is_array()) return erased(t.element()) + "[]";
    if (t.is_named()) return t.name;
    return t.str();
  }

  std::string erased_key(const MethodSig& m) const {
    std::string key = m.name + "(";
    for (const auto& p : m.params) key += erased(p) + ",";
    return key + ")";
  }

  void members(ClassSig& cls, const ClassDecl& decl) {
    const TypeScope cscope = class_scope(cls);
    std::set<std::string> method_keys;
    std::set<std::string> field_names;
    for (std::size_t i = 0; i < decl.members.size(); ++i) {
      const MemberDecl& m = decl.members[i];
      if (m.kind == MemberKind::Field) {
        Type ft = t_.resolve(m.type, cscope, diags_);
        for (const auto& n : m.names) {
          if (!field_names.insert(n).second) {
            diags_.push_back(make_error("E023", m.span, "duplicate field '" + n + "' in '" + cls.name + "'"));
            continue;
          }
          cls.fields.push_back(FieldSig{n, ft});
        }
        continue;
      }

      auto sig = std::make_unique<MethodSig>();
      sig->name = m.kind == MemberKind::Constructor ? "<init>" : m.name;
      sig->is_static = m.mods.is_static;
      sig->is_native = m.mods.is_native;
      sig->is_abstract = cls.kind == ClassKind::Interface;
      sig->declaring_class = cls.name;
      sig->member_index = static_cast<int>(i);
      sig->span = m.span;

      TypeScope scope;
      for (const auto& tp : m.type_params) {
        int id = new_type_param(tp.name);
        sig->type_params.push_back(id);
        scope.emplace_back(tp.name, id);
      }
      // Static methods do not see the class's type parameters.
      if (!sig->is_static) scope.insert(scope.end(), cscope.begin(), cscope.end());
      resolve_bounds(m.type_params, sig->type_params, scope);

      for (const auto& p : m.params) {
        sig->params.push_back(t_.resolve(p.type, scope, diags_));
        sig->param_names.push_back(p.name);
      }
      sig->ret = m.kind == MemberKind::Constructor ? Type::void_type()
                                                   : t_.resolve(m.type, scope, diags_, true);
      if (!method_keys.insert(erased_key(*sig)).second) {
        std::string what = sig->is_constructor() ? "constructor" : "method";
        diags_.push_back(make_error("E023", m.span, "duplicate " + what + " '" + sig->signature() + "' in '" + cls.name + "'"));
        continue;
      }
      (m.kind == MemberKind::Constructor ? cls.constructors : cls.methods).push_back(std::move(sig));
    }
    if (cls.kind == ClassKind::Class && !cls.is_stub && cls.constructors.empty()) {
      auto ctor = std::make_unique<MethodSig>();
      ctor->name = "<init>";
      ctor->ret = Type::void_type();
      ctor->declaring_class = cls.name;
      ctor->span = cls.span;
      cls.constructors.push_back(std::move(ctor));
    }
  }

  void check_implements(const ClassSig& cls) {
    if (cls.kind != ClassKind::Class || cls.is_stub) return;
    Type view = cls.this_type(t_);
    for (const auto& anc : ancestors(view, t_)) {
      const ClassSig* iface = t_.find(anc.name);
      if (!iface || iface->kind != ClassKind::Interface) continue;
      for (const auto& target : iface->methods) {
        if (target->is_static) continue;
        const MethodSig* impl = t_.dispatch(cls.name, target.get());
        if (impl == target.get()) {
          diags_.push_back(make_error("E027", cls.span,
                                      "class '" + cls.name + "' does not implement '" +
                                          target->signature() + "' of '" + anc.str() + "'"));
        }
      }
    }
  }

  ClassTable& t_;
  std::vector<Diagnostic>& diags_;
  std::vector<std::pair<ClassSig*, const ClassDecl*>> decls_;
};

Result<ClassTable> build_class_table(std::span<const Unit> units, std::span<const Unit> stubs) {
  ClassTable table;
  std::vector<Diagnostic> diags;
  ClassTableBuilder(table, diags).run(units, stubs);
  if (has_errors(diags)) return Result<ClassTable>::failure(std::move(diags));
  return Result<ClassTable>::success(std::move(table), std::move(diags));
}

// ---- subtyping and lookup ---------------------------------------------------

bool is_subtype(const Type& sub, const Type& super, const ClassTable& table) {
  if (sub == super) return true;
  if (sub.is_null()) return super.is_reference();
  if (!sub.is_reference() || !super.is_reference()) return false;
  switch (super.kind) {
    case Type::Kind::Named: {
      if (super.name == "Object" && super.args.empty()) return true;
      auto inst = table.as_super(sub, super.name);
      return inst && *inst == super;
    }
    case Type::Kind::TypeVar:
      return false;
    case Type::Kind::Array:
      return sub.is_array() && sub.element() == super.element();
    default:
      return false;
  }
}

std::vector<ResolvedMethod> lookup_applicable(const Type& receiver, std::string_view name,
                                              std::span<const Type> args, const ClassTable& table,
                                              bool want_static, Applicability mode) {
  std::vector<ResolvedMethod> out;
  auto root = lookup_root(receiver, table);
  if (!root) return out;
  std::vector<std::vector<Type>> hidden;
  for (const auto& owner : ancestors(*root, table)) {
    const ClassSig* cls = table.find(owner.name);
    if (!cls) continue;
    auto subst = class_subst(*cls, owner);
    for (const auto& m : cls->methods) {
      if (m->name != name || m->is_static != want_static) continue;
      auto params = substitute_all(m->params, subst);
      if (std::find(hidden.begin(), hidden.end(), params) != hidden.end()) continue;
      hidden.push_back(params);
      if (params.size() != args.size()) continue;
      Type ret = substitute(m->ret, subst);
      if (!m->type_params.empty()) {
        Inference inf{table, std::set<int>(m->type_params.begin(), m->type_params.end()), {}};
        bool ok = true;
        for (std::size_t i = 0; ok && i < params.size(); ++i) ok = inf.unify(params[i], args[i]);
        for (int id : m->type_params) ok = ok && inf.inst.count(id);
        if (!ok) continue;
        for (int id : m->type_params) {
          Type bound = substitute(substitute(table.type_param(id).bound, subst), inf.inst);
          ok = ok && is_subtype(inf.inst.at(id), bound, table);
        }
        if (!ok) continue;
        params = substitute_all(params, inf.inst);
        ret = substitute(ret, inf.inst);
      }
      bool applicable = true;
      for (std::size_t i = 0; applicable && i < params.size(); ++i)
        applicable = table.convertible(args[i], params[i], mode);
      if (applicable) out.push_back(ResolvedMethod{m.get(), std::move(params), std::move(ret), owner});
    }
  }
  sort_candidates(out);
  return out;
}

std::vector<ResolvedMethod> lookup_constructors(const Type& class_type, std::span<const Type> args,
                                                const ClassTable& table, Applicability mode) {
  std::vector<ResolvedMethod> out;
  if (!class_type.is_named()) return out;
  const ClassSig* cls = table.find(class_type.name);
  if (!cls) return out;
  auto subst = class_subst(*cls, class_type);
  for (const auto& c : cls->constructors) {
    if (c->params.size() != args.size()) continue;
    auto params = substitute_all(c->params, subst);
    bool applicable = true;
    for (std::size_t i = 0; applicable && i < params.size(); ++i)
      applicable = table.convertible(args[i], params[i], mode);
    if (applicable) out.push_back(ResolvedMethod{c.get(), std::move(params), class_type, class_type});
  }
  sort_candidates(out);
  return out;
}

std::optional<ResolvedMethod> most_specific(std::span<const ResolvedMethod> candidates,
                                            const ClassTable& table) {
  std::optional<ResolvedMethod> best;
  int winners = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominates = true;
    for (std::size_t j = 0; dominates && j < candidates.size(); ++j)
      if (i != j) dominates = more_specific(candidates[i], candidates[j], table);
    if (dominates) {
      ++winners;
      best = candidates[i];
    }
  }
  if (winners != 1) return std::nullopt;
  return best;
}

namespace {

MethodResolution pick(std::vector<ResolvedMethod> strict, std::vector<ResolvedMethod> loose,
                      const ClassTable& table) {
  MethodResolution r;
  r.candidates = strict.empty() ? std::move(loose) : std::move(strict);
  if (r.candidates.empty()) return r;
  r.method = most_specific(r.candidates, table);
  r.status = r.method ? MethodResolution::Status::Found : MethodResolution::Status::Ambiguous;
  return r;
}

}  // namespace

MethodResolution resolve_method(const Type& receiver, std::string_view name,
                                std::span<const Type> args, const ClassTable& table,
                                bool want_static) {
  auto strict = lookup_applicable(receiver, name, args, table, want_static, Applicability::Strict);
  std::vector<ResolvedMethod> loose;
  if (strict.empty())
    loose = lookup_applicable(receiver, name, args, table, want_static, Applicability::Loose);
  return pick(std::move(strict), std::move(loose), table);
}

MethodResolution resolve_constructor(const Type& class_type, std::span<const Type> args,
                                     const ClassTable& table) {
  auto strict = lookup_constructors(class_type, args, table, Applicability::Strict);
  std::vector<ResolvedMethod> loose;
  if (strict.empty()) loose = lookup_constructors(class_type, args, table, Applicability::Loose);
  return pick(std::move(strict), std::move(loose), table);
}

}  // namespace oodc
