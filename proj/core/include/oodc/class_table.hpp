#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oodc/ast.hpp"
#include "oodc/diagnostic.hpp"
#include "oodc/types.hpp"

namespace oodc {

class ClassTable;

struct TypeParamInfo {
  std::string name;
  Type bound;  // Object when no bound was written
};

struct FieldSig {
  std::string name;
  Type type;
};

struct MethodSig {
  std::string name;  // "<init>" for constructors
  std::vector<int> type_params;
  std::vector<Type> params;
  std::vector<std::string> param_names;
  Type ret;
  bool is_static = false;
  bool is_native = false;
  bool is_abstract = false;  // interface methods
  std::string declaring_class;
  int member_index = -1;  // index into ClassDecl::members; -1 if implicit
  Span span;

  [[nodiscard]] bool is_constructor() const { return name == "<init>"; }
  /// `Class.name`, the key native bindings are registered under.
  [[nodiscard]] std::string qualified_name() const;
  /// `name(T1, T2)` with declared parameter types.
  [[nodiscard]] std::string signature() const;
};

struct ClassSig {
  std::string name;
  ClassKind kind = ClassKind::Class;
  std::vector<int> type_params;
  std::optional<Type> superclass;
  std::vector<Type> interfaces;
  std::vector<FieldSig> fields;
  std::vector<std::unique_ptr<MethodSig>> methods;
  std::vector<std::unique_ptr<MethodSig>> constructors;
  bool is_stub = false;
  Span span;

  /// The class instantiated with its own type variables.
  [[nodiscard]] Type this_type(const ClassTable& table) const;
};

/// A method as seen through a particular receiver: class type arguments and
/// inferred method type arguments already substituted.
struct ResolvedMethod {
  const MethodSig* sig = nullptr;
  std::vector<Type> params;
  Type ret;
  Type owner;  // instantiated declaring type
};

/// Strict: identity, primitive widening and subtyping only.
/// Loose: additionally boxing and unboxing at each parameter.
enum class Applicability { Strict, Loose };

using TypeScope = std::vector<std::pair<std::string, int>>;  // name -> var_id

class ClassTable {
 public:
  ClassTable() = default;
  ClassTable(ClassTable&&) noexcept = default;
  ClassTable& operator=(ClassTable&&) noexcept = default;
  ClassTable(const ClassTable&) = delete;
  ClassTable& operator=(const ClassTable&) = delete;

  [[nodiscard]] const ClassSig* find(std::string_view name) const;
  [[nodiscard]] std::vector<const ClassSig*> classes() const;
  [[nodiscard]] const TypeParamInfo& type_param(int id) const { return type_params_.at(id); }
  [[nodiscard]] Type object_type() const { return Type::named("Object"); }

  /// Declared supertypes of an instantiated class type (Object is implicit).
  [[nodiscard]] std::vector<Type> direct_supertypes(const Type& named) const;
  /// The instantiation of `cls` that `t` inherits from, if any.
  [[nodiscard]] std::optional<Type> as_super(const Type& t, std::string_view cls) const;
  /// Field lookup through the class hierarchy with substitution.
  [[nodiscard]] std::optional<Type> field_type(const Type& receiver, std::string_view name) const;
  /// All fields of a class including inherited ones, superclass fields first.
  [[nodiscard]] std::vector<FieldSig> all_fields(std::string_view cls) const;

  /// Method-invocation conversion from an argument type to a parameter type.
  [[nodiscard]] bool convertible(const Type& from, const Type& to, Applicability mode) const;
  /// Assignment compatibility; identical to loose invocation conversion.
  [[nodiscard]] bool assignable(const Type& from, const Type& to) const {
    return convertible(from, to, Applicability::Loose);
  }

  /// True if `method` has the signature of `target` as seen from its declaring class.
  [[nodiscard]] bool overrides(const MethodSig* method, const MethodSig* target) const;
  /// The implementation of `target` selected for an object of `runtime_class`.
  [[nodiscard]] const MethodSig* dispatch(std::string_view runtime_class,
                                          const MethodSig* target) const;

  /// Resolves a written type in a scope of type variables. Reports E024
  /// (wrong type-argument count) and E025 (unknown type).
  Type resolve(const TypeRef& ref, const TypeScope& scope, std::vector<Diagnostic>& diags,
               bool allow_void = false) const;

 private:
  friend Result<ClassTable> build_class_table(std::span<const Unit>, std::span<const Unit>);
  friend class ClassTableBuilder;

  std::map<std::string, std::unique_ptr<ClassSig>, std::less<>> classes_;
  std::vector<TypeParamInfo> type_params_;
};

/// Builds the global class table from stub declarations and user units.
///
/// Errors: E020 duplicate class, E021 unknown or invalid supertype,
/// E022 inheritance cycle, E023 duplicate method, E024 wrong number of type
/// arguments, E025 unknown type, E027 interface method not implemented.
Result<ClassTable> build_class_table(std::span<const Unit> units, std::span<const Unit> stubs);

Type substitute(const Type& t, const std::map<int, Type>& subst);

bool is_subtype(const Type& sub, const Type& super, const ClassTable& table);

/// All methods named `name` reachable from `receiver` (through the bound for
/// type variables) that accept `args`. Generic methods are instantiated by
/// unification. Sorted by declaring class and signature.
std::vector<ResolvedMethod> lookup_applicable(const Type& receiver, std::string_view name,
                                              std::span<const Type> args,
                                              const ClassTable& table, bool want_static,
                                              Applicability mode = Applicability::Loose);

std::vector<ResolvedMethod> lookup_constructors(const Type& class_type, std::span<const Type> args,
                                                const ClassTable& table,
                                                Applicability mode = Applicability::Loose);

/// The candidate whose parameters are pointwise subtypes of every other
/// candidate's; nullopt means ambiguous.
std::optional<ResolvedMethod> most_specific(std::span<const ResolvedMethod> candidates,
                                            const ClassTable& table);

/// Outcome of the usual two-phase resolution: strict applicability first,
/// then loose, then most-specific selection.
struct MethodResolution {
  enum class Status { Found, NotFound, Ambiguous } status = Status::NotFound;
  std::optional<ResolvedMethod> method;
  std::vector<ResolvedMethod> candidates;
};

MethodResolution resolve_method(const Type& receiver, std::string_view name,
                                std::span<const Type> args, const ClassTable& table,
                                bool want_static);
MethodResolution resolve_constructor(const Type& class_type, std::span<const Type> args,
                                     const ClassTable& table);

}  // namespace oodc
