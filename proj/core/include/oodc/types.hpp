#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oodc {

enum class Primitive { Int, Long, Double, Boolean, Char };

std::string_view primitive_name(Primitive p);
std::optional<Primitive> primitive_from_name(std::string_view name);

/// Semantic type. Type variables are identified by `var_id`, an index into the
/// class table's type-parameter registry where their bounds live.
struct Type {
  enum class Kind { Error, Void, Null, Primitive, Named, TypeVar, Array };

  Kind kind = Kind::Error;
  Primitive prim = Primitive::Int;
  std::string name;        // class name, or type variable name
  std::vector<Type> args;  // type arguments; element type for arrays
  int var_id = -1;

  static Type error() { return Type{}; }
  static Type void_type() { return of(Kind::Void); }
  static Type null_type() { return of(Kind::Null); }
  static Type of(Kind k) {
    Type t;
    t.kind = k;
    return t;
  }
  static Type primitive(Primitive p);
  static Type named(std::string name, std::vector<Type> args = {});
  static Type type_var(std::string name, int id);
  static Type array(Type element);

  [[nodiscard]] bool is_error() const { return kind == Kind::Error; }
  [[nodiscard]] bool is_void() const { return kind == Kind::Void; }
  [[nodiscard]] bool is_null() const { return kind == Kind::Null; }
  [[nodiscard]] bool is_primitive() const { return kind == Kind::Primitive; }
  [[nodiscard]] bool is_primitive(Primitive p) const { return kind == Kind::Primitive && prim == p; }
  [[nodiscard]] bool is_named() const { return kind == Kind::Named; }
  [[nodiscard]] bool is_named(std::string_view n) const { return kind == Kind::Named && name == n; }
  [[nodiscard]] bool is_type_var() const { return kind == Kind::TypeVar; }
  [[nodiscard]] bool is_array() const { return kind == Kind::Array; }
  /// Named, TypeVar, Array or Null.
  [[nodiscard]] bool is_reference() const;
  [[nodiscard]] const Type& element() const { return args.front(); }

  /// Source-like rendering: `int`, `List<Integer>`, `Map<String, Point>`, `int[]`.
  [[nodiscard]] std::string str() const;
};

bool operator==(const Type& a, const Type& b);

/// Fixed boxing table: int/Integer, long/Long, double/Double, boolean/Boolean.
std::optional<std::string_view> box_name(Primitive p);
std::optional<Primitive> unboxed(const Type& t);

/// The primitive a type denotes after unboxing, if any.
std::optional<Primitive> as_primitive(const Type& t);

bool is_numeric(Primitive p);
bool is_integral(Primitive p);

/// Primitive widening: char -> int -> long -> double.
bool widens(Primitive from, Primitive to);

/// Binary numeric promotion of two numeric primitives.
Primitive promote(Primitive a, Primitive b);

}  // namespace oodc
