#include "oodc/types.hpp"

#include <algorithm>

namespace oodc {

std::string_view primitive_name(Primitive p) {
  switch (p) {
    case Primitive::Int: return "int";
    case Primitive::Long: return "long";
    case Primitive::Double: return "double";
    case Primitive::Boolean: return "boolean";
    case Primitive::Char: return "char";
  }
  return "int";
}

std::optional<Primitive> primitive_from_name(std::string_view name) {
  if (name == "int") return Primitive::Int;
  if (name == "long") return Primitive::Long;
  if (name == "double") return Primitive::Double;
  if (name == "boolean") return Primitive::Boolean;
  if (name == "char") return Primitive::Char;
  return std::nullopt;
}

Type Type::primitive(Primitive p) {
  Type t = of(Kind::Primitive);
  t.prim = p;
  return t;
}

Type Type::named(std::string name, std::vector<Type> args) {
  Type t = of(Kind::Named);
  t.name = std::move(name);
  t.args = std::move(args);
  return t;
}

Type Type::type_var(std::string name, int id) {
  Type t = of(Kind::TypeVar);
  t.name = std::move(name);
  t.var_id = id;
  return t;
}

Type Type::array(Type element) {
  Type t = of(Kind::Array);
  t.args.push_back(std::move(element));
  return t;
}

bool Type::is_reference() const {
  return kind == Kind::Named || kind == Kind::TypeVar || kind == Kind::Array || kind == Kind::Null;
}

std::string Type::str() const {
  switch (kind) {
    case Kind::Error: return "<error>";
    case Kind::Void: return "void";
    case Kind::Null: return "null";
    case Kind::Primitive: return std::string(primitive_name(prim));
    case Kind::TypeVar: return name;
    case Kind::Array: return element().str() + "[]";
    case Kind::Named: {
      std::string out = name;
      if (!args.empty()) {
        out += '<';
        for (std::size_t i = 0; i < args.size(); ++i) {
          if (i) out += ", ";
          out += args[i].str();
        }
        out += '>';
      }
      return out;
    }
  }
  return "<error>";
}

bool operator==(const Type& a, const Type& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Type::Kind::Primitive: return a.prim == b.prim;
    case Type::Kind::TypeVar: return a.var_id == b.var_id;
    case Type::Kind::Named:
    case Type::Kind::Array: return a.name == b.name && a.args == b.args;
    default: return true;
  }
}

std::optional<std::string_view> box_name(Primitive p) {
  switch (p) {
    case Primitive::Int: return "Integer";
    case Primitive::Long: return "Long";
    case Primitive::Double: return "Double";
    case Primitive::Boolean: return "Boolean";
    case Primitive::Char: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Primitive> unboxed(const Type& t) {
  if (!t.is_named() || !t.args.empty()) return std::nullopt;
  if (t.name == "Integer") return Primitive::Int;
  if (t.name == "Long") return Primitive::Long;
  if (t.name == "Double") return Primitive::Double;
  if (t.name == "Boolean") return Primitive::Boolean;
  return std::nullopt;
}

std::optional<Primitive> as_primitive(const Type& t) {
  if (t.is_primitive()) return t.prim;
  return unboxed(t);
}

bool is_numeric(Primitive p) { return p != Primitive::Boolean; }

bool is_integral(Primitive p) {
  return p == Primitive::Int || p == Primitive::Long || p == Primitive::Char;
}

namespace {
int numeric_rank(Primitive p) {
  switch (p) {
    case Primitive::Char: return 0;
    case Primitive::Int: return 1;
    case Primitive::Long: return 2;
    case Primitive::Double: return 3;
    case Primitive::Boolean: return -1;
  }
  return -1;
}
}  // namespace

bool widens(Primitive from, Primitive to) {
  if (from == to) return true;
  if (!is_numeric(from) || !is_numeric(to)) return false;
  if (to == Primitive::Char) return false;
  return numeric_rank(from) < numeric_rank(to);
}

Primitive promote(Primitive a, Primitive b) {
  int r = std::max({numeric_rank(a), numeric_rank(b), numeric_rank(Primitive::Int)});
  if (r == 3) return Primitive::Double;
  if (r == 2) return Primitive::Long;
  return Primitive::Int;
}

}  // namespace oodc
