#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace oodc {

using BigInt = boost::multiprecision::cpp_int;

struct Object;
struct ListObject;
struct MapObject;
struct ArrayObject;

struct Null {
  friend bool operator==(Null, Null) { return true; }
};

/// Runtime value. Boxed wrappers share the representation of their primitive;
/// strings and big integers are immutable values.
using Value = std::variant<Null, std::int32_t, std::int64_t, double, bool, std::string, BigInt,
                           std::shared_ptr<Object>, std::shared_ptr<ListObject>,
                           std::shared_ptr<MapObject>, std::shared_ptr<ArrayObject>>;

struct Object {
  std::string class_name;
  std::vector<std::pair<std::string, Value>> fields;
  std::int64_t serial = 0;

  Value* field(const std::string& name);
};

struct ListObject {
  std::vector<Value> items;
};

struct MapObject {
  std::vector<std::pair<Value, Value>> entries;
};

struct ArrayObject {
  std::vector<Value> items;
};

inline bool is_null(const Value& v) { return std::holds_alternative<Null>(v); }

/// Value equality: numeric and textual content for primitives, strings and
/// big integers; identity for objects, lists, maps and arrays.
bool values_equal(const Value& a, const Value& b);

/// Shortest round-trip rendering in the style of Java's Double.toString:
/// `14.0`, `0.5`, `1.0E10`, `NaN`, `Infinity`.
std::string format_double(double d);

/// Text of a non-object value as produced by string concatenation.
/// Objects render as `Class@serial`.
std::string render_value(const Value& v);

/// Name of the stub class whose natives implement this value's methods.
std::string runtime_class_name(const Value& v);

}  // namespace oodc
