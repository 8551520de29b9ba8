#include "oodc/value.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace oodc {

Value* Object::field(const std::string& name) {
  // Later entries belong to subclasses; search from the most derived end.
  for (auto it = fields.rbegin(); it != fields.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

bool values_equal(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b);
      },
      a);
}

std::string format_double(double d) {
  if (std::isnan(d)) return "NaN";
  if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";
  if (d == 0) return std::signbit(d) ? "-0.0" : "0.0";

  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, d, std::chars_format::scientific);
  std::string sci(buf, res.ptr);
  std::string sign;
  if (sci.front() == '-') {
    sign = "-";
    sci.erase(0, 1);
  }
  auto e_pos = sci.find('e');
  std::string mantissa = sci.substr(0, e_pos);
  int exponent = std::atoi(sci.c_str() + e_pos + 1);
  std::string digits;
  for (char c : mantissa)
    if (c != '.') digits += c;

  double mag = std::fabs(d);
  if (mag >= 1e-3 && mag < 1e7) {
    std::string whole;
    std::string frac;
    int point = exponent + 1;  // digits before the decimal point
    if (point <= 0) {
      whole = "0";
      frac = std::string(static_cast<std::size_t>(-point), '0') + digits;
    } else if (static_cast<std::size_t>(point) >= digits.size()) {
      whole = digits + std::string(point - digits.size(), '0');
    } else {
      whole = digits.substr(0, point);
      frac = digits.substr(point);
    }
    if (frac.empty()) frac = "0";
    return sign + whole + "." + frac;
  }
  std::string frac = digits.size() > 1 ? digits.substr(1) : "0";
  return sign + digits.substr(0, 1) + "." + frac + "E" + std::to_string(exponent);
}

std::string render_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Null>) return "null";
        else if constexpr (std::is_same_v<T, std::int32_t> || std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, double>) return format_double(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else if constexpr (std::is_same_v<T, BigInt>) return x.str();
        else if constexpr (std::is_same_v<T, std::shared_ptr<Object>>) return x->class_name + "@" + std::to_string(x->serial);
        else if constexpr (std::is_same_v<T, std::shared_ptr<ListObject>>) {
          std::string out = "[";
          for (std::size_t i = 0; i < x->items.size(); ++i) out += (i ? ", " : "") + render_value(x->items[i]);
          return out + "]";
        } else if constexpr (std::is_same_v<T, std::shared_ptr<MapObject>>) {
          std::string out = "{";
          for (std::size_t i = 0; i < x->entries.size(); ++i)
            out += (i ? ", " : "") + render_value(x->entries[i].first) + "=" + render_value(x->entries[i].second);
          return out + "}";
        } else {
          std::string out = "[";
          for (std::size_t i = 0; i < x->items.size(); ++i) out += (i ? ", " : "") + render_value(x->items[i]);
          return out + "]";
        }
      },
      v);
}

std::string runtime_class_name(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::int32_t>) return "Integer";
        else if constexpr (std::is_same_v<T, std::int64_t>) return "Long";
        else if constexpr (std::is_same_v<T, double>) return "Double";
        else if constexpr (std::is_same_v<T, bool>) return "Boolean";
        else if constexpr (std::is_same_v<T, std::string>) return "String";
        else if constexpr (std::is_same_v<T, BigInt>) return "BigInteger";
        else if constexpr (std::is_same_v<T, std::shared_ptr<Object>>) return x->class_name;
        else if constexpr (std::is_same_v<T, std::shared_ptr<ListObject>>) return "List";
        else if constexpr (std::is_same_v<T, std::shared_ptr<MapObject>>) return "Map";
        else return "Object";
      },
      v);
}

}  // namespace oodc
