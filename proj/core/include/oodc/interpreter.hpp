#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oodc/ast.hpp"
#include "oodc/class_table.hpp"
#include "oodc/source.hpp"
#include "oodc/value.hpp"

namespace oodc {

/// Codes: R001 null receiver, R002 index out of bounds, R003 division by zero,
/// R004 missing native binding or implementation, R005 call depth exceeded,
/// R006 missing entry point.
struct RuntimeError {
  std::string code;
  Span span;
  std::string message;
};

/// Lexical frames of one method activation.
class Environment {
 public:
  explicit Environment(Value self = Null{}) : self_(std::move(self)) { push(); }

  void push() { frames_.emplace_back(); }
  void pop() { frames_.pop_back(); }
  void declare(const std::string& name, Value v) { frames_.back().emplace_back(name, std::move(v)); }
  /// Innermost binding of `name`, or nullptr.
  Value* lookup(const std::string& name);
  [[nodiscard]] const Value& self() const { return self_; }

 private:
  std::vector<std::vector<std::pair<std::string, Value>>> frames_;
  Value self_;
};

/// Tree-walking evaluator for desugared programs. Units must be attributed in
/// base mode (every operator Builtin); anything else is rejected with
/// std::invalid_argument at construction.
class Interpreter {
 public:
  Interpreter(const ClassTable& table, std::span<const Unit> units, std::ostream* stream = nullptr);

  /// Calls a static method by class and name. Throws RuntimeError.
  Value call_static(std::string_view cls, std::string_view method, std::vector<Value> args);

  /// Invokes a native stub binding. Throws RuntimeError (R004 when unbound).
  Value call_native(const std::string& qualified, const Value& receiver, std::vector<Value> args,
                    const Span& where);

  /// String conversion used by `+`, dispatching to user `toString` overrides.
  std::string stringify(const Value& v, const Span& where);

  [[nodiscard]] const std::string& output() const { return output_; }

  static std::vector<std::string> native_names();

 private:
  enum class Flow { Normal, Return };

  Value eval(const Expr& e);
  Flow exec(const Stmt& s);
  Value invoke(const MethodSig* sig, Value receiver, std::vector<Value> args, const Span& where);
  Value construct(const Expr& e);
  void run_constructor(const MethodSig* ctor, const Value& self, std::vector<Value> args,
                       const Span& where);
  Value call(const Expr& e);
  Value assign(const Expr& e);
  Value eval_binary(const Expr& e);
  Value eval_unary(const Expr& e);
  std::vector<Value> eval_args(std::span<const Expr> args, const std::vector<Type>& types);
  Value coerce(Value v, const Type& target, const Span& where) const;
  Value default_value(const Type& t) const;
  const Stmt* body_of(const MethodSig* sig) const;
  void print_line(const std::string& line);

  const ClassTable& table_;
  std::map<std::string, const ClassDecl*, std::less<>> decls_;
  Environment* env_ = nullptr;
  Type ret_type_;
  Value return_value_;
  std::string output_;
  std::ostream* stream_;
  int depth_ = 0;
  std::int64_t next_serial_ = 1;
};

struct RunOutcome {
  std::optional<Value> exit_value;
  std::string output;
  std::optional<RuntimeError> error;

  [[nodiscard]] bool ok() const { return !error.has_value(); }
};

/// Runs `entry_class.main()`. With an empty `entry_class` the unique class
/// declaring a static, parameterless `main` is used.
RunOutcome evaluate_program(std::span<const Unit> units, const ClassTable& table,
                            std::string_view entry_class = {}, std::ostream* stream = nullptr);

}  // namespace oodc
