#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

namespace commutant {

using Params = std::map<std::string, double>;

/// Order-2 jet: value plus first and second derivative with respect to t.
/// Constants carry (c, 0, 0); the time variable carries (t, 1, 0).
struct Jet2 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation failure: unresolved parameter, domain violation, or a
/// non-finite result.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Builtin { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Ln, Sqrt, Abs, Sgn };

const char* builtin_name(Builtin fn);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree in the independent variable t with named real
/// parameters. `x` is accepted by the parser and canonicalized to t.
class Expr {
 public:
  enum class Kind { Literal, Time, Param, Neg, Add, Sub, Mul, Div, Pow, Call };

  Kind kind() const { return kind_; }
  double literal_value() const { return value_; }
  const std::string& param_name() const { return name_; }
  Builtin builtin() const { return fn_; }
  const ExprPtr& lhs() const { return lhs_; }
  const ExprPtr& rhs() const { return rhs_; }
  const ExprPtr& child() const { return lhs_; }  // Neg / Call operand

  // Node factories. The binary/unary ones fold trivial literal arithmetic
  // (0*x, 1*x, x+0, literal op literal) so synthesized trees stay readable.
  static ExprPtr literal(double v);
  static ExprPtr time_var();
  static ExprPtr param(std::string name);
  static ExprPtr neg(ExprPtr u);
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr div(ExprPtr a, ExprPtr b);
  static ExprPtr pow(ExprPtr base, ExprPtr exponent);
  static ExprPtr call(Builtin fn, ExprPtr arg);

  bool is_literal(double v) const;

 protected:
  Expr() = default;

 private:
  Kind kind_ = Kind::Literal;
  double value_ = 0.0;
  std::string name_;
  Builtin fn_ = Builtin::Sin;
  ExprPtr lhs_, rhs_;
};

// Jet arithmetic (Leibniz/chain rules truncated at order 2).
Jet2 operator-(const Jet2& u);
Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 jet_pow(const Jet2& base, const Jet2& exponent);
Jet2 jet_call(Builtin fn, const Jet2& u);

/// Parses the expression grammar: +, -, *, /, right-associative ^, unary
/// minus, parentheses, and the builtin function set. Implicit
/// multiplication is rejected. Throws ParseError.
ExprPtr parse_expr(const std::string& text);

/// Prints an expression so that parsing the result reproduces the same tree.
std::string to_string(const ExprPtr& e);

/// Value and first two t-derivatives at t. Every parameter reference must
/// resolve in `params`; throws EvalError otherwise or on domain violations
/// (sqrt/ln of a non-positive value, division by zero, 0^negative) and on
/// non-finite results.
Jet2 eval_jet(const ExprPtr& e, double t, const Params& params);

/// Value-only evaluation; same error contract as eval_jet.
double eval_value(const ExprPtr& e, double t, const Params& params);

/// Replaces parameter references found in `params` with literals.
ExprPtr bind_params(const ExprPtr& e, const Params& params);

/// Names of unresolved parameter references in the tree.
std::set<std::string> free_params(const ExprPtr& e);

/// Parses `text` and evaluates it as a constant (no t, no parameters).
/// Accepts expressions such as "337/32". Throws ParseError or EvalError.
double parse_real(const std::string& text);

}  // namespace commutant
