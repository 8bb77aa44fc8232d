#include "commutant/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>
#include <vector>

namespace commutant {

ParseError::ParseError(const std::string& msg, std::size_t offset)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                         ": " + msg),
      offset_(offset) {}

const char* builtin_name(Builtin fn) {
  switch (fn) {
    case Builtin::Sin: return "sin";
    case Builtin::Cos: return "cos";
    case Builtin::Tan: return "tan";
    case Builtin::Sinh: return "sinh";
    case Builtin::Cosh: return "cosh";
    case Builtin::Tanh: return "tanh";
    case Builtin::Exp: return "exp";
    case Builtin::Ln: return "ln";
    case Builtin::Sqrt: return "sqrt";
    case Builtin::Abs: return "abs";
    case Builtin::Sgn: return "sgn";
  }
  return "?";
}

namespace {

bool lookup_builtin(const std::string& name, Builtin& out) {
  static const std::pair<const char*, Builtin> table[] = {
      {"sin", Builtin::Sin},   {"cos", Builtin::Cos},  {"tan", Builtin::Tan},
      {"sinh", Builtin::Sinh}, {"cosh", Builtin::Cosh}, {"tanh", Builtin::Tanh},
      {"exp", Builtin::Exp},   {"ln", Builtin::Ln},    {"sqrt", Builtin::Sqrt},
      {"abs", Builtin::Abs},   {"sgn", Builtin::Sgn},
  };
  for (const auto& [n, fn] : table) {
    if (name == n) {
      out = fn;
      return true;
    }
  }
  return false;
}

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

}  // namespace

// ---------------------------------------------------------------------------
// Node factories
// ---------------------------------------------------------------------------

// make_shared needs an accessible constructor; go through a derived helper.
struct ExprBuilder : Expr {};

static ExprPtr raw_node() { return std::make_shared<ExprBuilder>(); }

static Expr& mut(const ExprPtr& p) {
  return const_cast<Expr&>(*p);  // only during construction, before sharing
}

ExprPtr Expr::literal(double v) {
  auto n = raw_node();
  mut(n).kind_ = Kind::Literal;
  mut(n).value_ = v;
  return n;
}

ExprPtr Expr::time_var() {
  auto n = raw_node();
  mut(n).kind_ = Kind::Time;
  return n;
}

ExprPtr Expr::param(std::string name) {
  auto n = raw_node();
  mut(n).kind_ = Kind::Param;
  mut(n).name_ = std::move(name);
  return n;
}

bool Expr::is_literal(double v) const {
  return kind_ == Kind::Literal && value_ == v;
}

ExprPtr Expr::neg(ExprPtr u) {
  if (u->kind() == Kind::Literal) return literal(-u->literal_value());
  auto n = raw_node();
  mut(n).kind_ = Kind::Neg;
  mut(n).lhs_ = std::move(u);
  return n;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
  if (a->is_literal(0)) return b;
  if (b->is_literal(0)) return a;
  if (a->kind() == Kind::Literal && b->kind() == Kind::Literal)
    return literal(a->literal_value() + b->literal_value());
  // a + (-c)*x and a + (-c) print better as subtractions.
  if (b->kind() == Kind::Neg) return sub(std::move(a), b->child());
  if (b->kind() == Kind::Literal && b->literal_value() < 0)
    return sub(std::move(a), literal(-b->literal_value()));
  if (b->kind() == Kind::Mul && b->lhs()->kind() == Kind::Literal &&
      b->lhs()->literal_value() < 0)
    return sub(std::move(a),
               mul(literal(-b->lhs()->literal_value()), b->rhs()));
  auto n = raw_node();
  mut(n).kind_ = Kind::Add;
  mut(n).lhs_ = std::move(a);
  mut(n).rhs_ = std::move(b);
  return n;
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
  if (b->is_literal(0)) return a;
  if (a->kind() == Kind::Literal && b->kind() == Kind::Literal)
    return literal(a->literal_value() - b->literal_value());
  if (a->is_literal(0)) return neg(std::move(b));
  auto n = raw_node();
  mut(n).kind_ = Kind::Sub;
  mut(n).lhs_ = std::move(a);
  mut(n).rhs_ = std::move(b);
  return n;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
  if (a->is_literal(0) || b->is_literal(0)) return literal(0);
  if (a->is_literal(1)) return b;
  if (b->is_literal(1)) return a;
  if (a->kind() == Kind::Literal && b->kind() == Kind::Literal)
    return literal(a->literal_value() * b->literal_value());
  auto n = raw_node();
  mut(n).kind_ = Kind::Mul;
  mut(n).lhs_ = std::move(a);
  mut(n).rhs_ = std::move(b);
  return n;
}

ExprPtr Expr::div(ExprPtr a, ExprPtr b) {
  if (b->is_literal(1)) return a;
  if (a->is_literal(0) && !b->is_literal(0)) return literal(0);
  auto n = raw_node();
  mut(n).kind_ = Kind::Div;
  mut(n).lhs_ = std::move(a);
  mut(n).rhs_ = std::move(b);
  return n;
}

ExprPtr Expr::pow(ExprPtr base, ExprPtr exponent) {
  if (exponent->is_literal(1)) return base;
  auto n = raw_node();
  mut(n).kind_ = Kind::Pow;
  mut(n).lhs_ = std::move(base);
  mut(n).rhs_ = std::move(exponent);
  return n;
}

ExprPtr Expr::call(Builtin fn, ExprPtr arg) {
  if (arg->kind() == Kind::Literal) {
    // Fold constant applications when they evaluate cleanly; domain
    // violations keep the node so the error surfaces at evaluation.
    try {
      const Jet2 v = jet_call(fn, {arg->literal_value(), 0.0, 0.0});
      if (std::isfinite(v.v)) return literal(v.v);
    } catch (const EvalError&) {
    }
  }
  auto n = raw_node();
  mut(n).kind_ = Kind::Call;
  mut(n).fn_ = fn;
  mut(n).lhs_ = std::move(arg);
  return n;
}

// ---------------------------------------------------------------------------
// Jet arithmetic
// ---------------------------------------------------------------------------

Jet2 operator-(const Jet2& u) { return {-u.v, -u.d1, -u.d2}; }

Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (b.v == 0.0) throw EvalError("division by zero");
  const double w = a.v / b.v;
  const double w1 = (a.d1 - w * b.d1) / b.v;
  const double w2 = (a.d2 - 2.0 * w1 * b.d1 - w * b.d2) / b.v;
  return {w, w1, w2};
}

namespace {

// f(u) with f', f'' supplied: classic second-order chain rule.
Jet2 compose(double f, double fp, double fpp, const Jet2& u) {
  return {f, fp * u.d1, fpp * u.d1 * u.d1 + fp * u.d2};
}

bool near_integer(double c) {
  return std::abs(c - std::round(c)) < 1e-12 && std::abs(c) < 1e15;
}

}  // namespace

Jet2 jet_pow(const Jet2& u, const Jet2& e) {
  const bool const_exp = (e.d1 == 0.0 && e.d2 == 0.0);
  if (const_exp) {
    const double c = e.v;
    if (c == 0.0) return {1.0, 0.0, 0.0};
    if (c == 1.0) return u;
    if (u.v == 0.0 && c < 0.0) throw EvalError("0 raised to a negative power");
    if (u.v < 0.0 && !near_integer(c))
      throw EvalError("negative base with non-integer exponent");
    const double p = std::pow(u.v, c);
    const double p1 = c * std::pow(u.v, c - 1.0);
    const double p2 = c * (c - 1.0) * std::pow(u.v, c - 2.0);
    return compose(p, p1, p2, u);
  }
  // Varying exponent: u^e = exp(e * ln u), defined for u > 0 only.
  if (u.v <= 0.0)
    throw EvalError("non-positive base with non-constant exponent");
  return jet_call(Builtin::Exp, e * jet_call(Builtin::Ln, u));
}

Jet2 jet_call(Builtin fn, const Jet2& u) {
  switch (fn) {
    case Builtin::Sin:
      return compose(std::sin(u.v), std::cos(u.v), -std::sin(u.v), u);
    case Builtin::Cos:
      return compose(std::cos(u.v), -std::sin(u.v), -std::cos(u.v), u);
    case Builtin::Tan: {
      const double f = std::tan(u.v);
      const double fp = 1.0 + f * f;
      return compose(f, fp, 2.0 * f * fp, u);
    }
    case Builtin::Sinh:
      return compose(std::sinh(u.v), std::cosh(u.v), std::sinh(u.v), u);
    case Builtin::Cosh:
      return compose(std::cosh(u.v), std::sinh(u.v), std::cosh(u.v), u);
    case Builtin::Tanh: {
      const double f = std::tanh(u.v);
      const double fp = 1.0 - f * f;
      return compose(f, fp, -2.0 * f * fp, u);
    }
    case Builtin::Exp: {
      const double f = std::exp(u.v);
      return compose(f, f, f, u);
    }
    case Builtin::Ln:
      if (u.v <= 0.0) throw EvalError("ln of a non-positive value");
      return compose(std::log(u.v), 1.0 / u.v, -1.0 / (u.v * u.v), u);
    case Builtin::Sqrt: {
      if (u.v <= 0.0) throw EvalError("sqrt of a non-positive value");
      const double r = std::sqrt(u.v);
      return compose(r, 0.5 / r, -0.25 / (u.v * r), u);
    }
    case Builtin::Abs:
      // Derivative convention: sgn(u) away from 0, exactly 0 at u == 0.
      return {std::abs(u.v), sgn(u.v) * u.d1, sgn(u.v) * u.d2};
    case Builtin::Sgn:
      // sgn(0) = 0 and derivative 0 everywhere.
      return {sgn(u.v), 0.0, 0.0};
  }
  throw EvalError("unknown builtin");
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty input", 0);
    ExprPtr e = additive();
    skip_ws();
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '.')
        throw ParseError(
            "unexpected token (implicit multiplication is not supported; "
            "write an explicit '*')",
            pos_);
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ExprPtr additive() {
    ExprPtr e = multiplicative();
    for (;;) {
      if (eat('+'))
        e = Expr::add(e, multiplicative());
      else if (eat('-'))
        e = Expr::sub(e, multiplicative());
      else
        return e;
    }
  }

  ExprPtr multiplicative() {
    ExprPtr e = unary();
    for (;;) {
      if (eat('*'))
        e = Expr::mul(e, unary());
      else if (eat('/'))
        e = Expr::div(e, unary());
      else
        return e;
    }
  }

  ExprPtr unary() {
    if (eat('-')) return Expr::neg(unary());
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (eat('^')) return Expr::pow(base, unary());  // right-associative
    return base;
  }

  ExprPtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = additive();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  ExprPtr number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("malformed number", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    return Expr::literal(v);
  }

  ExprPtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (peek() == '(') {
      Builtin fn;
      if (!lookup_builtin(name, fn))
        throw ParseError("unknown function '" + name + "'", start);
      eat('(');
      ExprPtr arg = additive();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return Expr::call(fn, arg);
    }
    if (name == "t" || name == "x") return Expr::time_var();
    return Expr::param(std::move(name));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// Precedence levels for parenthesization: atoms 6, ^ 4, unary - 3, * / 2,
// + - 1. Structure is preserved exactly, so reparsing yields the same tree.
int level(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Literal:
      return e.literal_value() < 0 ? 3 : 6;
    case Expr::Kind::Pow: return 4;
    default: return 6;
  }
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print(const Expr& e, std::string& out) {
  auto child = [&out](const ExprPtr& c, bool parens) {
    if (parens) out += '(';
    print(*c, out);
    if (parens) out += ')';
  };
  switch (e.kind()) {
    case Expr::Kind::Literal:
      out += fmt_double(e.literal_value());
      return;
    case Expr::Kind::Time:
      out += 't';
      return;
    case Expr::Kind::Param:
      out += e.param_name();
      return;
    case Expr::Kind::Neg:
      out += '-';
      child(e.child(), level(*e.child()) < 4);
      return;
    case Expr::Kind::Add:
      child(e.lhs(), false);
      out += " + ";
      child(e.rhs(), level(*e.rhs()) <= 1);
      return;
    case Expr::Kind::Sub:
      child(e.lhs(), false);
      out += " - ";
      child(e.rhs(), level(*e.rhs()) <= 1);
      return;
    case Expr::Kind::Mul:
      child(e.lhs(), level(*e.lhs()) < 2);
      out += '*';
      child(e.rhs(), level(*e.rhs()) <= 2);
      return;
    case Expr::Kind::Div:
      child(e.lhs(), level(*e.lhs()) < 2);
      out += '/';
      child(e.rhs(), level(*e.rhs()) <= 2);
      return;
    case Expr::Kind::Pow:
      child(e.lhs(), level(*e.lhs()) < 6);
      out += '^';
      child(e.rhs(), level(*e.rhs()) < 3);
      return;
    case Expr::Kind::Call:
      out += builtin_name(e.builtin());
      out += '(';
      print(*e.child(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const ExprPtr& e) {
  std::string out;
  print(*e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

Jet2 eval_node(const Expr& e, double t, const Params& params) {
  switch (e.kind()) {
    case Expr::Kind::Literal: return {e.literal_value(), 0.0, 0.0};
    case Expr::Kind::Time: return {t, 1.0, 0.0};
    case Expr::Kind::Param: {
      auto it = params.find(e.param_name());
      if (it == params.end())
        throw EvalError("unresolved parameter '" + e.param_name() + "'");
      return {it->second, 0.0, 0.0};
    }
    case Expr::Kind::Neg: return -eval_node(*e.child(), t, params);
    case Expr::Kind::Add:
      return eval_node(*e.lhs(), t, params) + eval_node(*e.rhs(), t, params);
    case Expr::Kind::Sub:
      return eval_node(*e.lhs(), t, params) - eval_node(*e.rhs(), t, params);
    case Expr::Kind::Mul:
      return eval_node(*e.lhs(), t, params) * eval_node(*e.rhs(), t, params);
    case Expr::Kind::Div:
      return eval_node(*e.lhs(), t, params) / eval_node(*e.rhs(), t, params);
    case Expr::Kind::Pow:
      return jet_pow(eval_node(*e.lhs(), t, params),
                     eval_node(*e.rhs(), t, params));
    case Expr::Kind::Call:
      return jet_call(e.builtin(), eval_node(*e.child(), t, params));
  }
  throw EvalError("corrupt expression node");
}

double eval_value_node(const Expr& e, double t, const Params& params) {
  switch (e.kind()) {
    case Expr::Kind::Literal: return e.literal_value();
    case Expr::Kind::Time: return t;
    case Expr::Kind::Param: {
      auto it = params.find(e.param_name());
      if (it == params.end())
        throw EvalError("unresolved parameter '" + e.param_name() + "'");
      return it->second;
    }
    case Expr::Kind::Neg: return -eval_value_node(*e.child(), t, params);
    case Expr::Kind::Add:
      return eval_value_node(*e.lhs(), t, params) +
             eval_value_node(*e.rhs(), t, params);
    case Expr::Kind::Sub:
      return eval_value_node(*e.lhs(), t, params) -
             eval_value_node(*e.rhs(), t, params);
    case Expr::Kind::Mul:
      return eval_value_node(*e.lhs(), t, params) *
             eval_value_node(*e.rhs(), t, params);
    case Expr::Kind::Div: {
      const double denom = eval_value_node(*e.rhs(), t, params);
      if (denom == 0.0) throw EvalError("division by zero");
      return eval_value_node(*e.lhs(), t, params) / denom;
    }
    case Expr::Kind::Pow: {
      const double base = eval_value_node(*e.lhs(), t, params);
      const double c = eval_value_node(*e.rhs(), t, params);
      if (base == 0.0 && c < 0.0)
        throw EvalError("0 raised to a negative power");
      if (base < 0.0 && !near_integer(c))
        throw EvalError("negative base with non-integer exponent");
      return std::pow(base, c);
    }
    case Expr::Kind::Call: {
      const double u = eval_value_node(*e.child(), t, params);
      switch (e.builtin()) {
        case Builtin::Sin: return std::sin(u);
        case Builtin::Cos: return std::cos(u);
        case Builtin::Tan: return std::tan(u);
        case Builtin::Sinh: return std::sinh(u);
        case Builtin::Cosh: return std::cosh(u);
        case Builtin::Tanh: return std::tanh(u);
        case Builtin::Exp: return std::exp(u);
        case Builtin::Ln:
          if (u <= 0.0) throw EvalError("ln of a non-positive value");
          return std::log(u);
        case Builtin::Sqrt:
          if (u <= 0.0) throw EvalError("sqrt of a non-positive value");
          return std::sqrt(u);
        case Builtin::Abs: return std::abs(u);
        case Builtin::Sgn: return sgn(u);
      }
      throw EvalError("unknown builtin");
    }
  }
  throw EvalError("corrupt expression node");
}

}  // namespace

Jet2 eval_jet(const ExprPtr& e, double t, const Params& params) {
  const Jet2 j = eval_node(*e, t, params);
  if (!std::isfinite(j.v) || !std::isfinite(j.d1) || !std::isfinite(j.d2))
    throw EvalError("non-finite result");
  return j;
}

double eval_value(const ExprPtr& e, double t, const Params& params) {
  const double v = eval_value_node(*e, t, params);
  if (!std::isfinite(v)) throw EvalError("non-finite result");
  return v;
}

ExprPtr bind_params(const ExprPtr& e, const Params& params) {
  switch (e->kind()) {
    case Expr::Kind::Literal:
    case Expr::Kind::Time:
      return e;
    case Expr::Kind::Param: {
      auto it = params.find(e->param_name());
      return it == params.end() ? e : Expr::literal(it->second);
    }
    case Expr::Kind::Neg:
      return Expr::neg(bind_params(e->child(), params));
    case Expr::Kind::Add:
      return Expr::add(bind_params(e->lhs(), params),
                       bind_params(e->rhs(), params));
    case Expr::Kind::Sub:
      return Expr::sub(bind_params(e->lhs(), params),
                       bind_params(e->rhs(), params));
    case Expr::Kind::Mul:
      return Expr::mul(bind_params(e->lhs(), params),
                       bind_params(e->rhs(), params));
    case Expr::Kind::Div:
      return Expr::div(bind_params(e->lhs(), params),
                       bind_params(e->rhs(), params));
    case Expr::Kind::Pow:
      return Expr::pow(bind_params(e->lhs(), params),
                       bind_params(e->rhs(), params));
    case Expr::Kind::Call:
      return Expr::call(e->builtin(), bind_params(e->child(), params));
  }
  return e;
}

namespace {

void collect_params(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Expr::Kind::Param:
      out.insert(e.param_name());
      return;
    case Expr::Kind::Literal:
    case Expr::Kind::Time:
      return;
    default:
      if (e.lhs()) collect_params(*e.lhs(), out);
      if (e.rhs()) collect_params(*e.rhs(), out);
  }
}

}  // namespace

std::set<std::string> free_params(const ExprPtr& e) {
  std::set<std::string> out;
  collect_params(*e, out);
  return out;
}

namespace {

bool contains_time(const Expr& e) {
  if (e.kind() == Expr::Kind::Time) return true;
  if (e.lhs() && contains_time(*e.lhs())) return true;
  if (e.rhs() && contains_time(*e.rhs())) return true;
  return false;
}

}  // namespace

double parse_real(const std::string& text) {
  ExprPtr e = parse_expr(text);
  const auto free = free_params(e);
  if (!free.empty())
    throw EvalError("expected a constant, found parameter '" + *free.begin() +
                    "'");
  if (contains_time(*e)) throw EvalError("expected a constant, found 't'");
  return eval_value(e, 0.0, {});
}

}  // namespace commutant
