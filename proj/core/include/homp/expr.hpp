#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homp/rational.hpp"

namespace homp {

// Numeric constant: exact rational while the input data is rational,
// double once anything irrational has been folded in.
struct Scalar {
  bool exact = true;
  Rat rat;
  double flt = 0.0;

  static Scalar from_rat(Rat r) { return Scalar{true, std::move(r), 0.0}; }
  static Scalar from_double(double d) { return Scalar{false, Rat(0), d}; }
  double value() const { return exact ? to_double(rat) : flt; }
  bool is_zero() const { return exact ? rat == 0 : flt == 0.0; }
  bool is_one() const { return exact ? rat == 1 : flt == 1.0; }
};

// Variable reference: the time variable t, or state component x1..xn
// (stored 0-based).
struct VarRef {
  bool is_time = false;
  int index = 0;

  static VarRef time() { return VarRef{true, 0}; }
  static VarRef state(int i) { return VarRef{false, i}; }
};

enum class Fn { Sin, Cos, Exp, Sqrt };

// Immutable scalar expression tree over t and x1..xn. Construction goes
// through factory functions that apply local folds (constant arithmetic,
// 0/1 identities), so trees built from rational data keep exact rational
// constants.
class Expr {
 public:
  enum class Kind { Constant, Time, State, Neg, Add, Sub, Mul, Div, Pow, Fun };

  struct Node;

  Expr();  // constant 0

  static Expr constant(Rat r);
  static Expr constant(long long v) { return constant(Rat(v)); }
  static Expr constant_double(double v);
  static Expr time();
  static Expr state(int index);  // 0-based

  static Expr neg(Expr a);
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr div(Expr a, Expr b);
  static Expr pow(Expr base, int exponent);  // exponent >= 0
  static Expr fun(Fn f, Expr a);

  Kind kind() const;
  const Scalar& scalar() const;   // Constant
  int state_index() const;        // State
  int exponent() const;           // Pow
  Fn fn() const;                  // Fun
  const Expr& child_a() const;    // unary/binary lhs
  const Expr& child_b() const;    // binary rhs

  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_zero() const;
  bool is_one() const;

  // Largest referenced state index, -1 if none.
  int max_state_index() const;
  bool uses_time() const;

  double eval(double t, std::span<const double> x) const;
  Expr diff(VarRef var) const;
  Expr simplified() const;
  std::string to_string() const;

  friend bool identical(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Expr operator-(Expr a) { return Expr::neg(std::move(a)); }
inline Expr operator+(Expr a, Expr b) { return Expr::add(std::move(a), std::move(b)); }
inline Expr operator-(Expr a, Expr b) { return Expr::sub(std::move(a), std::move(b)); }
inline Expr operator*(Expr a, Expr b) { return Expr::mul(std::move(a), std::move(b)); }
inline Expr operator/(Expr a, Expr b) { return Expr::div(std::move(a), std::move(b)); }

bool identical(const Expr& a, const Expr& b);

// Text grammar: infix + - * / ^, parentheses, numeric literals, t,
// x1..xn, sin cos exp sqrt. `dim` bounds state indices (-1: unbounded);
// allow_time=false rejects t (autonomous vector fields).
Expr parse_expr(const std::string& text, int dim = -1, bool allow_time = true);

// Parses a constant expression ("sqrt(2)/2") and evaluates it.
double parse_number(const std::string& text);

}  // namespace homp
