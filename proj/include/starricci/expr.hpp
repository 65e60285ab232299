#pragma once

#include <map>
#include <ostream>
#include <set>
#include <string>

#include "starricci/polynomial.hpp"
#include "starricci/symbol.hpp"

namespace starricci {

/// Exact rational function in named symbols.
///
/// Always canonical: numerator and denominator share no common factor, the
/// denominator is monic in grlex order, and a constant denominator is folded
/// into the numerator. Structural equality is therefore mathematical
/// equality, and zero is the unique value with an empty numerator.
class Expr {
 public:
  Expr() = default;
  Expr(long value) : num_(value) {}                   // NOLINT(google-explicit-constructor)
  Expr(const Rational& value) : num_(value) {}        // NOLINT(google-explicit-constructor)
  Expr(Var v) : num_(v) {}                            // NOLINT(google-explicit-constructor)
  explicit Expr(Polynomial p) : num_(std::move(p)) {}
  Expr(const Polynomial& num, const Polynomial& den);  // throws DivisionByZero when den == 0

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  Rational constant_value() const;  // requires is_constant()
  std::set<Var> vars() const;

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr pow(int k) const;

  friend bool operator==(const Expr&, const Expr&) = default;

  /// Canonical text; re-parses to the same value.
  std::string to_string() const;

 private:
  void canonicalize();
  void canonicalize_reduced();  // numerator and denominator already coprime
  Polynomial num_;
  Polynomial den_{1};
};

inline std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << e.to_string(); }

using Bindings = std::map<Var, Expr>;
using NumericBindings = std::map<Var, double>;

/// Canonical form. Every Expr is already canonical, so this is the identity;
/// kept as the named normalization entry point.
inline Expr simplify(const Expr& e) { return e; }

/// Simultaneous substitution. Throws DivisionByZero when a denominator
/// vanishes identically.
Expr substitute(const Expr& e, const Bindings& bindings);

/// Double value of e. Evaluated exactly over the rationals (every double is a
/// dyadic rational) and rounded once. Throws UnknownSymbol for unbound
/// symbols and DivisionByZero when |denominator| <= zero_tolerance * the sum of
/// its term magnitudes.
double eval_numeric(const Expr& e, const NumericBindings& bindings, double zero_tolerance = 1e-14);

/// Exact value at rational bindings.
Rational eval_exact(const Expr& e, const std::map<Var, Rational>& bindings);

/// Formal directional derivative along a frame vector; the Leibniz rule over
/// the table's derivative symbols.
Expr derivative(const Expr& e, FrameIndex dir, const SymbolTable& table);

/// True when e mentions any symbol of the table's formal-derivative kind.
bool has_formal_derivatives(const Expr& e, const SymbolTable& table);

}  // namespace starricci
