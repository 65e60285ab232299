#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "starricci/symbol.hpp"

namespace starricci {

using Rational = mpq_class;

/// Power product of symbols, kept sorted by symbol with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Var v, unsigned exponent = 1);

  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(Var v) const;
  bool empty() const noexcept { return factors_.empty(); }
  const std::vector<std::pair<Var, unsigned>>& factors() const noexcept { return factors_; }

  Monomial without(Var v) const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divides()

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<std::pair<Var, unsigned>> factors_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order; symbols earlier in name order rank higher.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with exact rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(Var v);
  Polynomial(const Monomial& m, const Rational& coeff);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_value() const;  // requires is_constant()
  const Terms& terms() const noexcept { return terms_; }

  // Greatest term in grlex order.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  unsigned total_degree() const;
  unsigned degree_in(Var v) const;
  std::set<Var> vars() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial scaled(const Rational& k) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Coefficients with respect to v: polynomial = sum_k coeff[k] * v^k.
  std::map<unsigned, Polynomial> coefficients_in(Var v) const;
  static Polynomial from_coefficients(Var v, const std::map<unsigned, Polynomial>& coeffs);

  Polynomial partial(Var v) const;

  /// Quotient when `divisor` divides this polynomial exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Scaled so the leading coefficient is 1. Zero stays zero.
  Polynomial monic() const;
  /// Scaled to coprime integer coefficients with positive leading coefficient.
  Polynomial integer_primitive() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Greatest common divisor, normalized monic. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b viewed as univariate polynomials in v.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var v);

std::string rational_to_string(const Rational& q);

}  // namespace starricci
