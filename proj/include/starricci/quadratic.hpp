#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starricci/expr.hpp"

namespace starricci {

/// rational + radical * sqrt(discriminant). The square root is opaque: the
/// only rule applied to it is sqrt(d)^2 = d.
struct RadicalForm {
  Expr rational;
  Expr radical;

  std::string to_string(const Expr& discriminant) const;
};

struct QuadraticSolution {
  enum class Kind { Quadratic, Linear, Identity };

  explicit QuadraticSolution(Var u) : unknown(u) {}

  Var unknown;
  Kind kind = Kind::Identity;
  // Equation a*x^2 + b*x + c = 0 read off the numerator.
  Expr a, b, c;
  Expr discriminant;  // b^2 - 4ac; zero unless quadratic
  std::vector<RadicalForm> roots;

  /// "<discriminant> >= 0" for quadratics, "<b> != 0" for linear equations.
  std::string solvability_condition() const;
};

/// Solves e = 0 for `unknown`, treating e as its numerator. Throws
/// Inconsistent when `unknown` is absent and e != 0, and InvalidArgument when
/// the degree in `unknown` exceeds 2 or the denominator depends on it.
QuadraticSolution solve_quadratic(const Expr& e, Var unknown);

/// Exact back-substitution of a root, using sqrt(d)^2 = d.
bool verify_root(const QuadraticSolution& s, const RadicalForm& root);

enum class SignCertificate { Positive, NonNegative, None };

/// Sufficient sign test: every monomial an even power with a positive
/// coefficient (plus a positive constant for strict positivity).
SignCertificate sign_certificate(const Expr& e);

/// Reads `k0 + k1 * s^2` with rational k0 > 0 and k1 < 0 as the bound
/// s^2 <= -k0/k1. Returns (s, bound) or nullopt for any other shape.
std::optional<std::pair<Var, Rational>> square_bound(const Expr& e);

}  // namespace starricci
