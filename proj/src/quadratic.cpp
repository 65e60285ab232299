#include "starricci/quadratic.hpp"

#include "starricci/error.hpp"

namespace starricci {

std::string RadicalForm::to_string(const Expr& discriminant) const {
  if (radical.is_zero()) return rational.to_string();
  std::string root = "sqrt(" + discriminant.to_string() + ")";
  std::string rad = radical == Expr(1) ? root : "(" + radical.to_string() + ")*" + root;
  if (rational.is_zero()) return rad;
  return "(" + rational.to_string() + ") + " + rad;
}

std::string QuadraticSolution::solvability_condition() const {
  switch (kind) {
    case Kind::Quadratic:
      return discriminant.to_string() + " >= 0";
    case Kind::Linear:
      return b.to_string() + " != 0";
    case Kind::Identity:
      break;
  }
  return "always";
}

QuadraticSolution solve_quadratic(const Expr& e, Var unknown) {
  if (e.denominator().degree_in(unknown) > 0)
    throw Error(ErrorCode::InvalidArgument, "denominator depends on " + unknown.name());
  QuadraticSolution s(unknown);
  if (e.is_zero()) return s;
  const Polynomial& num = e.numerator();
  const unsigned degree = num.degree_in(unknown);
  if (degree == 0)
    throw Error(ErrorCode::Inconsistent, unknown.name() + " does not occur in nonzero equation " + e.to_string());
  if (degree > 2) throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(degree) + " in " + unknown.name());

  auto coeffs = num.coefficients_in(unknown);
  auto coeff = [&](unsigned k) { return coeffs.contains(k) ? Expr(coeffs.at(k)) : Expr(); };
  s.a = coeff(2);
  s.b = coeff(1);
  s.c = coeff(0);

  if (degree == 1) {
    s.kind = QuadraticSolution::Kind::Linear;
    s.roots.push_back({-s.c / s.b, Expr()});
    return s;
  }
  s.kind = QuadraticSolution::Kind::Quadratic;
  s.discriminant = s.b * s.b - Expr(4) * s.a * s.c;
  const Expr two_a = Expr(2) * s.a;
  const Expr vertex = -s.b / two_a;
  if (s.discriminant.is_zero()) {
    s.roots.push_back({vertex, Expr()});
  } else {
    s.roots.push_back({vertex, Expr(1) / two_a});
    s.roots.push_back({vertex, Expr(-1) / two_a});
  }
  return s;
}

bool verify_root(const QuadraticSolution& s, const RadicalForm& root) {
  const Expr& p = root.rational;
  const Expr& q = root.radical;
  Expr plain = s.a * (p * p + q * q * s.discriminant) + s.b * p + s.c;
  Expr radical = Expr(2) * s.a * p * q + s.b * q;
  return plain.is_zero() && radical.is_zero();
}

namespace {

SignCertificate poly_sign(const Polynomial& p) {
  if (p.is_zero()) return SignCertificate::None;
  bool strict = false;
  for (const auto& [m, c] : p.terms()) {
    if (sgn(c) < 0) return SignCertificate::None;
    for (const auto& [v, e] : m.factors())
      if (e % 2 != 0) return SignCertificate::None;
    if (m.empty()) strict = true;
  }
  return strict ? SignCertificate::Positive : SignCertificate::NonNegative;
}

}  // namespace

SignCertificate sign_certificate(const Expr& e) {
  SignCertificate n = poly_sign(e.numerator());
  SignCertificate d = poly_sign(e.denominator());
  if (n == SignCertificate::None || d != SignCertificate::Positive) return SignCertificate::None;
  return n;
}

std::optional<std::pair<Var, Rational>> square_bound(const Expr& e) {
  if (!e.is_polynomial()) return std::nullopt;
  const Polynomial& p = e.numerator();
  auto vars = p.vars();
  if (vars.size() != 1 || p.terms().size() != 2) return std::nullopt;
  const Var s = *vars.begin();
  auto coeffs = p.coefficients_in(s);
  if (!coeffs.contains(0) || !coeffs.contains(2)) return std::nullopt;
  Rational k0 = coeffs.at(0).constant_value();
  Rational k1 = coeffs.at(2).constant_value();
  if (sgn(k0) <= 0 || sgn(k1) >= 0) return std::nullopt;
  Rational bound = -k0 / k1;
  return std::pair{s, bound};
}

}  // namespace starricci
