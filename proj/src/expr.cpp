#include "starricci/expr.hpp"

#include <cmath>

#include "starricci/error.hpp"

namespace starricci {

Expr::Expr(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) { canonicalize(); }

void Expr::canonicalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator is identically zero");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  Rational k = 1 / den_.leading_coefficient();
  if (k != 1) {
    num_ = num_.scaled(k);
    den_ = den_.scaled(k);
  }
}

void Expr::canonicalize_reduced() {
  Rational k = 1 / den_.leading_coefficient();
  if (k != 1) {
    num_ = num_.scaled(k);
    den_ = den_.scaled(k);
  }
}

Rational Expr::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "expression is not constant: " + to_string());
  return num_.constant_value();
}

std::set<Var> Expr::vars() const {
  std::set<Var> out = num_.vars();
  out.merge(den_.vars());
  return out;
}

Expr Expr::operator-() const {
  Expr out = *this;
  out.num_ = -out.num_;
  return out;
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) {
    if (a.den_ == b.den_) return Expr(a.num_ + b.num_);
    return Expr(a.num_.scaled(b.den_.constant_value()) + b.num_.scaled(a.den_.constant_value()),
                a.den_.scaled(b.den_.constant_value()));
  }
  // Both inputs are reduced, so only the gcd of the denominators can cancel.
  Polynomial g = gcd(a.den_, b.den_);
  Polynomial bd = *b.den_.divide_exact(g);
  Polynomial ad = *a.den_.divide_exact(g);
  Polynomial t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return {};
  Polynomial g2 = gcd(t, g);
  Expr out;
  out.num_ = *t.divide_exact(g2);
  out.den_ = ad * *b.den_.divide_exact(g2);
  out.canonicalize_reduced();
  return out;
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return Expr(a.num_ * b.num_);
  Polynomial g1 = gcd(a.num_, b.den_);
  Polynomial g2 = gcd(b.num_, a.den_);
  Expr out;
  out.num_ = *a.num_.divide_exact(g1) * *b.num_.divide_exact(g2);
  out.den_ = *a.den_.divide_exact(g2) * *b.den_.divide_exact(g1);
  out.canonicalize_reduced();
  return out;
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero expression");
  if (b.is_constant()) return Expr(a.num_.scaled(1 / b.constant_value()), a.den_);
  Expr inverse;
  inverse.num_ = b.den_;
  inverse.den_ = b.num_;
  inverse.canonicalize_reduced();
  return a * inverse;
}

Expr Expr::pow(int k) const {
  if (k < 0) return (Expr(1) / *this).pow(-k);
  Expr out;
  // Powers of a reduced fraction stay reduced, and a monic denominator stays monic.
  out.num_ = num_.pow(static_cast<unsigned>(k));
  out.den_ = den_.pow(static_cast<unsigned>(k));
  return out;
}

std::string Expr::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

Expr substitute_poly(const Polynomial& p, const Bindings& bindings) {
  Expr out;
  std::map<std::pair<Var, unsigned>, Expr> powers;
  for (const auto& [m, c] : p.terms()) {
    Expr term(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        term *= Expr(Polynomial(Monomial(v, e), 1));
        continue;
      }
      auto key = std::pair{v, e};
      auto pw = powers.find(key);
      if (pw == powers.end()) pw = powers.emplace(key, it->second.pow(static_cast<int>(e))).first;
      term *= pw->second;
    }
    out += term;
  }
  return out;
}

template <class Value, class Lookup>
Value eval_poly(const Polynomial& p, Lookup&& lookup, Value* magnitude) {
  Value sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Value term = c;
    for (const auto& [v, e] : m.factors()) {
      const Value& x = lookup(v);
      for (unsigned i = 0; i < e; ++i) term *= x;
    }
    sum += term;
    if (magnitude) *magnitude += abs(term);
  }
  return sum;
}

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
  if (bindings.empty()) return e;
  Expr num = substitute_poly(e.numerator(), bindings);
  Expr den = substitute_poly(e.denominator(), bindings);
  if (den.is_zero())
    throw Error(ErrorCode::DivisionByZero, "substitution makes the denominator of " + e.to_string() + " vanish");
  return num / den;
}

Rational eval_exact(const Expr& e, const std::map<Var, Rational>& bindings) {
  auto lookup = [&](Var v) -> const Rational& {
    auto it = bindings.find(v);
    if (it == bindings.end()) throw Error(ErrorCode::UnknownSymbol, "unbound symbol: " + v.name());
    return it->second;
  };
  Rational den = eval_poly<Rational>(e.denominator(), lookup, nullptr);
  if (sgn(den) == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes at the given point");
  return eval_poly<Rational>(e.numerator(), lookup, nullptr) / den;
}

double eval_numeric(const Expr& e, const NumericBindings& bindings, double zero_tolerance) {
  std::map<Var, Rational> exact;
  for (const auto& v : e.vars()) {
    auto it = bindings.find(v);
    if (it == bindings.end()) throw Error(ErrorCode::UnknownSymbol, "unbound symbol: " + v.name());
    if (!std::isfinite(it->second)) throw Error(ErrorCode::Domain, "non-finite binding for " + v.name());
    exact.emplace(v, Rational(it->second));
  }
  auto lookup = [&](Var v) -> const Rational& { return exact.at(v); };
  Rational magnitude = 0;
  Rational den = eval_poly<Rational>(e.denominator(), lookup, &magnitude);
  if (sgn(den) == 0 || abs(den) <= Rational(zero_tolerance) * magnitude)
    throw Error(ErrorCode::DivisionByZero, "denominator of " + e.to_string() + " is numerically zero");
  Rational value = eval_poly<Rational>(e.numerator(), lookup, nullptr) / den;
  return value.get_d();
}

namespace {

Polynomial derive_poly(const Polynomial& p, FrameIndex dir, const SymbolTable& table) {
  Polynomial out;
  for (Var v : p.vars()) {
    std::optional<Var> d = table.derivative(dir, v);
    if (!d) continue;
    out += p.partial(v) * Polynomial(*d);
  }
  return out;
}

}  // namespace

Expr derivative(const Expr& e, FrameIndex dir, const SymbolTable& table) {
  const Polynomial& p = e.numerator();
  const Polynomial& q = e.denominator();
  Polynomial dp = derive_poly(p, dir, table);
  if (q.is_constant()) return Expr(dp);
  Polynomial dq = derive_poly(q, dir, table);
  return Expr(dp * q - p * dq, q * q);
}

bool has_formal_derivatives(const Expr& e, const SymbolTable& table) {
  for (Var v : e.vars()) {
    const Symbol* s = table.find(v);
    if (s && s->kind == SymbolKind::FormalDerivative) return true;
  }
  return false;
}

}  // namespace starricci
