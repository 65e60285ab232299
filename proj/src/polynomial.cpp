#include "starricci/polynomial.hpp"

#include <algorithm>
#include <cstdint>

#include "starricci/error.hpp"

namespace starricci {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, unsigned exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

unsigned Monomial::exponent(Var v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

Monomial Monomial::without(Var v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    out.factors_.push_back(f);
    out.degree_ += f.second;
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  for (const auto& [v, e] : factors_) {
    unsigned d = other.exponent(v);
    if (e > d) out.factors_.emplace_back(v, e - d);
  }
  for (const auto& f : out.factors_) out.degree_ += f.second;
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fb[i].first < fa[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
  }
  return i == fa.size() && i < fb.size();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(Var v) { terms_.emplace(Monomial(v), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) {
  if (sgn(coeff) != 0) terms_.emplace(m, coeff);
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "polynomial is not constant: " + to_string());
  return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

unsigned Polynomial::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::set<Var> Polynomial::vars() const {
  std::set<Var> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  out += o;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  out -= o;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& k) const {
  if (sgn(k) == 0) return {};
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c *= k;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(Var v) const {
  std::map<unsigned, Polynomial> out;
  for (const auto& [m, c] : terms_) out[m.exponent(v)].add_term(m.without(v), c);
  return out;
}

Polynomial Polynomial::from_coefficients(Var v, const std::map<unsigned, Polynomial>& coeffs) {
  Polynomial out;
  for (const auto& [k, p] : coeffs) {
    Monomial shift(v, k);
    for (const auto& [m, c] : p.terms_) out.add_term(m * shift, c);
  }
  return out;
}

Polynomial Polynomial::partial(Var v) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.without(v) * Monomial(v, e - 1), c * e);
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (divisor.is_constant()) return scaled(1 / divisor.constant_value());
  Polynomial remainder = *this;
  Polynomial quotient;
  const Monomial& lead = divisor.leading_monomial();
  const Rational& lead_coeff = divisor.leading_coefficient();
  while (!remainder.is_zero()) {
    const Monomial& rm = remainder.leading_monomial();
    if (!lead.divides(rm)) return std::nullopt;
    Polynomial step(rm / lead, remainder.leading_coefficient() / lead_coeff);
    quotient += step;
    remainder -= divisor * step;
  }
  return quotient;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading_coefficient());
}

Polynomial Polynomial::integer_primitive() const {
  if (is_zero()) return {};
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    den_lcm = lcm(den_lcm, c.get_den());
    num_gcd = gcd(num_gcd, c.get_num());
  }
  Rational k(den_lcm, num_gcd);
  k.canonicalize();
  if (sgn(leading_coefficient()) < 0) k = -k;
  return scaled(k);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (!first) {
      out += sgn(c) < 0 ? " - " : " + ";
      c = abs(c);
    }
    if (it->first.empty()) {
      out += rational_to_string(c);
    } else if (c == 1) {
      out += it->first.to_string();
    } else if (c == -1) {
      out += "-" + it->first.to_string();
    } else {
      out += rational_to_string(c) + "*" + it->first.to_string();
    }
    first = false;
  }
  return out;
}

// --------------------------------------------------------------------- gcd

namespace {

Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial g;
  for (const auto& [k, coeff] : p.coefficients_in(v)) {
    g = gcd(g, coeff);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, Var v) {
  if (p.is_zero()) return p;
  return *p.divide_exact(content_in(p, v));
}

}  // namespace

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var v) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "pseudo-remainder by zero");
  const unsigned db = b.degree_in(v);
  const Polynomial lb = b.coefficients_in(v).at(db);
  Polynomial r = a;
  int pending = static_cast<int>(a.degree_in(v)) - static_cast<int>(db) + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const unsigned dr = r.degree_in(v);
    Polynomial lr = r.coefficients_in(v).at(dr);
    r = lb * r - lr * Polynomial(Monomial(v, dr - db), 1) * b;
    --pending;
  }
  if (pending > 0) r = r * lb.pow(static_cast<unsigned>(pending));
  return r;
}

namespace {

Polynomial specialize(const Polynomial& p, const std::map<Var, Rational>& at) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Rational k = c;
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = at.find(v);
      if (it == at.end()) {
        rest = rest * Monomial(v, e);
        continue;
      }
      for (unsigned i = 0; i < e; ++i) k *= it->second;
    }
    out += Polynomial(rest, k);
  }
  return out;
}

// Euclid over Q for polynomials in the single variable x.
Polynomial univariate_gcd(Polynomial a, Polynomial b, Var x) {
  if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_remainder(a, b, x).integer_primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Sound coprimality test in x: if some specialization of the other variables
// keeps both leading coefficients nonzero and the specialized gcd is
// constant, the true gcd has degree 0 in x.
bool coprime_in(const Polynomial& a, const Polynomial& b, Var x, const std::set<Var>& others) {
  const Polynomial la = a.coefficients_in(x).rbegin()->second;
  const Polynomial lb = b.coefficients_in(x).rbegin()->second;
  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::map<Var, Rational> at;
    for (Var v : others) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      at.emplace(v, Rational(static_cast<long>((state >> 33) % 97) - 48));
    }
    if (specialize(la, at).is_zero() || specialize(lb, at).is_zero()) continue;
    return univariate_gcd(specialize(a, at), specialize(b, at), x).is_constant();
  }
  return false;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);

  std::set<Var> vars = a.vars();
  vars.merge(b.vars());
  const Var x = *vars.begin();

  if (a.degree_in(x) == 0) return gcd(a, content_in(b, x));
  if (b.degree_in(x) == 0) return gcd(content_in(a, x), b);

  std::set<Var> others = vars;
  others.erase(x);
  if (coprime_in(a, b, x, others)) return gcd(content_in(a, x), content_in(b, x));

  const Polynomial ca = content_in(a, x);
  const Polynomial cb = content_in(b, x);
  const Polynomial common_content = gcd(ca, cb);

  Polynomial p = (*a.divide_exact(ca)).integer_primitive();
  Polynomial q = (*b.divide_exact(cb)).integer_primitive();
  if (p.degree_in(x) < q.degree_in(x)) std::swap(p, q);
  while (!q.is_zero()) {
    Polynomial r = pseudo_remainder(p, q, x);
    p = std::move(q);
    if (r.is_zero()) break;
    if (r.degree_in(x) == 0) {
      p = Polynomial(1);
      break;
    }
    q = primitive_part_in(r, x).integer_primitive();
  }
  if (p.degree_in(x) == 0) p = Polynomial(1);
  return (common_content * primitive_part_in(p, x)).monic();
}

}  // namespace starricci
