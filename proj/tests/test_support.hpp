#pragma once

// Test-only helpers: an exact evaluator that walks the parse tree directly
// (never building canonical forms) and random generators for property tests.

#include <map>
#include <random>
#include <string>

#include "starricci/error.hpp"
#include "starricci/expr.hpp"
#include "starricci/syntax.hpp"

namespace starricci::testing {

inline Rational oracle_eval(const SyntaxNode& n, const std::map<std::string, Rational>& at) {
  using K = SyntaxNode::Kind;
  auto arg = [&](std::size_t i) { return oracle_eval(n.children.at(i), at); };
  switch (n.kind) {
    case K::Number:
      return Rational(mpz_class(n.text, 10));
    case K::Identifier:
      return at.at(n.text);
    case K::Negate:
      return -arg(0);
    case K::Add:
      return arg(0) + arg(1);
    case K::Sub:
      return arg(0) - arg(1);
    case K::Mul:
      return arg(0) * arg(1);
    case K::Div: {
      Rational d = arg(1);
      if (d == 0) throw Error(ErrorCode::DivisionByZero, "oracle division by zero");
      return arg(0) / d;
    }
    case K::Pow: {
      Rational base = arg(0);
      long k = arg(1).get_num().get_si();
      Rational out = 1;
      for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
      return k < 0 ? Rational(1 / out) : out;
    }
    case K::Call:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "oracle cannot evaluate calls");
}

inline Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random polynomial text over the given names with small integer data.
inline std::string random_poly_text(std::mt19937_64& rng, const std::vector<std::string>& names, int terms = 3,
                                    int max_exp = 2) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::string out;
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    out += (t ? " + " : "") + std::string("(") + std::to_string(c) + ")";
    for (const auto& n : names) {
      int e = expo(rng);
      if (e > 0) out += "*" + n + "^" + std::to_string(e);
    }
  }
  // Nonzero constant keeps random denominators away from the zero polynomial.
  return "(" + out + " + " + std::to_string(1 + (coeff(rng) + 5)) + ")";
}

}  // namespace starricci::testing
