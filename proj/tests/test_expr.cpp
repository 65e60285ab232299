#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "starricci/error.hpp"
#include "starricci/expr.hpp"
#include "starricci/quadratic.hpp"
#include "starricci/syntax.hpp"
#include "test_support.hpp"

using namespace starricci;
using starricci::testing::oracle_eval;
using starricci::testing::random_poly_text;
using starricci::testing::random_rational;

namespace {

SymbolTable scalar_table() {
  SymbolTable t;
  for (const char* f : {"alpha", "beta", "gamma", "delta", "mu", "lambda", "nu"}) t.declare_function(f);
  for (const char* k : {"c", "a", "v", "x", "y", "z", "w"}) t.declare_constant(k);
  return t;
}

const SymbolTable& table() {
  static const SymbolTable t = scalar_table();
  return t;
}

Expr P(const char* text) { return parse_expr(text, table()); }

}  // namespace

// ---------------------------------------------------------------- parse_expr

TEST(ParseExpr, ZeroHasUniqueRepresentation) {
  EXPECT_TRUE(P("0").is_zero());
  EXPECT_EQ(P("0"), Expr());
  EXPECT_EQ(P("x - x"), Expr());
  EXPECT_EQ(P("0/(x+1)"), Expr());
  EXPECT_EQ(P("0").to_string(), "0");
}

TEST(ParseExpr, HopfQuadraticIsDegreeTwoInUnknown) {
  Expr e = P("2*a*v^2 + 5*c*v - 2*a*c");
  ASSERT_TRUE(e.is_polynomial());
  EXPECT_EQ(e.numerator().degree_in(Var("v")), 2U);
  EXPECT_EQ(e.numerator().degree_in(Var("a")), 1U);
}

TEST(ParseExpr, CancelsCommonFactor) {
  const char* text = "(x^2-1)/(x-1)";
  Expr e = P(text);
  EXPECT_EQ(e, P("x+1"));
  EXPECT_TRUE(e.is_polynomial());
  // Independent oracle: evaluate the unsimplified tree at random points.
  std::mt19937_64 rng(7);
  SyntaxNode tree = parse_syntax(text);
  for (int i = 0; i < 5; ++i) {
    Rational at = random_rational(rng);
    if (at == 1) at = 2;
    Rational want = oracle_eval(tree, {{"x", at}});
    EXPECT_EQ(eval_exact(e, {{Var("x"), at}}), want);
  }
}

TEST(ParseExpr, PrecedenceAndUnaryMinus) {
  EXPECT_EQ(P("-x^2"), -(P("x") * P("x")));
  EXPECT_EQ(P("2+3*4"), Expr(14));
  EXPECT_EQ(P("2^3^1"), Expr(8));
  EXPECT_EQ(P("x/2/2"), P("x/4"));
  EXPECT_EQ(P("x^-1"), Expr(1) / P("x"));
  EXPECT_EQ(P("0.25*x"), P("x/4"));
}

TEST(ParseExpr, FormalDerivative) {
  EXPECT_EQ(P("D(e1, beta)"), Expr(Var("D(e1,beta)")));
  EXPECT_TRUE(P("D(e2, c)").is_zero());
  EXPECT_EQ(P("D(e3, beta*mu)"), P("mu*D(e3,beta) + beta*D(e3,mu)"));
  EXPECT_THROW(P("D(e3, D(e1, beta))"), Error);
  EXPECT_THROW(P("D(e4, beta)"), ParseError);
}

TEST(ParseExpr, Errors) {
  try {
    P("x + * y");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  try {
    P("x + unknown_thing");
    FAIL() << "expected unknown identifier";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSymbol);
  }
  EXPECT_THROW(P("(x + 1"), ParseError);
  EXPECT_THROW(P("x^y"), ParseError);
  EXPECT_THROW(P("sin(x)"), ParseError);
  EXPECT_THROW(P("1/(x-x)"), Error);
  EXPECT_THROW(P(""), ParseError);
}

TEST(ParseExpr, DeclaringModeAddsConstants) {
  SymbolTable t;
  Expr e = parse_expr_declaring("l*n_ - (a/2)*(l+n_) - c/4", t);
  EXPECT_NE(t.find("n_"), nullptr);
  EXPECT_EQ(t.find("n_")->kind, SymbolKind::Constant);
  EXPECT_EQ(e.vars().size(), 4U);
}

// ------------------------------------------------------------------ simplify

TEST(Simplify, TrivialCancellations) {
  EXPECT_EQ(simplify(P("-1 + 1")), Expr());
  EXPECT_EQ(simplify(P("beta*mu - mu*beta")), Expr());
}

TEST(Simplify, BoundaryDiscriminantVanishes) {
  Expr d = P("25*c^2 + 16*a^2*c");
  Expr at = substitute(d, {{Var("c"), Expr(-4)}, {Var("a"), P("5/2")}});
  EXPECT_EQ(simplify(at), Expr());
}

TEST(Simplify, Idempotent) {
  Expr e = P("(x*y + y^2)/(x^2 - y^2) + 1/(x+y)");
  EXPECT_EQ(simplify(simplify(e)), simplify(e));
  EXPECT_EQ(P("(x*y + y^2)/(x^2 - y^2)"), P("y/(x - y)"));
  EXPECT_EQ(e, P("(x*y + y^2 + x - y)/(x^2 - y^2)"));
}

// ---------------------------------------------------------------- substitute

TEST(Substitute, DeltaToZero) {
  Expr e = P("c + gamma*mu - delta^2");
  EXPECT_EQ(substitute(e, {{Var("delta"), Expr()}}), P("c + gamma*mu"));
}

TEST(Substitute, HopfRelationBecomesQuadratic) {
  Expr residual = P("lambda*nu - (alpha/2)*(lambda+nu) - c/4");
  Expr after = substitute(residual, {{Var("lambda"), P("-c/nu")}});
  Expr target = P("2*alpha*nu^2 + 5*c*nu - 2*alpha*c");
  Expr ratio = Expr(after.numerator()) / target;
  ASSERT_TRUE(ratio.is_constant());
  EXPECT_NE(ratio.constant_value(), 0);
  EXPECT_EQ(after.denominator(), Polynomial(Var("nu")));
}

TEST(Substitute, IdentityBindings) {
  Expr e = P("(alpha + beta^2)/(c + 1)");
  EXPECT_EQ(substitute(e, {{Var("alpha"), Expr(Var("alpha"))}, {Var("c"), Expr(Var("c"))}}), e);
  EXPECT_EQ(substitute(e, {}), e);
}

TEST(Substitute, Simultaneous) {
  EXPECT_EQ(substitute(P("x - y"), {{Var("x"), P("y")}, {Var("y"), P("x")}}), P("y - x"));
}

TEST(Substitute, DenominatorVanishes) {
  try {
    (void)substitute(P("1/(x - y)"), {{Var("x"), P("y")}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

// -------------------------------------------------------------- eval_numeric

TEST(EvalNumeric, HorosphereResidual) {
  Expr e = P("lambda*nu - (alpha/2)*(lambda+nu) - c/4");
  double v = eval_numeric(e, {{Var("alpha"), 2}, {Var("lambda"), 1}, {Var("nu"), 1}, {Var("c"), -4}});
  EXPECT_EQ(v, 0.0);
}

TEST(EvalNumeric, Constant) { EXPECT_EQ(eval_numeric(P("c"), {{Var("c"), 4}}), 4.0); }

TEST(EvalNumeric, SatisfiedHopfBranch) {
  Expr e = P("lambda*(c + lambda*nu)");
  EXPECT_EQ(eval_numeric(e, {{Var("lambda"), 1}, {Var("nu"), -4}, {Var("c"), 4}}), 0.0);
}

TEST(EvalNumeric, Errors) {
  try {
    (void)eval_numeric(P("x + y"), {{Var("x"), 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSymbol);
  }
  try {
    (void)eval_numeric(P("1/(x - 1)"), {{Var("x"), 1.0 + 1e-17}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

// ----------------------------------------------------------- solve_quadratic

TEST(SolveQuadratic, HopfQuadraticDiscriminant) {
  Expr e = P("2*alpha*nu^2 + 5*c*nu - 2*alpha*c");
  QuadraticSolution s = solve_quadratic(e, Var("nu"));
  ASSERT_EQ(s.kind, QuadraticSolution::Kind::Quadratic);
  // Hand oracle: (5c)^2 - 4(2 alpha)(-2 alpha c).
  Expr hand = P("5*c") * P("5*c") - Expr(4) * P("2*alpha") * P("-2*alpha*c");
  EXPECT_EQ(s.discriminant, hand);
  EXPECT_EQ(s.discriminant, P("25*c^2 + 16*alpha^2*c"));
  ASSERT_EQ(s.roots.size(), 2U);
  for (const auto& r : s.roots) EXPECT_TRUE(verify_root(s, r));
}

TEST(SolveQuadratic, ProjectiveCaseAlwaysSolvable) {
  QuadraticSolution s = solve_quadratic(P("2*alpha*nu^2 + 20*nu - 8*alpha"), Var("nu"));
  EXPECT_EQ(s.discriminant, P("400 + 64*alpha^2"));
  EXPECT_EQ(sign_certificate(s.discriminant), SignCertificate::Positive);
}

TEST(SolveQuadratic, HyperbolicCaseBound) {
  QuadraticSolution s = solve_quadratic(P("2*alpha*nu^2 - 20*nu + 8*alpha"), Var("nu"));
  EXPECT_EQ(s.discriminant, P("400 - 64*alpha^2"));
  EXPECT_EQ(sign_certificate(s.discriminant), SignCertificate::None);
  auto bound = square_bound(s.discriminant);
  ASSERT_TRUE(bound.has_value());
  EXPECT_EQ(bound->first, Var("alpha"));
  EXPECT_EQ(bound->second, Rational(25, 4));
}

TEST(SolveQuadratic, LinearAndDegenerate) {
  QuadraticSolution lin = solve_quadratic(P("5*c*nu"), Var("nu"));
  EXPECT_EQ(lin.kind, QuadraticSolution::Kind::Linear);
  ASSERT_EQ(lin.roots.size(), 1U);
  EXPECT_TRUE(lin.roots[0].rational.is_zero());
  EXPECT_TRUE(verify_root(lin, lin.roots[0]));

  QuadraticSolution id = solve_quadratic(Expr(), Var("nu"));
  EXPECT_EQ(id.kind, QuadraticSolution::Kind::Identity);
  EXPECT_EQ(id.solvability_condition(), "always");

  try {
    (void)solve_quadratic(P("c + 1"), Var("nu"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Inconsistent);
  }
  EXPECT_THROW((void)solve_quadratic(P("nu^3"), Var("nu")), Error);
}

TEST(SolveQuadratic, DoubleRoot) {
  QuadraticSolution s = solve_quadratic(P("(nu - 2)^2"), Var("nu"));
  EXPECT_TRUE(s.discriminant.is_zero());
  ASSERT_EQ(s.roots.size(), 1U);
  EXPECT_EQ(s.roots[0].rational, Expr(2));
}

// ---------------------------------------------------------------- properties

namespace {

std::vector<std::string> kVars = {"x", "y", "z"};

std::map<Var, double> random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::map<Var, double> at;
  for (const auto& n : kVars) at[Var(n)] = u(rng);
  return at;
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

TEST(ExprProperty, CanonicalFormIgnoresAssociationAndOrder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> factors;
    for (int i = 0; i < 4; ++i) factors.push_back(random_poly_text(rng, kVars, 2, 1));
    std::string num1 = factors[0] + "*(" + factors[1] + "*" + factors[2] + ")";
    std::string num2 = "(" + factors[2] + "*" + factors[0] + ")*" + factors[1];
    try {
      Expr a = P((num1 + "/(" + factors[3] + "*" + factors[1] + ")").c_str());
      Expr b = P(("(" + num2 + ")/" + factors[1] + "/" + factors[3]).c_str());
      EXPECT_EQ(a, b);
      EXPECT_EQ(a.to_string(), b.to_string());
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
  }
}

TEST(ExprProperty, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 1000) {
    Expr a, b;
    try {
      a = P((random_poly_text(rng, kVars) + "/" + random_poly_text(rng, kVars, 2, 1)).c_str());
      b = P((random_poly_text(rng, kVars) + "/" + random_poly_text(rng, kVars, 2, 1)).c_str());
    } catch (const Error&) {
      continue;
    }
    auto at = random_point(rng);
    try {
      double va = eval_numeric(a, at);
      double vb = eval_numeric(b, at);
      if (std::abs(vb) < 1e-6) continue;
      EXPECT_TRUE(close(eval_numeric(a + b, at), va + vb, 1e-12));
      EXPECT_TRUE(close(eval_numeric(a - b, at), va - vb, 1e-12));
      EXPECT_TRUE(close(eval_numeric(a * b, at), va * vb, 1e-12));
      EXPECT_TRUE(close(eval_numeric(a / b, at), va / vb, 1e-12));
      ++checked;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
  }
}

TEST(ExprProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    try {
      Expr e = P((random_poly_text(rng, kVars) + "/" + random_poly_text(rng, kVars, 2, 2)).c_str());
      std::string text = e.to_string();
      Expr back = P(text.c_str());
      EXPECT_EQ(back, e) << text;
      EXPECT_EQ(back.to_string(), text);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
  }
}

TEST(ExprProperty, SubstitutionComposes) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    Expr e = P(random_poly_text(rng, {"x", "y", "z"}).c_str());
    // m1: x -> poly(y), m2: y -> poly(w), z -> poly(w); m2 after m1.
    Expr px = P(random_poly_text(rng, {"y"}, 2, 2).c_str());
    Expr py = P(random_poly_text(rng, {"w"}, 2, 1).c_str());
    Expr pz = P(random_poly_text(rng, {"w"}, 2, 1).c_str());
    Bindings m1 = {{Var("x"), px}};
    Bindings m2 = {{Var("y"), py}, {Var("z"), pz}};
    Bindings composed = {{Var("x"), substitute(px, m2)}, {Var("y"), py}, {Var("z"), pz}};
    EXPECT_EQ(substitute(substitute(e, m1), m2), substitute(e, composed));
  }
}

TEST(ExprProperty, QuadraticRootsBackSubstitute) {
  std::mt19937_64 rng(15);
  int checked = 0;
  while (checked < 200) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    if (a == 0) continue;
    Expr e = Expr(a) * P("nu^2") + Expr(b) * P("nu") + Expr(c);
    QuadraticSolution s = solve_quadratic(e, Var("nu"));
    for (const auto& r : s.roots) EXPECT_TRUE(verify_root(s, r));
    double disc = s.discriminant.constant_value().get_d();
    if (disc < 0) continue;
    for (const auto& r : s.roots) {
      double x = r.rational.constant_value().get_d() + r.radical.constant_value().get_d() * std::sqrt(disc);
      double residual = eval_numeric(e, {{Var("nu"), x}});
      EXPECT_LT(std::abs(residual), 1e-9);
    }
    ++checked;
  }
}
