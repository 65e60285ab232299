#include "starricci/proof.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "starricci/conditions.hpp"
#include "starricci/error.hpp"
#include "starricci/quadratic.hpp"
#include "starricci/syntax.hpp"

namespace starricci {

namespace {

using enum FrameIndex;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ProofFailure, what); }

void expect_exact(const Expr& got, const Expr& want, const std::string& what) {
  if (got != want)
    fail(what + ": expected " + want.to_string() + ", obtained " + got.to_string() + " (difference " +
         (got - want).to_string() + ")");
}

void expect_equation(const Expr& got, const Expr& want, const std::string& what) {
  if (normalize_equation(got) != normalize_equation(want))
    fail(what + ": expected " + want.to_string() + " = 0, obtained " + got.to_string() + " = 0");
}

std::string eq0(const Expr& e) { return e.to_string() + " = 0"; }

std::string join(const std::vector<Expr>& v) {
  std::string out;
  for (const auto& e : v) out += (out.empty() ? "" : ", ") + e.to_string();
  return out.empty() ? "nothing" : out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

std::string Fact::to_string() const { return expr.to_string() + (nonzero ? " != 0" : " = 0"); }

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Extract:
      return "extract";
    case StepKind::Cancel:
      return "cancel";
    case StepKind::CaseSplit:
      return "case-split";
    case StepKind::Assume:
      return "assume";
    case StepKind::Substitute:
      return "substitute";
    case StepKind::Contradiction:
      return "contradiction";
    case StepKind::Conclude:
      return "conclude";
    case StepKind::Numeric:
      return "numeric";
  }
  return "unknown";
}

std::string proof_status_name(ProofStatus s) {
  switch (s) {
    case ProofStatus::Contradiction:
      return "contradiction";
    case ProofStatus::Reduced:
      return "reduced";
    case ProofStatus::Verified:
      return "verified";
  }
  return "unknown";
}

Expr normalize_equation(const Expr& e) { return Expr(e.numerator().monic()); }

Cancellation cancel_nonzero(const Expr& eq, const std::vector<Expr>& nonzero) {
  Cancellation out;
  Polynomial p = eq.numerator();
  if (p.is_zero()) return {Expr(), {}};
  for (const Expr& f : nonzero) {
    const Polynomial& fp = f.numerator();
    if (fp.is_zero() || fp.is_constant()) continue;
    while (!p.is_constant()) {
      auto q = p.divide_exact(fp);
      if (!q) break;
      p = std::move(*q);
      out.removed.push_back(f);
    }
  }
  out.remainder = Expr(p.monic());
  return out;
}

Cancellation conclude_vanishing(const Expr& eq, const std::vector<Expr>& nonzero, Var target) {
  Cancellation c = cancel_nonzero(eq, nonzero);
  const Polynomial& r = c.remainder.numerator();
  bool power = r.terms().size() == 1 && !r.is_constant();
  if (power)
    for (const auto& [v, e] : r.leading_monomial().factors()) power = power && v == target;
  if (!power)
    fail("cannot read " + eq0(eq) + " as " + target.name() + " = 0 using only " + join(nonzero) +
         " != 0; remainder " + c.remainder.to_string());
  return c;
}

Expr hopf_relation(const FrameContext& hopf) {
  if (hopf.kind() != FrameKind::Hopf) throw Error(ErrorCode::InvalidArgument, "Hopf relation needs the Hopf context");
  const Expr xi = codazzi_residual(hopf, E1, E2)[E3];
  if (has_formal_derivatives(xi, hopf.symbols()))
    fail("xi-component of the Codazzi residual carries derivative terms: " + xi.to_string());
  return Expr(Rational(-1, 2)) * xi;
}

// ------------------------------------------------------------- non-Hopf

ProofTrace nonhopf_contradiction() {
  const FrameContext ctx = build_nonhopf_context();
  const ConditionReport par = parallel_equations(ctx, star_ricci_closed(ctx), "S*");
  auto P = [&](std::string_view s) { return parse_expr(s, ctx.symbols()); };
  const Expr beta = ctx.scalar(sym::beta), c = ctx.scalar(sym::c), delta = ctx.scalar(sym::delta),
             mu = ctx.scalar(sym::mu);

  ProofTrace t;
  t.name = "nonhopf";
  t.hypotheses = {Fact::nonvanishing(beta), Fact::nonvanishing(c)};
  std::vector<Fact> in_force = t.hypotheses;

  const Expr e1 = par.find(E3, E3, E3)->equation;
  expect_exact(e1, P("beta^2*delta"), "step 1");
  conclude_vanishing(e1, {beta, c}, Var(sym::delta));
  t.steps.push_back({StepKind::Cancel, "step 1", "parallel(e3,e3,e3)", e1,
                     "g((nabla_xi S*)xi, xi); beta != 0 cancels", "delta = 0", in_force, {}});
  in_force.push_back(Fact::vanishes(delta));

  const Expr e2 = substitute(par.find(E2, E3, E3)->equation, {{Var(sym::delta), Expr()}});
  expect_exact(e2, P("beta*mu^2"), "step 2");
  conclude_vanishing(e2, {beta, c}, Var(sym::mu));
  t.steps.push_back({StepKind::Cancel, "step 2", "parallel(e2,e3,e3)", e2,
                     "g((nabla_phiU S*)xi, xi) with delta = 0; beta != 0 cancels", "mu = 0", in_force, {}});
  in_force.push_back(Fact::vanishes(mu));

  const Expr e3 = substitute(par.find(E3, E2, E3)->equation, {{Var(sym::delta), Expr()}, {Var(sym::mu), Expr()}});
  expect_exact(e3, P("-c*beta"), "step 3");
  conclude_vanishing(e3, {beta}, Var(sym::c));
  t.steps.push_back({StepKind::Contradiction, "step 3", "parallel(e3,e2,e3)", e3,
                     "g((nabla_xi S*)phiU, xi) with delta = mu = 0; beta != 0 cancels", "c = 0 contradicts c != 0",
                     in_force, {}});

  t.status = ProofStatus::Contradiction;
  t.verdict = "no point with beta != 0: the non-Hopf part is empty";
  return t;
}

// ----------------------------------------------------------------- Hopf

ProofTrace hopf_branch() {
  const FrameContext ctx = build_hopf_context();
  const ConditionReport par = parallel_equations(ctx, star_ricci_closed(ctx), "S*");
  auto P = [&](std::string_view s) { return parse_expr(s, ctx.symbols()); };
  const Expr lambda = ctx.scalar(sym::lambda), nu = ctx.scalar(sym::nu), c = ctx.scalar(sym::c);
  const Expr product = P("c + lambda*nu");

  ProofTrace t;
  t.name = "hopf";
  t.hypotheses = {Fact::nonvanishing(c)};
  std::vector<Fact> in_force = t.hypotheses;

  const Expr e1 = par.find(E1, E3, E2)->equation;
  expect_equation(e1, P("lambda*(c + lambda*nu)"), "(i)");
  t.steps.push_back({StepKind::CaseSplit, "(i)", "parallel(e1,e3,e2)", e1, "g((nabla_W S*)xi, phiW) = 0",
                     "lambda = 0 or c + lambda*nu = 0", in_force, {}});

  in_force.push_back(Fact::nonvanishing(product));
  t.steps.push_back({StepKind::Assume, "(ii)", "", product, "case c + lambda*nu != 0", "c + lambda*nu != 0", in_force,
                     {}});

  conclude_vanishing(e1, {c, product}, Var(sym::lambda));
  t.steps.push_back(
      {StepKind::Cancel, "(ii.a)", "parallel(e1,e3,e2)", e1, "c + lambda*nu != 0 cancels", "lambda = 0", in_force, {}});
  in_force.push_back(Fact::vanishes(lambda));

  const Expr e2_raw = par.find(E2, E3, E1)->equation;
  expect_equation(e2_raw, P("nu*(c + lambda*nu)"), "(ii.b)");
  const Bindings lambda0{{Var(sym::lambda), Expr()}};
  const Expr e2 = substitute(e2_raw, lambda0);
  conclude_vanishing(e2, {c, substitute(product, lambda0)}, Var(sym::nu));
  t.steps.push_back({StepKind::Cancel, "(ii.b)", "parallel(e2,e3,e1)", e2,
                     "g((nabla_phiW S*)xi, W) = 0 with lambda = 0; c != 0 cancels", "nu = 0", in_force, {}});
  in_force.push_back(Fact::vanishes(nu));

  const Expr rel = hopf_relation(ctx);
  expect_exact(rel, P("lambda*nu - alpha/2*(lambda + nu) - c/4"), "Hopf relation");
  const Expr e3 = substitute(rel, {{Var(sym::lambda), Expr()}, {Var(sym::nu), Expr()}});
  expect_exact(e3, P("-c/4"), "(ii.c)");
  conclude_vanishing(e3, {}, Var(sym::c));
  t.steps.push_back({StepKind::Contradiction, "(ii.c)", "codazzi(e1,e2,e3)", e3,
                     "Hopf relation lambda*nu = (alpha/2)(lambda + nu) + c/4 at lambda = nu = 0",
                     "c = 0 contradicts c != 0, so c + lambda*nu != 0 is impossible", in_force, {}});

  in_force = t.hypotheses;
  in_force.push_back(Fact::vanishes(product));
  // lambda = 0 (or nu = 0) would turn c + lambda*nu = 0 into c = 0.
  for (Var v : {Var(sym::lambda), Var(sym::nu)})
    expect_exact(substitute(product, {{v, Expr()}}), c, "(iii)");
  t.steps.push_back({StepKind::Conclude, "(iii)", "", product, "only the case c + lambda*nu = 0 remains; c != 0",
                     "lambda*nu = -c != 0, so lambda != 0 and nu != 0", in_force, {}});

  t.outcome = {Fact::vanishes(product), Fact::nonvanishing(lambda), Fact::nonvanishing(nu)};
  t.status = ProofStatus::Reduced;
  t.verdict = "c + lambda*nu = 0 with lambda != 0 and nu != 0";
  return t;
}

// ------------------------------------------------------------ quadratic

ProofTrace quadratic_analysis(const ModelSpace& space) {
  const FrameContext ctx = build_hopf_context();
  auto P = [&](std::string_view s) { return parse_expr(s, ctx.symbols()); };
  const Expr lambda = ctx.scalar(sym::lambda), nu = ctx.scalar(sym::nu), c = ctx.scalar(sym::c),
             alpha = ctx.scalar(sym::alpha);
  const Bindings at_c{{Var(sym::c), Expr(space.c)}};

  ProofTrace t;
  t.name = "quadratic " + space.name;
  t.hypotheses = {Fact::vanishes(c - Expr(space.c)), Fact::vanishes(P("c + lambda*nu")), Fact::nonvanishing(lambda),
                  Fact::nonvanishing(nu)};
  const std::vector<Fact>& in_force = t.hypotheses;

  const Expr sub = substitute(hopf_relation(ctx), {{Var(sym::lambda), -c / nu}});
  const Expr target = P("2*alpha*nu^2 + 5*c*nu - 2*alpha*c");
  const Expr factor = sub / target;
  const auto fvars = factor.numerator().vars();
  const auto dvars = factor.denominator().vars();
  if (factor.is_zero() || std::ranges::any_of(fvars, [](Var v) { return v != Var(sym::nu); }) ||
      std::ranges::any_of(dvars, [](Var v) { return v != Var(sym::nu); }))
    fail("Hopf relation at lambda = -c/nu is not proportional to " + target.to_string() + ": " + sub.to_string());
  expect_exact(factor * target, sub, "proportionality");
  t.steps.push_back({StepKind::Substitute, "substitute", "", sub, "lambda = -c/nu in the Hopf relation",
                     "equals (" + factor.to_string() + ") * (" + target.to_string() + ")", in_force, {}});
  t.steps.push_back({StepKind::Conclude, "clear", "", target, "multiply by the nonzero " + (Expr(1) / factor).to_string(),
                     eq0(target), in_force, {}});

  const QuadraticSolution q = solve_quadratic(target, Var(sym::nu));
  expect_exact(q.discriminant, P("25*c^2 + 16*alpha^2*c"), "discriminant");
  t.steps.push_back({StepKind::Extract, "discriminant", "", q.discriminant, "b^2 - 4ac of the quadratic in nu",
                     "real nu needs " + q.discriminant.to_string() + " >= 0", in_force, {}});

  const Expr disc = substitute(q.discriminant, at_c);
  if (space.c > 0) {
    if (sign_certificate(disc) != SignCertificate::Positive) fail("discriminant " + disc.to_string() + " not positive");
    t.steps.push_back({StepKind::Conclude, "solvability", "", disc, "c = " + std::to_string(space.c),
                       disc.to_string() + " > 0 for every real alpha: there is always a solution", in_force, {}});
  } else {
    auto bound = square_bound(disc);
    if (!bound || bound->first != Var(sym::alpha))
      fail("discriminant " + disc.to_string() + " does not bound alpha^2");
    t.steps.push_back({StepKind::Conclude, "solvability", "", disc, "c = " + std::to_string(space.c),
                       "alpha^2 <= " + rational_to_string(bound->second), in_force,
                       {{"alpha^2 bound", bound->second.get_d()}}});
  }

  const Expr at_alpha0 = substitute(target, {{Var(sym::alpha), Expr()}});
  conclude_vanishing(at_alpha0, {c}, Var(sym::nu));
  t.steps.push_back({StepKind::Contradiction, "alpha = 0", "", at_alpha0, "alpha = 0 in the quadratic; c != 0 cancels",
                     "c*nu = 0 forces nu = 0, impossible since nu != 0", in_force, {}});
  t.outcome = {Fact::nonvanishing(alpha)};

  if (space.c < 0) {
    // Boundary alpha^2 = 25/4: double root nu = -b/2a, and lambda = -c/nu.
    const Expr nu0 = substitute(q.roots.front().rational, at_c);
    const Expr lambda0 = Expr(-space.c) / nu0;
    const Expr gap = lambda0 - nu0;
    expect_equation(gap, P("4*alpha^2 - 25"), "boundary");
    const double a = 2.5;
    const double nu_v = eval_numeric(nu0, {{Var(sym::alpha), a}});
    t.steps.push_back({StepKind::Numeric, "boundary", "", gap, "double root at alpha^2 = 25/4",
                       "lambda - nu = " + gap.to_string() + " vanishes there: lambda = nu (type A), not a type-B pair",
                       in_force, {{"alpha", a}, {"nu", nu_v}, {"lambda", -space.c / nu_v}}});
    t.verdict = "solvable iff 0 < alpha^2 <= 25/4";
  } else {
    t.verdict = "always solvable";
  }
  t.status = ProofStatus::Verified;
  return t;
}

// --------------------------------------------------------------- type B

ProofTrace type_b_exclusion(const ModelSpace& space, const Catalog& catalog, int samples, double tol) {
  const std::string id = space.c > 0 ? "cp2-b" : "ch2-b";
  const HypersurfaceFamily& f = catalog.find(id);
  if (f.space() != space) fail("family " + id + " is not in " + space.name);
  const double expected = space.c > 0 ? 3.0 : -3.0;

  double lo = INFINITY, hi = -INFINITY, worst = 0, closest = INFINITY;
  const auto radii = f.sample_radii(samples);
  for (double r : radii) {
    Curvatures k = f.at(r);
    const double v = k.lambda * k.nu + space.c;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    worst = std::max(worst, std::abs(v - expected));
    closest = std::min(closest, std::abs(v));
  }
  if (!(closest >= 3.0 - tol)) fail(id + ": |lambda*nu + c| drops to " + fmt(closest));
  if (!(worst < tol)) fail(id + ": lambda*nu + c deviates from " + fmt(expected) + " by " + fmt(worst));

  const FrameContext ctx = build_hopf_context(Expr(space.c));
  ProofTrace t;
  t.name = "type-b " + space.name;
  t.hypotheses = {Fact::vanishes(parse_expr("c + lambda*nu", ctx.symbols()))};
  t.steps.push_back({StepKind::Numeric, "sweep " + id, "", parse_expr("lambda*nu + c", ctx.symbols()),
                     f.description() + ", " + std::to_string(radii.size()) + " radii",
                     "lambda*nu + c = " + fmt(expected) + " everywhere, so lambda*nu != -c",
                     t.hypotheses,
                     {{"samples", static_cast<double>(radii.size())},
                      {"min", lo},
                      {"max", hi},
                      {"max deviation", worst}}});
  t.status = ProofStatus::Contradiction;
  t.verdict = "type B excluded in " + space.name;
  return t;
}

// ----------------------------------------------------------------- suite

ProofSuite run_proofs(std::string_view target, const Catalog& catalog, const std::vector<ModelSpace>& spaces,
                      int samples, double tol) {
  ProofSuite s;
  const bool all = target == "all";
  if (!all && target != "nonhopf" && target != "hopf" && target != "quadratic" && target != "type-b")
    throw Error(ErrorCode::InvalidArgument, "unknown proof target '" + std::string(target) + "'");
  if (all || target == "nonhopf") s.traces.push_back(nonhopf_contradiction());
  if (all || target == "hopf") s.traces.push_back(hopf_branch());
  if (all || target == "quadratic")
    for (const auto& sp : spaces) s.traces.push_back(quadratic_analysis(sp));
  if (all || target == "type-b")
    for (const auto& sp : spaces) s.traces.push_back(type_b_exclusion(sp, catalog, samples, tol));
  s.verified = true;
  if (all) {
    const bool both = std::ranges::count(spaces, ModelSpace::cp2()) && std::ranges::count(spaces, ModelSpace::ch2());
    s.verdict = both ? std::string(kMainVerdict) : "partial run: both model spaces are needed for the full verdict";
    s.verified = both;
  } else {
    s.verdict = std::string(target) + " verified";
  }
  return s;
}

}  // namespace starricci
