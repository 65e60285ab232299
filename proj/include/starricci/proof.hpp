#pragma once

#include <string>
#include <utility>
#include <vector>

#include "starricci/catalog.hpp"
#include "starricci/expr.hpp"

namespace starricci {

/// `expr = 0` or `expr != 0`.
struct Fact {
  Expr expr;
  bool nonzero = false;

  static Fact vanishes(Expr e) { return {std::move(e), false}; }
  static Fact nonvanishing(Expr e) { return {std::move(e), true}; }
  std::string to_string() const;
  friend bool operator==(const Fact&, const Fact&) = default;
};

enum class StepKind { Extract, Cancel, CaseSplit, Assume, Substitute, Contradiction, Conclude, Numeric };
std::string step_kind_name(StepKind k);

struct ProofStep {
  StepKind kind = StepKind::Extract;
  std::string label;
  std::string projection;  // e.g. "parallel(e3,e3,e3)"; empty when not a projection
  Expr equation;
  std::string justification;
  std::string conclusion;
  std::vector<Fact> hypotheses;                        // in force when the step runs
  std::vector<std::pair<std::string, double>> values;  // numeric steps only
  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

enum class ProofStatus { Contradiction, Reduced, Verified };
std::string proof_status_name(ProofStatus s);

struct ProofTrace {
  std::string name;
  std::vector<Fact> hypotheses;  // assumed at the start
  std::vector<ProofStep> steps;
  std::vector<Fact> outcome;     // facts established at the end
  ProofStatus status = ProofStatus::Verified;
  std::string verdict;
  friend bool operator==(const ProofTrace&, const ProofTrace&) = default;
};

/// Numerator scaled to leading coefficient 1 (denominator dropped): two
/// equations `a = 0`, `b = 0` agree iff their normal forms are equal.
Expr normalize_equation(const Expr& e);

struct Cancellation {
  Expr remainder;             // normalized
  std::vector<Expr> removed;  // factors divided out, in order
};

/// Divides every factor declared nonzero out of the numerator of `eq`, as
/// often as it divides exactly. Nothing outside `nonzero` is ever cancelled.
Cancellation cancel_nonzero(const Expr& eq, const std::vector<Expr>& nonzero);

/// Reads `eq = 0` under `nonzero` as `target = 0`: the remainder after
/// cancellation must be a power of `target`. Throws ProofFailure otherwise.
Cancellation conclude_vanishing(const Expr& eq, const std::vector<Expr>& nonzero, Var target);

/// lambda*nu - (alpha/2)(lambda + nu) - c/4 over the Hopf context symbols,
/// obtained as -1/2 times the xi-component of the Codazzi residual at (W, phiW).
Expr hopf_relation(const FrameContext& hopf);

/// Three projections of the parallel condition on S* in the non-Hopf frame:
/// beta^2 delta, then beta mu^2, then -c beta, ending in c = 0.
ProofTrace nonhopf_contradiction();

/// The Hopf case: lambda(c + lambda nu) = 0; the branch c + lambda nu != 0
/// forces lambda = nu = 0 and then c = 0; what is left is c + lambda nu = 0
/// with lambda, nu nonzero.
ProofTrace hopf_branch();

/// lambda = -c/nu in the Hopf relation, the quadratic in nu, its discriminant
/// and the solvability condition for the given space.
ProofTrace quadratic_analysis(const ModelSpace& space);

/// lambda*nu + c along the type-B family of the space: must stay at
/// distance >= 3 - tol from zero at every sampled radius.
ProofTrace type_b_exclusion(const ModelSpace& space, const Catalog& catalog, int samples = 100, double tol = 1e-9);

struct ProofSuite {
  std::vector<ProofTrace> traces;
  bool verified = false;
  std::string verdict;
};

inline constexpr std::string_view kMainVerdict = "Main Theorem verified at desk scale";

/// Targets: "nonhopf", "hopf", "quadratic", "type-b", "all". For quadratic and
/// type-b, `spaces` selects which model spaces run.
ProofSuite run_proofs(std::string_view target, const Catalog& catalog, const std::vector<ModelSpace>& spaces,
                      int samples = 100, double tol = 1e-9);

}  // namespace starricci
