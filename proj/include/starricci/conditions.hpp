#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starricci/frame.hpp"

namespace starricci {

enum class ConditionKind { Parallel, XiParallel, DParallel, SemiParallel, PseudoParallel, Einstein };

std::string condition_name(ConditionKind k);  // "parallel", "xi-parallel", ...
std::optional<ConditionKind> parse_condition_name(std::string_view s);

/// One scalar projection. For the derivative conditions x is the direction and
/// y the argument of (nabla_x T) y; for semi/pseudo-parallelism (x, x2) is the
/// pair in R(x, x2) and y the argument; for einstein only x is used, as the
/// column of S. `proj` is the frame vector the result is paired with.
struct ConditionEntry {
  FrameIndex x = FrameIndex::E1;
  std::optional<FrameIndex> x2;
  std::optional<FrameIndex> y;
  FrameIndex proj = FrameIndex::E1;
  Expr equation;

  /// "(e1,e3,e2)", "(e1^e2,e3,e1)" or "(e1,e2)".
  std::string label() const;
};

struct ConditionReport {
  ConditionKind kind = ConditionKind::Parallel;
  std::string tensor;
  std::optional<Expr> L;  // pseudo-parallel only
  std::vector<ConditionEntry> entries;

  bool all_zero() const;
  const ConditionEntry* find(FrameIndex x, std::optional<FrameIndex> y, FrameIndex proj,
                             std::optional<FrameIndex> x2 = std::nullopt) const;
};

// Enumeration order is lexicographic in the index tuple of the entry label.

/// g((nabla_{e_i} T) e_j, e_k) for all i, j, k (27 entries).
ConditionReport parallel_equations(const FrameContext& ctx, const Tensor11& t, std::string tensor = "T");
/// The i = 3 slice (9 entries).
ConditionReport xi_parallel_equations(const FrameContext& ctx, const Tensor11& t, std::string tensor = "T");
/// The i in {1, 2} slices (18 entries).
ConditionReport d_parallel_equations(const FrameContext& ctx, const Tensor11& t, std::string tensor = "T");

/// g((R(e_i, e_j) . T) e_k, e_l) for i < j, where (R(X,Y) . T)Z = R(X,Y)TZ - T R(X,Y)Z.
/// 27 entries; the i > j entries are the exact negatives and are omitted.
ConditionReport semi_parallel_equations(const FrameContext& ctx, const Tensor11& t, std::string tensor = "T");
/// As semi-parallel with R(e_i, e_j) replaced by R(e_i, e_j) - L (e_i ^ e_j),
/// (X ^ Y)Z = g(Y,Z)X - g(Z,X)Y.
ConditionReport pseudo_parallel_equations(const FrameContext& ctx, const Tensor11& t, const Expr& L,
                                          std::string tensor = "T");
/// g(S e_j, e_k) - lambda_E delta_jk (9 entries).
ConditionReport einstein_equations(const FrameContext& ctx);

/// (X ^ Y) Z.
VectorField wedge(const VectorField& x, const VectorField& y, const VectorField& z);

/// Dispatch by kind. `L` is read only for pseudo-parallelism (default symbol L);
/// `t` is ignored for einstein.
ConditionReport condition_equations(const FrameContext& ctx, ConditionKind kind, const Tensor11& t,
                                    std::string tensor = "T", std::optional<Expr> L = std::nullopt);

}  // namespace starricci
