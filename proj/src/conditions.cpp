#include "starricci/conditions.hpp"

#include <array>

namespace starricci {

namespace {

constexpr std::array<std::pair<ConditionKind, std::string_view>, 6> kNames = {{
    {ConditionKind::Parallel, "parallel"},
    {ConditionKind::XiParallel, "xi-parallel"},
    {ConditionKind::DParallel, "d-parallel"},
    {ConditionKind::SemiParallel, "semi-parallel"},
    {ConditionKind::PseudoParallel, "pseudo-parallel"},
    {ConditionKind::Einstein, "einstein"},
}};

ConditionReport derivative_slices(const FrameContext& ctx, const Tensor11& t, std::string tensor, ConditionKind kind,
                                  std::initializer_list<FrameIndex> directions) {
  ConditionReport r{kind, std::move(tensor), std::nullopt, {}};
  for (FrameIndex i : directions) {
    const Tensor11 d = covariant_derivative(ctx, i, t);
    for (FrameIndex j : kFrame)
      for (FrameIndex k : kFrame) r.entries.push_back({i, std::nullopt, j, k, d(k, j)});
  }
  return r;
}

// (op . T) Z = op(T Z) - T(op Z) for the derivation induced by `op`.
template <typename Op>
ConditionReport derivation_report(const Tensor11& t, std::string tensor, ConditionKind kind, Op op) {
  ConditionReport r{kind, std::move(tensor), std::nullopt, {}};
  for (FrameIndex i : kFrame)
    for (FrameIndex j : kFrame) {
      if (idx(i) >= idx(j)) continue;
      for (FrameIndex k : kFrame) {
        const VectorField z = VectorField::basis(k);
        const VectorField v = op(i, j, t.column(k)) - t.apply(op(i, j, z));
        for (FrameIndex l : kFrame) r.entries.push_back({i, j, k, l, v[l]});
      }
    }
  return r;
}

}  // namespace

std::string condition_name(ConditionKind k) {
  for (const auto& [kind, name] : kNames)
    if (kind == k) return std::string(name);
  return "unknown";
}

std::optional<ConditionKind> parse_condition_name(std::string_view s) {
  for (const auto& [kind, name] : kNames)
    if (name == s) return kind;
  return std::nullopt;
}

std::string ConditionEntry::label() const {
  std::string out = "(" + frame_name(x);
  if (x2) out += "^" + frame_name(*x2);
  if (y) out += "," + frame_name(*y);
  return out + "," + frame_name(proj) + ")";
}

bool ConditionReport::all_zero() const {
  for (const auto& e : entries)
    if (!e.equation.is_zero()) return false;
  return true;
}

const ConditionEntry* ConditionReport::find(FrameIndex x, std::optional<FrameIndex> y, FrameIndex proj,
                                            std::optional<FrameIndex> x2) const {
  for (const auto& e : entries)
    if (e.x == x && e.y == y && e.proj == proj && e.x2 == x2) return &e;
  return nullptr;
}

ConditionReport parallel_equations(const FrameContext& ctx, const Tensor11& t, std::string tensor) {
  using enum FrameIndex;
  return derivative_slices(ctx, t, std::move(tensor), ConditionKind::Parallel, {E1, E2, E3});
}

ConditionReport xi_parallel_equations(const FrameContext& ctx, const Tensor11& t, std::string tensor) {
  return derivative_slices(ctx, t, std::move(tensor), ConditionKind::XiParallel, {FrameIndex::E3});
}

ConditionReport d_parallel_equations(const FrameContext& ctx, const Tensor11& t, std::string tensor) {
  return derivative_slices(ctx, t, std::move(tensor), ConditionKind::DParallel, {FrameIndex::E1, FrameIndex::E2});
}

VectorField wedge(const VectorField& x, const VectorField& y, const VectorField& z) {
  return inner(y, z) * x - inner(z, x) * y;
}

ConditionReport semi_parallel_equations(const FrameContext& ctx, const Tensor11& t, std::string tensor) {
  return derivation_report(t, std::move(tensor), ConditionKind::SemiParallel,
                           [&](FrameIndex i, FrameIndex j, const VectorField& z) {
                             return curvature(ctx, VectorField::basis(i), VectorField::basis(j), z);
                           });
}

ConditionReport pseudo_parallel_equations(const FrameContext& ctx, const Tensor11& t, const Expr& L,
                                          std::string tensor) {
  ConditionReport r = derivation_report(t, std::move(tensor), ConditionKind::PseudoParallel,
                                        [&](FrameIndex i, FrameIndex j, const VectorField& z) {
                                          const VectorField x = VectorField::basis(i), y = VectorField::basis(j);
                                          return curvature(ctx, x, y, z) - L * wedge(x, y, z);
                                        });
  r.L = L;
  return r;
}

ConditionReport einstein_equations(const FrameContext& ctx) {
  ConditionReport r{ConditionKind::Einstein, "S", std::nullopt, {}};
  const Tensor11 s = ricci(ctx);
  const Expr lambda_e = ctx.scalar(sym::einstein);
  for (FrameIndex j : kFrame)
    for (FrameIndex k : kFrame) r.entries.push_back({j, std::nullopt, std::nullopt, k, j == k ? s(k, j) - lambda_e : s(k, j)});
  return r;
}

ConditionReport condition_equations(const FrameContext& ctx, ConditionKind kind, const Tensor11& t, std::string tensor,
                                    std::optional<Expr> L) {
  switch (kind) {
    case ConditionKind::Parallel:
      return parallel_equations(ctx, t, std::move(tensor));
    case ConditionKind::XiParallel:
      return xi_parallel_equations(ctx, t, std::move(tensor));
    case ConditionKind::DParallel:
      return d_parallel_equations(ctx, t, std::move(tensor));
    case ConditionKind::SemiParallel:
      return semi_parallel_equations(ctx, t, std::move(tensor));
    case ConditionKind::PseudoParallel:
      return pseudo_parallel_equations(ctx, t, L ? *L : ctx.scalar(sym::L), std::move(tensor));
    case ConditionKind::Einstein:
      break;
  }
  return einstein_equations(ctx);
}

}  // namespace starricci
