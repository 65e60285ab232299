#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string_view>

#include "starricci/expr.hpp"
#include "starricci/symbol.hpp"

namespace starricci {

/// Names of the scalars the frame contexts introduce.
namespace sym {
inline constexpr std::string_view alpha = "alpha";
inline constexpr std::string_view beta = "beta";
inline constexpr std::string_view gamma = "gamma";
inline constexpr std::string_view delta = "delta";
inline constexpr std::string_view mu = "mu";
inline constexpr std::string_view kappa1 = "kappa1";
inline constexpr std::string_view kappa2 = "kappa2";
inline constexpr std::string_view kappa3 = "kappa3";
inline constexpr std::string_view lambda = "lambda";
inline constexpr std::string_view nu = "nu";
inline constexpr std::string_view omega1 = "omega1";
inline constexpr std::string_view omega2 = "omega2";
inline constexpr std::string_view omega3 = "omega3";
inline constexpr std::string_view c = "c";
inline constexpr std::string_view n = "n";
inline constexpr std::string_view L = "L";
inline constexpr std::string_view einstein = "lambda_E";
}  // namespace sym

/// Tangent vector as components over the orthonormal frame {e1, e2, e3 = xi}.
struct VectorField {
  std::array<Expr, 3> c;

  static VectorField basis(FrameIndex i);
  static VectorField xi() { return basis(FrameIndex::E3); }

  const Expr& operator[](FrameIndex i) const { return c[idx(i)]; }
  Expr& operator[](FrameIndex i) { return c[idx(i)]; }

  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField operator-() const;
  friend VectorField operator*(const Expr& k, const VectorField& v);
  bool is_zero() const;
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// Metric of the orthonormal frame.
Expr inner(const VectorField& a, const VectorField& b);

/// Type-(1,1) tensor: entry (row, col) is g(T e_col, e_row), so column j is T e_j.
class Tensor11 {
 public:
  static Tensor11 zero() { return {}; }
  static Tensor11 identity();
  static Tensor11 from_columns(const VectorField& c1, const VectorField& c2, const VectorField& c3);

  const Expr& operator()(FrameIndex row, FrameIndex col) const { return m_[idx(row)][idx(col)]; }
  Expr& operator()(FrameIndex row, FrameIndex col) { return m_[idx(row)][idx(col)]; }

  VectorField column(FrameIndex j) const;
  VectorField apply(const VectorField& v) const;

  Tensor11 operator*(const Tensor11& o) const;  // composition
  Tensor11 operator+(const Tensor11& o) const;
  Tensor11 operator-(const Tensor11& o) const;
  friend Tensor11 operator*(const Expr& k, const Tensor11& t);
  Tensor11 transpose() const;
  Tensor11 map(const std::function<Expr(const Expr&)>& f) const;
  bool is_symmetric() const { return *this == transpose(); }
  bool is_zero() const;
  friend bool operator==(const Tensor11&, const Tensor11&) = default;

 private:
  std::array<std::array<Expr, 3>, 3> m_;
};

/// Connection coefficients g(nabla_{e_i} e_j, e_k).
class ConnectionTable {
 public:
  const Expr& operator()(FrameIndex i, FrameIndex j, FrameIndex k) const { return g_[idx(i)][idx(j)][idx(k)]; }
  Expr& operator()(FrameIndex i, FrameIndex j, FrameIndex k) { return g_[idx(i)][idx(j)][idx(k)]; }

  /// nabla_{e_i} e_j.
  VectorField nabla(FrameIndex i, FrameIndex j) const;

 private:
  std::array<std::array<std::array<Expr, 3>, 3>, 3> g_;
};

enum class FrameKind { NonHopf, Hopf };

/// A point-frame model of a 3-dimensional real hypersurface in the complex
/// projective or hyperbolic plane.
///
/// NonHopf: {U, phi U, xi} with A xi = alpha xi + beta U (beta assumed nonzero)
/// and the connection given by the standard relations in that frame.
/// Hopf: a principal frame {W, phi W, xi} with A = diag(lambda, nu, alpha);
/// nabla xi = phi A fixes part of the connection, the rest is carried by the
/// free coefficients omega_i = g(nabla_{e_i} e1, e2). alpha is a constant.
class FrameContext {
 public:
  FrameKind kind() const noexcept { return kind_; }
  const SymbolTable& symbols() const noexcept { return *symbols_; }
  const Expr& c() const noexcept { return c_; }
  static constexpr int n() noexcept { return 2; }
  const Tensor11& shape() const noexcept { return shape_; }
  const Tensor11& phi() const noexcept { return phi_; }
  const ConnectionTable& connection() const noexcept { return connection_; }

  /// The scalar called `name` in this context's table.
  Expr scalar(std::string_view name) const;

  friend FrameContext build_nonhopf_context(const Expr& c);
  friend FrameContext build_hopf_context(const Expr& c);

 private:
  FrameContext() = default;

  FrameKind kind_ = FrameKind::NonHopf;
  std::shared_ptr<const SymbolTable> symbols_;
  Expr c_;
  Tensor11 shape_;
  Tensor11 phi_;
  ConnectionTable connection_;
};

FrameContext build_nonhopf_context(const Expr& c = Expr(Var(sym::c)));
FrameContext build_hopf_context(const Expr& c = Expr(Var(sym::c)));

/// nabla_X Y by the Leibniz rule: formal derivatives of the components plus
/// the connection acting on the frame.
VectorField covariant_derivative(const FrameContext& ctx, FrameIndex x, const VectorField& y);

/// (nabla_X T) with (nabla_X T) Y = nabla_X (T Y) - T (nabla_X Y).
Tensor11 covariant_derivative(const FrameContext& ctx, FrameIndex x, const Tensor11& t);

/// Gauss equation for constant holomorphic sectional curvature c:
/// R(X,Y)Z = c/4 [g(Y,Z)X - g(X,Z)Y + g(phi Y,Z) phi X - g(phi X,Z) phi Y
///                - 2 g(phi X,Y) phi Z] + g(AY,Z) AX - g(AX,Z) AY.
VectorField curvature(const FrameContext& ctx, const VectorField& x, const VectorField& y, const VectorField& z);

/// g(S e_j, e_k) = sum_i g(R(e_i, e_j) e_k, e_i).
Tensor11 ricci(const FrameContext& ctx);

/// S* = -[(c n / 2) phi^2 + (phi A)^2] with n = 2.
Tensor11 star_ricci_closed(const FrameContext& ctx);

/// g(S* X, Y) = 1/2 trace{Z -> phi R(X, phi Y) Z}, with X in the first
/// curvature slot and phi applied after R. This convention reproduces the
/// closed form exactly in both contexts.
Tensor11 star_ricci_trace(const FrameContext& ctx);

/// (nabla_X A)Y - (nabla_Y A)X - c/4 [eta(X) phi Y - eta(Y) phi X - 2 g(phi X, Y) xi].
VectorField codazzi_residual(const FrameContext& ctx, FrameIndex x, FrameIndex y);

}  // namespace starricci
