#include "starricci/frame.hpp"

#include "starricci/error.hpp"

namespace starricci {

namespace {

using enum FrameIndex;

}  // namespace

// ------------------------------------------------------------ VectorField

VectorField VectorField::basis(FrameIndex i) {
  VectorField v;
  v[i] = Expr(1);
  return v;
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = c[i] + o.c[i];
  return out;
}

VectorField VectorField::operator-(const VectorField& o) const {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = c[i] - o.c[i];
  return out;
}

VectorField VectorField::operator-() const {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = -c[i];
  return out;
}

VectorField operator*(const Expr& k, const VectorField& v) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = k * v.c[i];
  return out;
}

bool VectorField::is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

Expr inner(const VectorField& a, const VectorField& b) {
  return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

// --------------------------------------------------------------- Tensor11

Tensor11 Tensor11::identity() {
  Tensor11 t;
  for (FrameIndex i : kFrame) t(i, i) = Expr(1);
  return t;
}

Tensor11 Tensor11::from_columns(const VectorField& c1, const VectorField& c2, const VectorField& c3) {
  Tensor11 t;
  const std::array<const VectorField*, 3> cols = {&c1, &c2, &c3};
  for (FrameIndex j : kFrame)
    for (FrameIndex i : kFrame) t(i, j) = (*cols[idx(j)])[i];
  return t;
}

VectorField Tensor11::column(FrameIndex j) const {
  VectorField v;
  for (FrameIndex i : kFrame) v[i] = (*this)(i, j);
  return v;
}

VectorField Tensor11::apply(const VectorField& v) const {
  VectorField out;
  for (FrameIndex i : kFrame)
    for (FrameIndex j : kFrame) out[i] += (*this)(i, j) * v[j];
  return out;
}

Tensor11 Tensor11::operator*(const Tensor11& o) const {
  Tensor11 out;
  for (FrameIndex i : kFrame)
    for (FrameIndex j : kFrame)
      for (FrameIndex k : kFrame) out(i, j) += (*this)(i, k) * o(k, j);
  return out;
}

Tensor11 Tensor11::operator+(const Tensor11& o) const {
  Tensor11 out;
  for (FrameIndex i : kFrame)
    for (FrameIndex j : kFrame) out(i, j) = (*this)(i, j) + o(i, j);
  return out;
}

Tensor11 Tensor11::operator-(const Tensor11& o) const {
  Tensor11 out;
  for (FrameIndex i : kFrame)
    for (FrameIndex j : kFrame) out(i, j) = (*this)(i, j) - o(i, j);
  return out;
}

Tensor11 operator*(const Expr& k, const Tensor11& t) {
  return t.map([&](const Expr& e) { return k * e; });
}

Tensor11 Tensor11::transpose() const {
  Tensor11 out;
  for (FrameIndex i : kFrame)
    for (FrameIndex j : kFrame) out(i, j) = (*this)(j, i);
  return out;
}

Tensor11 Tensor11::map(const std::function<Expr(const Expr&)>& f) const {
  Tensor11 out;
  for (FrameIndex i : kFrame)
    for (FrameIndex j : kFrame) out(i, j) = f((*this)(i, j));
  return out;
}

bool Tensor11::is_zero() const {
  for (FrameIndex i : kFrame)
    for (FrameIndex j : kFrame)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

// -------------------------------------------------------- ConnectionTable

VectorField ConnectionTable::nabla(FrameIndex i, FrameIndex j) const {
  VectorField v;
  for (FrameIndex k : kFrame) v[k] = (*this)(i, j, k);
  return v;
}

// ----------------------------------------------------------- FrameContext

Expr FrameContext::scalar(std::string_view name) const {
  const Symbol* s = symbols_->find(name);
  if (!s) throw Error(ErrorCode::UnknownSymbol, "no scalar '" + std::string(name) + "' in this frame context");
  return Expr(s->var);
}

namespace {

Tensor11 structure_tensor() {
  // phi e1 = e2, phi e2 = -e1, phi xi = 0.
  Tensor11 phi;
  phi(E2, E1) = Expr(1);
  phi(E1, E2) = Expr(-1);
  return phi;
}

void declare_common(SymbolTable& t) {
  t.declare_constant(sym::c);
  t.declare_constant(sym::n);
  t.declare_constant(sym::L);
  t.declare_constant(sym::einstein);
}

}  // namespace

FrameContext build_nonhopf_context(const Expr& c) {
  auto table = std::make_shared<SymbolTable>();
  declare_common(*table);
  for (auto name : {sym::alpha, sym::beta, sym::gamma, sym::delta, sym::mu, sym::kappa1, sym::kappa2, sym::kappa3})
    table->declare_function(name);

  const Expr alpha(Var(sym::alpha)), beta(Var(sym::beta)), gamma(Var(sym::gamma)), delta(Var(sym::delta)),
      mu(Var(sym::mu)), k1(Var(sym::kappa1)), k2(Var(sym::kappa2)), k3(Var(sym::kappa3));

  FrameContext ctx;
  ctx.kind_ = FrameKind::NonHopf;
  ctx.c_ = c;
  ctx.phi_ = structure_tensor();
  // A U = gamma U + delta phiU + beta xi, A phiU = delta U + mu phiU, A xi = alpha xi + beta U.
  ctx.shape_ = Tensor11::from_columns({gamma, delta, beta}, {delta, mu, Expr()}, {beta, Expr(), alpha});

  ConnectionTable& g = ctx.connection_;
  // nabla_U xi = -delta U + gamma phiU, nabla_phiU xi = -mu U + delta phiU, nabla_xi xi = beta phiU.
  g(E1, E3, E1) = -delta;
  g(E1, E3, E2) = gamma;
  g(E2, E3, E1) = -mu;
  g(E2, E3, E2) = delta;
  g(E3, E3, E2) = beta;
  // nabla_U U = kappa1 phiU + delta xi, nabla_phiU U = kappa2 phiU + mu xi, nabla_xi U = kappa3 phiU.
  g(E1, E1, E2) = k1;
  g(E1, E1, E3) = delta;
  g(E2, E1, E2) = k2;
  g(E2, E1, E3) = mu;
  g(E3, E1, E2) = k3;
  // nabla_U phiU = -kappa1 U - gamma xi, nabla_phiU phiU = -kappa2 U - delta xi,
  // nabla_xi phiU = -kappa3 U - beta xi.
  g(E1, E2, E1) = -k1;
  g(E1, E2, E3) = -gamma;
  g(E2, E2, E1) = -k2;
  g(E2, E2, E3) = -delta;
  g(E3, E2, E1) = -k3;
  g(E3, E2, E3) = -beta;

  ctx.symbols_ = std::move(table);
  return ctx;
}

FrameContext build_hopf_context(const Expr& c) {
  auto table = std::make_shared<SymbolTable>();
  declare_common(*table);
  table->declare_constant(sym::alpha);
  for (auto name : {sym::lambda, sym::nu, sym::omega1, sym::omega2, sym::omega3}) table->declare_function(name);

  const Expr alpha(Var(sym::alpha)), lambda(Var(sym::lambda)), nu(Var(sym::nu));
  const std::array<Expr, 3> omega = {Expr(Var(sym::omega1)), Expr(Var(sym::omega2)), Expr(Var(sym::omega3))};

  FrameContext ctx;
  ctx.kind_ = FrameKind::Hopf;
  ctx.c_ = c;
  ctx.phi_ = structure_tensor();
  ctx.shape_ = Tensor11::from_columns({lambda, Expr(), Expr()}, {Expr(), nu, Expr()}, {Expr(), Expr(), alpha});

  ConnectionTable& g = ctx.connection_;
  const Tensor11 phi_a = ctx.phi_ * ctx.shape_;
  for (FrameIndex i : kFrame) {
    // nabla_X xi = phi A X; the rest follows from orthonormality.
    for (FrameIndex k : kFrame) {
      g(i, E3, k) = phi_a(k, i);
      g(i, k, E3) = -phi_a(k, i);
    }
    g(i, E3, E3) = Expr();
    g(i, E1, E2) = omega[idx(i)];
    g(i, E2, E1) = -omega[idx(i)];
  }

  ctx.symbols_ = std::move(table);
  return ctx;
}

// ------------------------------------------------------------- operations

VectorField covariant_derivative(const FrameContext& ctx, FrameIndex x, const VectorField& y) {
  VectorField out;
  for (FrameIndex k : kFrame) out[k] = derivative(y[k], x, ctx.symbols());
  for (FrameIndex j : kFrame) {
    if (y[j].is_zero()) continue;
    out = out + y[j] * ctx.connection().nabla(x, j);
  }
  return out;
}

Tensor11 covariant_derivative(const FrameContext& ctx, FrameIndex x, const Tensor11& t) {
  std::array<VectorField, 3> cols;
  for (FrameIndex j : kFrame) {
    cols[idx(j)] = covariant_derivative(ctx, x, t.column(j)) - t.apply(ctx.connection().nabla(x, j));
  }
  return Tensor11::from_columns(cols[0], cols[1], cols[2]);
}

VectorField curvature(const FrameContext& ctx, const VectorField& x, const VectorField& y, const VectorField& z) {
  const Tensor11& phi = ctx.phi();
  const Tensor11& a = ctx.shape();
  const VectorField phi_x = phi.apply(x);
  const VectorField phi_y = phi.apply(y);
  const VectorField phi_z = phi.apply(z);
  const VectorField ax = a.apply(x);
  const VectorField ay = a.apply(y);

  VectorField bracket = inner(y, z) * x - inner(x, z) * y + inner(phi_y, z) * phi_x - inner(phi_x, z) * phi_y -
                        (Expr(2) * inner(phi_x, y)) * phi_z;
  return (ctx.c() / Expr(4)) * bracket + inner(ay, z) * ax - inner(ax, z) * ay;
}

Tensor11 ricci(const FrameContext& ctx) {
  Tensor11 s;
  for (FrameIndex j : kFrame)
    for (FrameIndex k : kFrame)
      for (FrameIndex i : kFrame) {
        const VectorField ei = VectorField::basis(i);
        s(k, j) += curvature(ctx, ei, VectorField::basis(j), VectorField::basis(k))[i];
      }
  return s;
}

Tensor11 star_ricci_closed(const FrameContext& ctx) {
  const Expr n(Var(sym::n));
  const Tensor11 phi_a = ctx.phi() * ctx.shape();
  Tensor11 s = -Expr(1) * (((ctx.c() * n) / Expr(2)) * (ctx.phi() * ctx.phi()) + phi_a * phi_a);
  return s.map([&](const Expr& e) { return substitute(e, {{Var(sym::n), Expr(FrameContext::n())}}); });
}

Tensor11 star_ricci_trace(const FrameContext& ctx) {
  Tensor11 s;
  for (FrameIndex j : kFrame)
    for (FrameIndex k : kFrame) {
      const VectorField x = VectorField::basis(j);
      const VectorField phi_y = ctx.phi().apply(VectorField::basis(k));
      Expr trace;
      for (FrameIndex i : kFrame)
        trace += ctx.phi().apply(curvature(ctx, x, phi_y, VectorField::basis(i)))[i];
      s(k, j) = trace / Expr(2);
    }
  return s;
}

VectorField codazzi_residual(const FrameContext& ctx, FrameIndex x, FrameIndex y) {
  const VectorField ex = VectorField::basis(x);
  const VectorField ey = VectorField::basis(y);
  const Tensor11& phi = ctx.phi();
  const VectorField lhs = covariant_derivative(ctx, x, ctx.shape()).column(y) -
                          covariant_derivative(ctx, y, ctx.shape()).column(x);
  const Expr eta_x = ex[E3];
  const Expr eta_y = ey[E3];
  const VectorField rhs = eta_x * phi.apply(ey) - eta_y * phi.apply(ex) -
                          (Expr(2) * inner(phi.apply(ex), ey)) * VectorField::xi();
  return lhs - (ctx.c() / Expr(4)) * rhs;
}

}  // namespace starricci
