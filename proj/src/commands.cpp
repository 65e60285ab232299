#include "starricci/commands.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "starricci/error.hpp"
#include "starricci/quadratic.hpp"
#include "starricci/syntax.hpp"

namespace starricci {

using json = nlohmann::ordered_json;

namespace {

std::string echo(std::string_view head, std::initializer_list<std::string_view> parts) {
  std::string out(head);
  for (auto p : parts)
    if (!p.empty()) out += " " + std::string(p);
  return out;
}

// Shortest text that reads back to the same double.
std::string number_text(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::pair<std::string, std::string> split_binding(const std::string& b) {
  const auto eq = b.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == b.size())
    throw Error(ErrorCode::InvalidArgument, "binding '" + b + "' is not of the form name=value");
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  return {trim(b.substr(0, eq)), trim(b.substr(eq + 1))};
}

ConditionKind condition_from(std::string_view s) {
  auto k = parse_condition_name(s);
  if (!k)
    throw Error(ErrorCode::InvalidArgument,
                "unknown condition '" + std::string(s) +
                    "' (parallel, xi-parallel, d-parallel, semi-parallel, pseudo-parallel, einstein)");
  return *k;
}

}  // namespace

Report cmd_prove(std::string_view target, std::string_view space, const RunConfig& cfg, const Catalog& catalog) {
  cfg.validate();
  Report r;
  r.command = echo("prove", {target, space.empty() ? "" : "--space", space});
  r.kind = "prove";
  r.catalog_version = catalog.version();
  std::vector<ModelSpace> spaces;
  if (space.empty())
    spaces = {ModelSpace::cp2(), ModelSpace::ch2()};
  else
    spaces = {ModelSpace::parse(space)};
  try {
    ProofSuite suite = run_proofs(target, catalog, spaces, cfg.samples, cfg.tol_oracle);
    json traces = json::array();
    for (const auto& t : suite.traces) traces.push_back(to_json(t));
    r.payload = {{"target", target}, {"traces", traces}, {"verified", suite.verified}, {"verdict", suite.verdict}};
    r.status = suite.verdict;
    r.passed = suite.verified;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ProofFailure && e.code() != ErrorCode::Catalog) throw;
    r.payload = {{"target", target}, {"traces", json::array()}, {"verified", false}, {"error", e.what()}};
    r.status = "proof failed";
    r.passed = false;
  }
  return r;
}

Report cmd_check(std::string_view tensor, std::string_view condition, std::string_view context,
                 const std::vector<std::string>& assumptions, std::optional<std::string> L) {
  const ConditionKind kind = condition_from(condition);
  FrameContext ctx = [&] {
    if (context == "nonhopf") return build_nonhopf_context();
    if (context == "hopf") return build_hopf_context();
    throw Error(ErrorCode::InvalidArgument, "unknown context '" + std::string(context) + "' (nonhopf or hopf)");
  }();
  Tensor11 t;
  std::string tname;
  if (tensor == "star-ricci") {
    t = star_ricci_closed(ctx);
    tname = "S*";
  } else if (tensor == "ricci") {
    t = ricci(ctx);
    tname = "S";
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown tensor '" + std::string(tensor) + "' (star-ricci or ricci)");
  }

  Bindings b;
  json shown = json::array();
  for (const auto& a : assumptions) {
    auto [name, value] = split_binding(a);
    const Symbol* s = ctx.symbols().find(name);
    if (!s) throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + name + "' in assumption");
    Expr v = parse_expr(value, ctx.symbols());
    b[s->var] = v;
    shown.push_back(name + " = " + v.to_string());
  }
  std::optional<Expr> l;
  if (L) l = parse_expr(*L, ctx.symbols());

  ConditionReport rep = condition_equations(ctx, kind, t, tname, l);
  if (!b.empty()) {
    for (auto& e : rep.entries) e.equation = substitute(e.equation, b);
    if (rep.L) rep.L = substitute(*rep.L, b);
  }

  Report r;
  std::string cmd = echo("check", {tensor, condition, context});
  for (const auto& a : assumptions) cmd += " " + a;
  if (L) cmd += " --L " + *L;
  r.command = cmd;
  r.kind = "check";
  json p = to_json(rep);
  p["context"] = context;
  p["assumptions"] = shown;
  r.payload = p;
  std::size_t nonzero = 0;
  for (const auto& e : rep.entries) nonzero += !e.equation.is_zero();
  r.status = std::to_string(rep.entries.size()) + " equations, " + std::to_string(nonzero) + " nonzero";
  return r;
}

Report cmd_sweep(std::string_view family, double r_min, double r_max, int samples, std::string_view condition,
                 const RunConfig& cfg, const Catalog& catalog, double L) {
  cfg.validate();
  const ConditionKind kind = condition_from(condition);
  const HypersurfaceFamily& f = catalog.find(family);
  SweepResult s = sweep(f, r_min, r_max, samples, kind, L);

  Report r;
  r.command = echo("sweep", {family, number_text(r_min), number_text(r_max), std::to_string(samples), condition});
  if (kind == ConditionKind::PseudoParallel) r.command += " --L " + number_text(L);
  r.kind = "sweep";
  r.catalog_version = catalog.version();
  json p = to_json(s);
  p["space"] = f.space().name;
  p["tol_witness"] = cfg.tol_witness;
  if (kind == ConditionKind::PseudoParallel) p["L"] = L;
  std::size_t witnesses = 0;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const bool w = s.rows[i].max_residual > cfg.tol_witness;
    p["rows"][i]["witness"] = w;
    witnesses += w;
  }
  p["witness_rows"] = witnesses;
  r.payload = p;
  r.status = std::to_string(witnesses) + " of " + std::to_string(s.rows.size()) + " rows exceed " +
             number_text(cfg.tol_witness);
  return r;
}

Report cmd_expr_eval(std::string_view text, const std::vector<std::string>& bindings) {
  SymbolTable table;
  Expr e = parse_expr_declaring(text, table);
  Bindings b;
  json shown = json::array();
  for (const auto& a : bindings) {
    auto [name, value] = split_binding(a);
    Expr v = parse_expr_declaring(value, table);
    if (!table.find(name)) table.declare_constant(name);
    b[table.find(name)->var] = v;
    shown.push_back(name + " = " + v.to_string());
  }
  Expr v = substitute(e, b);

  Report r;
  r.command = "expr eval \"" + std::string(text) + "\"";
  for (const auto& a : bindings) r.command += " " + a;
  r.kind = "expr-eval";
  json p{{"input", text}, {"bindings", shown}, {"value", v.to_string()}};
  if (v.is_constant()) p["numeric"] = v.constant_value().get_d();
  r.payload = p;
  r.status = v.is_constant() ? "exact value" : "symbolic value";
  return r;
}

Report cmd_expr_solve(std::string_view text, std::string_view unknown) {
  SymbolTable table;
  Expr e = parse_expr_declaring(text, table);
  if (!table.find(unknown)) table.declare_constant(unknown);
  QuadraticSolution q = solve_quadratic(e, table.find(unknown)->var);

  Report r;
  r.command = "expr solve \"" + std::string(text) + "\" " + std::string(unknown);
  r.kind = "expr-solve";
  json roots = json::array();
  for (const auto& root : q.roots) roots.push_back(root.to_string(q.discriminant));
  const char* form = q.kind == QuadraticSolution::Kind::Quadratic ? "quadratic"
                     : q.kind == QuadraticSolution::Kind::Linear  ? "linear"
                                                                  : "identity";
  json p{{"input", text}, {"unknown", unknown}, {"form", form}};
  if (q.kind != QuadraticSolution::Kind::Identity) {
    p["a"] = q.a.to_string();
    p["b"] = q.b.to_string();
    p["c"] = q.c.to_string();
  }
  if (q.kind == QuadraticSolution::Kind::Quadratic) p["discriminant"] = q.discriminant.to_string();
  p["roots"] = roots;
  p["condition"] = q.solvability_condition();
  r.payload = p;
  r.status = std::to_string(q.roots.size()) + " root(s), solvable when " + q.solvability_condition();
  return r;
}

}  // namespace starricci
