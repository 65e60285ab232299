#include "starricci/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "starricci/error.hpp"

namespace starricci {

namespace {

constexpr std::string_view kBuiltin = R"(catalog-version 1

family cp2-a1
space cp2
domain 0 pi/2
alpha 2*cot(2*r)
lambda cot(r)
nu cot(r)
description geodesic sphere of radius r
end

family cp2-b
space cp2
domain 0 pi/4
alpha 2*cot(2*r)
lambda cot(r - pi/4)
nu -tan(r - pi/4)
description tube of radius r over the complex quadric
end

family ch2-a0
space ch2
domain -inf inf
alpha 2
lambda 1
nu 1
description horosphere, constant in r
end

family ch2-a1
space ch2
domain 0 inf
alpha 2*coth(2*r)
lambda coth(r)
nu coth(r)
description geodesic sphere of radius r
end

family ch2-a1p
space ch2
domain 0 inf
alpha 2*coth(2*r)
lambda tanh(r)
nu tanh(r)
description tube of radius r over a totally geodesic complex hyperbolic line
end

family ch2-b
space ch2
domain 0 inf
alpha 2*tanh(2*r)
lambda coth(r)
nu tanh(r)
description tube of radius r around a totally geodesic real hyperbolic plane
end
)";

std::string lower(std::string_view s) {
  std::string out(s);
  std::ranges::transform(out, out.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

double eval_in_r(const SyntaxNode& n, double r) {
  return eval_formula(n, [&](const std::string& name) -> double {
    if (name == "r") return r;
    throw Error(ErrorCode::Catalog, "unknown symbol '" + name + "' in curvature formula");
  });
}

double eval_constant(std::string_view text) {
  return eval_formula(parse_syntax(text), [](const std::string& name) -> double {
    throw Error(ErrorCode::Catalog, "unknown symbol '" + name + "' in domain bound");
  });
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string format_bound(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view builtin_catalog_text() { return kBuiltin; }

ModelSpace ModelSpace::parse(std::string_view s) {
  const std::string l = lower(s);
  if (l == "cp2") return cp2();
  if (l == "ch2") return ch2();
  throw Error(ErrorCode::InvalidArgument, "unknown model space '" + std::string(s) + "' (expected cp2 or ch2)");
}

double hopf_relation_residual(double alpha, double lambda, double nu, double c) {
  return lambda * nu - alpha / 2 * (lambda + nu) - c / 4;
}

// ------------------------------------------------------ HypersurfaceFamily

HypersurfaceFamily::HypersurfaceFamily(std::string id, ModelSpace space, double lo, double hi, std::string alpha,
                                       std::string lambda, std::string nu, std::string description)
    : id_(std::move(id)),
      space_(std::move(space)),
      lo_(lo),
      hi_(hi),
      alpha_text_(std::move(alpha)),
      lambda_text_(std::move(lambda)),
      nu_text_(std::move(nu)),
      description_(std::move(description)) {
  if (!(lo_ < hi_)) throw Error(ErrorCode::Catalog, "family " + id_ + ": empty domain");
  alpha_ = parse_syntax(alpha_text_);
  lambda_ = parse_syntax(lambda_text_);
  nu_ = parse_syntax(nu_text_);
  for (const SyntaxNode* n : {&alpha_, &lambda_, &nu_})
    for (const auto& name : collect_identifiers(*n))
      if (name != "r" && name != "pi")
        throw Error(ErrorCode::Catalog, "family " + id_ + ": formula uses '" + name + "', only r is allowed");
}

Curvatures HypersurfaceFamily::at(double r) const {
  if (!contains(r))
    throw Error(ErrorCode::Domain, "r = " + format_bound(r) + " outside the domain (" + format_bound(lo_) + ", " +
                                       format_bound(hi_) + ") of " + id_);
  Curvatures k{eval_in_r(alpha_, r), eval_in_r(lambda_, r), eval_in_r(nu_, r)};
  if (!std::isfinite(k.alpha) || !std::isfinite(k.lambda) || !std::isfinite(k.nu))
    throw Error(ErrorCode::Domain, "curvatures of " + id_ + " are not finite at r = " + format_bound(r));
  return k;
}

std::pair<double, double> HypersurfaceFamily::validation_interval() const {
  const bool lo_inf = std::isinf(lo_), hi_inf = std::isinf(hi_);
  if (lo_inf && hi_inf) return {-5.0, 5.0};
  if (hi_inf) return {lo_ + 0.05, lo_ + 5.0};
  if (lo_inf) return {hi_ - 5.0, hi_ - 0.05};
  const double pad = 0.02 * (hi_ - lo_);
  return {lo_ + pad, hi_ - pad};
}

std::vector<double> HypersurfaceFamily::sample_radii(int n) const {
  auto [a, b] = validation_interval();
  std::vector<double> out;
  if (n == 1) return {a};
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
  return out;
}

void validate_family(const HypersurfaceFamily& f, double tol, int samples) {
  for (double r : f.sample_radii(samples)) {
    Curvatures k = f.at(r);
    double res = hopf_relation_residual(k.alpha, k.lambda, k.nu, f.space().c);
    if (!(std::abs(res) < tol)) {
      std::ostringstream os;
      os << "family " << f.id() << " fails the Hopf relation at r = " << r << ": residual " << res;
      throw Error(ErrorCode::Catalog, os.str());
    }
  }
}

// ----------------------------------------------------------------- Catalog

Catalog Catalog::builtin() { return parse(kBuiltin); }

Catalog Catalog::parse(std::string_view text, double tol_oracle) {
  Catalog cat;
  bool have_version = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  struct Pending {
    std::string id;
    std::map<std::string, std::string> fields;
    int line = 0;
  };
  std::optional<Pending> cur;

  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::Catalog, "catalog line " + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto sp = t.find_first_of(" \t");
    const std::string key = t.substr(0, sp);
    const std::string value = sp == std::string::npos ? "" : trim(std::string_view(t).substr(sp));

    if (!have_version) {
      if (key != "catalog-version") fail("expected 'catalog-version'");
      int v = 0;
      try {
        v = std::stoi(value);
      } catch (const std::exception&) {
        fail("bad version '" + value + "'");
      }
      if (v != kVersion) fail("unsupported catalog version " + value);
      cat.version_ = v;
      have_version = true;
      continue;
    }
    if (key == "family") {
      if (cur) fail("family " + cur->id + " is missing 'end'");
      if (value.empty()) fail("family needs an id");
      for (const auto& f : cat.families_)
        if (f.id() == value) fail("duplicate family " + value);
      cur = Pending{value, {}, lineno};
      continue;
    }
    if (!cur) fail("'" + key + "' outside a family block");
    if (key == "end") {
      for (const char* need : {"space", "domain", "alpha", "lambda", "nu"})
        if (!cur->fields.contains(need)) fail("family " + cur->id + " has no '" + need + "'");
      std::istringstream dom(cur->fields["domain"]);
      std::string lo, hi, extra;
      if (!(dom >> lo >> hi) || (dom >> extra)) fail("domain needs two bounds");
      try {
        HypersurfaceFamily fam(cur->id, ModelSpace::parse(cur->fields["space"]), eval_constant(lo), eval_constant(hi),
                               cur->fields["alpha"], cur->fields["lambda"], cur->fields["nu"],
                               cur->fields["description"]);
        validate_family(fam, tol_oracle);
        cat.families_.push_back(std::move(fam));
      } catch (const Error& e) {
        throw Error(ErrorCode::Catalog, "catalog family at line " + std::to_string(cur->line) + ": " + e.what());
      }
      cur.reset();
      continue;
    }
    if (key != "space" && key != "domain" && key != "alpha" && key != "lambda" && key != "nu" &&
        key != "description")
      fail("unknown field '" + key + "'");
    if (cur->fields.contains(key)) fail("repeated field '" + key + "'");
    cur->fields[key] = value;
  }
  if (!have_version) throw Error(ErrorCode::Catalog, "empty catalog");
  if (cur) throw Error(ErrorCode::Catalog, "family " + cur->id + " is missing 'end'");
  return cat;
}

Catalog Catalog::load(const std::string& path, double tol_oracle) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), tol_oracle);
}

const HypersurfaceFamily& Catalog::find(std::string_view id) const {
  const std::string l = lower(id);
  for (const auto& f : families_)
    if (f.id() == l || f.id() == id) return f;
  throw Error(ErrorCode::Catalog, "no family '" + std::string(id) + "' in the catalog");
}

std::string Catalog::to_text() const {
  std::ostringstream os;
  os << "catalog-version " << version_ << "\n";
  for (const auto& f : families_) {
    os << "\nfamily " << f.id() << "\nspace " << lower(f.space().name) << "\ndomain " << format_bound(f.lo()) << " "
       << format_bound(f.hi()) << "\nalpha " << f.alpha_text() << "\nlambda " << f.lambda_text() << "\nnu "
       << f.nu_text() << "\n";
    if (!f.description().empty()) os << "description " << f.description() << "\n";
    os << "end\n";
  }
  return os.str();
}

// -------------------------------------------------------------- evaluation

namespace {

struct SymbolicReports {
  ConditionReport report;
  Tensor11 ricci;  // einstein only
};

// Symbolic reports depend only on (c, kind); build each once.
const SymbolicReports& symbolic_report(int c, ConditionKind kind) {
  static std::mutex mu;
  static std::map<std::pair<int, ConditionKind>, SymbolicReports> cache;
  std::lock_guard lock(mu);
  auto key = std::pair{c, kind};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FrameContext ctx = build_hopf_context(Expr(c));
  SymbolicReports r{condition_equations(ctx, kind, star_ricci_closed(ctx), "S*"), Tensor11{}};
  if (kind == ConditionKind::Einstein) r.ricci = ricci(ctx);
  return cache.emplace(key, std::move(r)).first->second;
}

NumericBindings bindings_for(const SymbolicReports& sr, const Curvatures& k, ConditionKind kind, double L) {
  NumericBindings b{{Var(sym::alpha), k.alpha}, {Var(sym::lambda), k.lambda}, {Var(sym::nu), k.nu}};
  for (Var v : {Var(sym::lambda), Var(sym::nu)})
    for (FrameIndex d : kFrame) b[Var(derivative_name(d, v.name()))] = 0.0;
  if (kind == ConditionKind::PseudoParallel) b[Var(sym::L)] = L;
  if (kind == ConditionKind::Einstein) {
    double trace = 0;
    for (FrameIndex i : kFrame) trace += eval_numeric(sr.ricci(i, i), b);
    b[Var(sym::einstein)] = trace / 3;
  }
  return b;
}

}  // namespace

NumericReport evaluate_condition(const HypersurfaceFamily& f, double r, ConditionKind kind, double L) {
  NumericReport out;
  out.family = f.id();
  out.r = r;
  out.kind = kind;
  out.curvatures = f.at(r);
  const SymbolicReports& sr = symbolic_report(f.space().c, kind);
  const NumericBindings b = bindings_for(sr, out.curvatures, kind, L);
  for (const auto& e : sr.report.entries) {
    const double v = eval_numeric(e.equation, b);
    out.entries.push_back({e.label(), v});
    out.max_residual = std::max(out.max_residual, std::abs(v));
  }
  out.lambda_nu_plus_c = out.curvatures.lambda * out.curvatures.nu + f.space().c;
  return out;
}

SweepResult sweep(const HypersurfaceFamily& f, double r_min, double r_max, int samples, ConditionKind kind, double L) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "sweep needs at least 2 samples");
  if (!(r_min <= r_max)) throw Error(ErrorCode::InvalidArgument, "sweep needs r_min <= r_max");
  if (!f.contains(r_min) || !f.contains(r_max))
    throw Error(ErrorCode::Domain, "sweep range [" + format_bound(r_min) + ", " + format_bound(r_max) +
                                       "] is not inside the domain (" + format_bound(f.lo()) + ", " +
                                       format_bound(f.hi()) + ") of " + f.id());
  SweepResult out{f.id(), kind, {}};
  for (int i = 0; i < samples; ++i) {
    const double r = i == samples - 1 ? r_max : r_min + (r_max - r_min) * i / (samples - 1);
    NumericReport nr = evaluate_condition(f, r, kind, L);
    out.rows.push_back({r, nr.max_residual, nr.lambda_nu_plus_c});
  }
  return out;
}

}  // namespace starricci
