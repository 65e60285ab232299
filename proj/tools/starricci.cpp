// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starricci/starricci.h"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct Options {
  std::string format = "text";
  std::string out;
  double tol_oracle = 1e-9;
  double tol_witness = 1e-6;
  int samples = 100;
  std::string catalog;

  std::string target, space;
  std::string tensor, condition, context, L;
  std::vector<std::string> extra;
  std::string family;
  double r_min = 0, r_max = 0, L_value = 0;
  int sweep_samples = 0;
  std::string text, unknown;
};

int report_error(sr_status s) {
  std::cerr << "error: " << sr_status_string(s) << ": " << sr_last_error_message() << "\n";
  return kExitError;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

int emit(sr_report* report, const Options& o) {
  char* text = nullptr;
  sr_status s = sr_report_render(report, o.format == "json" ? SR_FORMAT_JSON : SR_FORMAT_TEXT, &text);
  if (s != SR_OK) {
    sr_report_destroy(report);
    return report_error(s);
  }
  const int passed = sr_report_passed(report);
  sr_report_destroy(report);
  if (o.out.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    if (!f) {
      sr_string_free(text);
      std::cerr << "error: cannot write " << o.out << "\n";
      return kExitError;
    }
  }
  sr_string_free(text);
  return passed ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact replay of the *-Ricci parallelism argument for real hypersurfaces in CP2 and CH2"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(sr_version()));

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "Write the report to PATH");
  app.add_option("--tol-oracle", o.tol_oracle, "Tolerance for oracle identities")->check(CLI::PositiveNumber);
  app.add_option("--tol-witness", o.tol_witness, "Threshold for nonzero witnesses")->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "Radii per family for oracle and type-B checks")->check(CLI::Range(2, 1000000));
  app.add_option("--catalog", o.catalog, "Family catalog file")->check(CLI::ExistingFile);

  auto* prove = app.add_subcommand("prove", "Replay a proof branch");
  prove->add_option("target", o.target, "nonhopf | hopf | quadratic | type-b | all")
      ->required()
      ->check(CLI::IsMember({"nonhopf", "hopf", "quadratic", "type-b", "all"}));
  prove->add_option("--space", o.space, "cp2 or ch2 (default both)")->check(CLI::IsMember({"cp2", "ch2"}));

  auto* check = app.add_subcommand("check", "Emit a symbolic condition report");
  check->add_option("tensor", o.tensor, "star-ricci | ricci")->required()->check(CLI::IsMember({"star-ricci", "ricci"}));
  check->add_option("condition", o.condition, "parallel | xi-parallel | d-parallel | semi-parallel | pseudo-parallel | einstein")
      ->required();
  check->add_option("context", o.context, "nonhopf | hopf")->required()->check(CLI::IsMember({"nonhopf", "hopf"}));
  check->add_option("assumptions", o.extra, "name=value substitutions");
  auto* check_L = check->add_option("--L", o.L, "Pseudo-parallel function (expression)");

  auto* sweep = app.add_subcommand("sweep", "Evaluate a condition on S* across a catalog family");
  sweep->add_option("family", o.family)->required();
  sweep->add_option("r_min", o.r_min)->required();
  sweep->add_option("r_max", o.r_max)->required();
  sweep->add_option("n", o.sweep_samples, "Grid size")->required()->check(CLI::Range(2, 1000000));
  sweep->add_option("condition", o.condition)->required();
  sweep->add_option("--L", o.L_value, "Pseudo-parallel constant");

  auto* expr = app.add_subcommand("expr", "Exact expression tools");
  expr->require_subcommand(1);
  auto* eval = expr->add_subcommand("eval", "Evaluate with bindings");
  eval->add_option("text", o.text)->required();
  eval->add_option("bindings", o.extra, "name=value");
  auto* solve = expr->add_subcommand("solve", "Solve a degree <= 2 equation");
  solve->add_option("text", o.text)->required();
  solve->add_option("unknown", o.unknown)->required();

  CLI11_PARSE(app, argc, argv);

  sr_session* session = nullptr;
  sr_status s = sr_session_create(&session);
  if (s != SR_OK) return report_error(s);
  struct Closer {
    sr_session* s;
    ~Closer() { sr_session_destroy(s); }
  } closer{session};

  if ((s = sr_session_set_tolerances(session, o.tol_oracle, o.tol_witness)) != SR_OK) return report_error(s);
  if ((s = sr_session_set_samples(session, o.samples)) != SR_OK) return report_error(s);
  if (!o.catalog.empty() && (s = sr_session_load_catalog(session, o.catalog.c_str())) != SR_OK) return report_error(s);

  sr_report* report = nullptr;
  if (*prove) {
    s = sr_prove(session, o.target.c_str(), o.space.empty() ? nullptr : o.space.c_str(), &report);
  } else if (*check) {
    auto a = c_strings(o.extra);
    s = sr_check(session, o.tensor.c_str(), o.condition.c_str(), o.context.c_str(), a.data(), a.size(),
                 check_L->count() ? o.L.c_str() : nullptr, &report);
  } else if (*sweep) {
    s = sr_sweep(session, o.family.c_str(), o.r_min, o.r_max, o.sweep_samples, o.condition.c_str(), o.L_value, &report);
  } else if (*eval) {
    auto b = c_strings(o.extra);
    s = sr_expr_eval(session, o.text.c_str(), b.data(), b.size(), &report);
  } else if (*solve) {
    s = sr_expr_solve(session, o.text.c_str(), o.unknown.c_str(), &report);
  }
  if (s != SR_OK) return report_error(s);
  return emit(report, o);
}
