#include "starricci/starricci.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "starricci/commands.hpp"
#include "starricci/error.hpp"

struct sr_session {
  starricci::RunConfig config;
  starricci::Catalog catalog = starricci::Catalog::builtin();
};

struct sr_report {
  starricci::Report report;
};

namespace {

thread_local std::string g_last_error;

sr_status code_of(starricci::ErrorCode c) {
  using starricci::ErrorCode;
  switch (c) {
    case ErrorCode::Parse:
      return SR_ERR_PARSE;
    case ErrorCode::UnknownSymbol:
      return SR_ERR_UNKNOWN_SYMBOL;
    case ErrorCode::DivisionByZero:
      return SR_ERR_DIVISION_BY_ZERO;
    case ErrorCode::Inconsistent:
      return SR_ERR_INCONSISTENT;
    case ErrorCode::Domain:
      return SR_ERR_DOMAIN;
    case ErrorCode::InvalidArgument:
      return SR_ERR_INVALID_ARGUMENT;
    case ErrorCode::ProofFailure:
      return SR_ERR_PROOF_FAILURE;
    case ErrorCode::Catalog:
      return SR_ERR_CATALOG;
    case ErrorCode::Io:
      return SR_ERR_IO;
  }
  return SR_ERR_INTERNAL;
}

sr_status fail(sr_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs `f`, translating exceptions into status codes.
template <typename F>
sr_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return SR_OK;
  } catch (const starricci::Error& e) {
    return fail(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SR_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> strings(const char* const* v, size_t n) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) {
    if (!v[i]) throw starricci::Error(starricci::ErrorCode::InvalidArgument, "null string in list");
    out.emplace_back(v[i]);
  }
  return out;
}

sr_status null_arg(const char* what) { return fail(SR_ERR_INVALID_ARGUMENT, std::string(what) + " is null"); }

sr_status emit(sr_report** out, starricci::Report r) {
  *out = new sr_report{std::move(r)};
  return SR_OK;
}

}  // namespace

extern "C" {

const char* sr_version(void) { return "1.0.0"; }

const char* sr_status_string(sr_status status) {
  switch (status) {
    case SR_OK:
      return "ok";
    case SR_ERR_PARSE:
      return "parse error";
    case SR_ERR_UNKNOWN_SYMBOL:
      return "unknown symbol";
    case SR_ERR_DIVISION_BY_ZERO:
      return "division by zero";
    case SR_ERR_INCONSISTENT:
      return "inconsistent equation";
    case SR_ERR_DOMAIN:
      return "domain error";
    case SR_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SR_ERR_PROOF_FAILURE:
      return "proof failure";
    case SR_ERR_CATALOG:
      return "catalog error";
    case SR_ERR_IO:
      return "i/o error";
    case SR_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* sr_last_error_message(void) { return g_last_error.c_str(); }

void sr_string_free(char* s) { std::free(s); }

sr_status sr_session_create(sr_session** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new sr_session(); });
}

void sr_session_destroy(sr_session* session) { delete session; }

sr_status sr_session_set_tolerances(sr_session* session, double tol_oracle, double tol_witness) {
  if (!session) return null_arg("session");
  return guarded([&] {
    starricci::RunConfig c = session->config;
    c.tol_oracle = tol_oracle;
    c.tol_witness = tol_witness;
    c.validate();
    session->config = c;
  });
}

sr_status sr_session_set_samples(sr_session* session, int samples) {
  if (!session) return null_arg("session");
  return guarded([&] {
    starricci::RunConfig c = session->config;
    c.samples = samples;
    c.validate();
    session->config = c;
  });
}

sr_status sr_session_load_catalog(sr_session* session, const char* path) {
  if (!session) return null_arg("session");
  if (!path) return null_arg("path");
  return guarded([&] {
    session->catalog = starricci::Catalog::load(path, session->config.tol_oracle);
    session->config.catalog_path = path;
  });
}

sr_status sr_prove(sr_session* session, const char* target, const char* space, sr_report** out) {
  if (!session) return null_arg("session");
  if (!target) return null_arg("target");
  if (!out) return null_arg("out");
  return guarded([&] { emit(out, starricci::cmd_prove(target, space ? space : "", session->config, session->catalog)); });
}

sr_status sr_check(sr_session* session, const char* tensor, const char* condition, const char* context,
                   const char* const* assumptions, size_t n_assumptions, const char* L, sr_report** out) {
  if (!session) return null_arg("session");
  if (!tensor || !condition || !context) return null_arg("tensor, condition or context");
  if (n_assumptions && !assumptions) return null_arg("assumptions");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::optional<std::string> l;
    if (L) l = L;
    emit(out, starricci::cmd_check(tensor, condition, context, strings(assumptions, n_assumptions), l));
  });
}

sr_status sr_sweep(sr_session* session, const char* family, double r_min, double r_max, int samples,
                   const char* condition, double L, sr_report** out) {
  if (!session) return null_arg("session");
  if (!family || !condition) return null_arg("family or condition");
  if (!out) return null_arg("out");
  return guarded([&] {
    emit(out, starricci::cmd_sweep(family, r_min, r_max, samples, condition, session->config, session->catalog, L));
  });
}

sr_status sr_expr_eval(sr_session* session, const char* text, const char* const* bindings, size_t n_bindings,
                       sr_report** out) {
  if (!session) return null_arg("session");
  if (!text) return null_arg("text");
  if (n_bindings && !bindings) return null_arg("bindings");
  if (!out) return null_arg("out");
  return guarded([&] { emit(out, starricci::cmd_expr_eval(text, strings(bindings, n_bindings))); });
}

sr_status sr_expr_solve(sr_session* session, const char* text, const char* unknown, sr_report** out) {
  if (!session) return null_arg("session");
  if (!text || !unknown) return null_arg("text or unknown");
  if (!out) return null_arg("out");
  return guarded([&] { emit(out, starricci::cmd_expr_solve(text, unknown)); });
}

sr_status sr_report_render(const sr_report* report, sr_format format, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (format != SR_FORMAT_TEXT && format != SR_FORMAT_JSON)
      throw starricci::Error(starricci::ErrorCode::InvalidArgument, "unknown format");
    *out = dup_string(format == SR_FORMAT_JSON ? report->report.to_json_text() : report->report.to_text());
  });
}

int sr_report_passed(const sr_report* report) { return report && report->report.passed ? 1 : 0; }

sr_status sr_report_parse_json(const char* text, sr_report** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guarded([&] {
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw starricci::ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    emit(out, starricci::Report::from_json(j));
  });
}

void sr_report_destroy(sr_report* report) { delete report; }

}  // extern "C"
