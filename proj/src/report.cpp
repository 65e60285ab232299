#include "starricci/report.hpp"

#include <iomanip>
#include <sstream>

#include "starricci/error.hpp"

namespace starricci {

using json = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (!(tol_oracle > 0)) throw Error(ErrorCode::InvalidArgument, "tol-oracle must be positive");
  if (!(tol_witness > 0)) throw Error(ErrorCode::InvalidArgument, "tol-witness must be positive");
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "samples must be at least 2");
}

// ------------------------------------------------------------ serializers

namespace {

json facts(const std::vector<Fact>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f.to_string());
  return a;
}

}  // namespace

json to_json(const ProofTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json j{{"kind", step_kind_name(s.kind)},
           {"label", s.label},
           {"projection", s.projection},
           {"equation", s.equation.to_string()},
           {"justification", s.justification},
           {"conclusion", s.conclusion},
           {"hypotheses", facts(s.hypotheses)}};
    if (!s.values.empty()) {
      json v = json::object();
      for (const auto& [k, x] : s.values) v[k] = x;
      j["values"] = v;
    }
    steps.push_back(std::move(j));
  }
  return {{"name", t.name},       {"status", proof_status_name(t.status)}, {"hypotheses", facts(t.hypotheses)},
          {"steps", steps},       {"outcome", facts(t.outcome)},           {"verdict", t.verdict}};
}

json to_json(const ConditionReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j{{"label", e.label()}, {"x", frame_name(e.x)}};
    if (e.x2) j["x2"] = frame_name(*e.x2);
    if (e.y) j["y"] = frame_name(*e.y);
    j["projection"] = frame_name(e.proj);
    j["equation"] = e.equation.to_string();
    entries.push_back(std::move(j));
  }
  json out{{"condition", condition_name(r.kind)}, {"tensor", r.tensor}};
  if (r.L) out["L"] = r.L->to_string();
  out["count"] = r.entries.size();
  out["entries"] = entries;
  return out;
}

json to_json(const SweepResult& s) {
  json rows = json::array();
  for (const auto& row : s.rows)
    rows.push_back({{"r", row.r}, {"max_residual", row.max_residual}, {"lambda_nu_plus_c", row.lambda_nu_plus_c}});
  return {{"family", s.family}, {"condition", condition_name(s.kind)}, {"rows", rows}};
}

// ------------------------------------------------------------------ Report

json Report::to_json() const {
  return {{"schema", "starricci-report"},
          {"schema_version", kSchemaVersion},
          {"command", command},
          {"kind", kind},
          {"artifact_version", artifact_version},
          {"catalog_version", catalog_version},
          {"payload", payload},
          {"status", status},
          {"passed", passed}};
}

Report Report::from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != "starricci-report")
      throw ParseError(0, "not a starricci report");
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw ParseError(0, "unsupported report schema version " + j.at("schema_version").dump());
    Report r;
    r.command = j.at("command").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.artifact_version = j.at("artifact_version").get<std::string>();
    r.catalog_version = j.at("catalog_version").get<int>();
    r.payload = j.at("payload");
    r.status = j.at("status").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
}

std::string Report::to_json_text() const { return to_json().dump(2) + "\n"; }

namespace {

std::string num(const json& v) {
  std::ostringstream os;
  os << std::setprecision(12) << v.get<double>();
  return os.str();
}

std::string join_strings(const json& a) {
  std::string out;
  for (const auto& s : a) out += (out.empty() ? "" : ", ") + s.get<std::string>();
  return out.empty() ? "none" : out;
}

void render_trace(std::ostream& os, const json& t) {
  os << "== " << t["name"].get<std::string>() << ": " << t["status"].get<std::string>() << "\n";
  os << "   hypotheses: " << join_strings(t["hypotheses"]) << "\n";
  for (const auto& s : t["steps"]) {
    os << "   [" << s["label"].get<std::string>() << "] " << s["kind"].get<std::string>();
    if (!s["projection"].get<std::string>().empty()) os << "  " << s["projection"].get<std::string>();
    os << "\n      " << s["equation"].get<std::string>() << "\n";
    os << "      by: " << s["justification"].get<std::string>() << "\n";
    if (s.contains("values")) {
      os << "      values:";
      for (const auto& [k, v] : s["values"].items()) os << " " << k << "=" << num(v);
      os << "\n";
    }
    os << "      => " << s["conclusion"].get<std::string>() << "\n";
  }
  if (!t["outcome"].empty()) os << "   outcome: " << join_strings(t["outcome"]) << "\n";
  os << "   verdict: " << t["verdict"].get<std::string>() << "\n";
}

void render_conditions(std::ostream& os, const json& p) {
  os << p["tensor"].get<std::string>() << " " << p["condition"].get<std::string>() << " in the "
     << p["context"].get<std::string>() << " context";
  if (p.contains("L")) os << ", L = " << p["L"].get<std::string>();
  os << "\n";
  if (!p["assumptions"].empty()) os << "assumptions: " << join_strings(p["assumptions"]) << "\n";
  os << p["count"].get<std::size_t>() << " equations\n";
  for (const auto& e : p["entries"])
    os << "  " << std::left << std::setw(16) << e["label"].get<std::string>() << e["equation"].get<std::string>()
       << "\n";
}

void render_sweep(std::ostream& os, const json& p) {
  os << "family " << p["family"].get<std::string>() << ", condition " << p["condition"].get<std::string>()
     << ", witness tolerance " << num(p["tol_witness"]) << "\n";
  os << std::left << std::setw(20) << "r" << std::setw(22) << "max residual" << std::setw(22) << "lambda*nu + c"
     << "witness\n";
  for (const auto& row : p["rows"])
    os << std::left << std::setw(20) << num(row["r"]) << std::setw(22) << num(row["max_residual"]) << std::setw(22)
       << num(row["lambda_nu_plus_c"]) << (row["witness"].get<bool>() ? "yes" : "no") << "\n";
}

void render_expr(std::ostream& os, const std::string& kind, const json& p) {
  os << "expression: " << p["input"].get<std::string>() << "\n";
  if (kind == "expr-eval") {
    if (!p["bindings"].empty()) os << "bindings: " << join_strings(p["bindings"]) << "\n";
    os << "value: " << p["value"].get<std::string>() << "\n";
    if (p.contains("numeric")) os << "numeric: " << num(p["numeric"]) << "\n";
    return;
  }
  os << "unknown: " << p["unknown"].get<std::string>() << "\nform: " << p["form"].get<std::string>() << "\n";
  for (const char* k : {"a", "b", "c", "discriminant"})
    if (p.contains(k)) os << k << ": " << p[k].get<std::string>() << "\n";
  for (const auto& r : p["roots"]) os << "root: " << r.get<std::string>() << "\n";
  os << "condition: " << p["condition"].get<std::string>() << "\n";
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "starricci " << artifact_version << " | " << command << " | catalog-version " << catalog_version << "\n";
  if (payload.contains("error")) os << "error: " << payload["error"].get<std::string>() << "\n";
  if (kind == "prove") {
    for (const auto& t : payload["traces"]) render_trace(os, t);
  } else if (kind == "check") {
    render_conditions(os, payload);
  } else if (kind == "sweep") {
    render_sweep(os, payload);
  } else if (kind == "expr-eval" || kind == "expr-solve") {
    render_expr(os, kind, payload);
  }
  os << "status: " << status << (passed ? "" : " (FAILED)") << "\n";
  return os.str();
}

}  // namespace starricci
