#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "starricci/catalog.hpp"
#include "starricci/conditions.hpp"
#include "starricci/proof.hpp"

namespace starricci {

inline constexpr std::string_view kArtifactVersion = "1.0.0";

struct RunConfig {
  double tol_oracle = 1e-9;
  double tol_witness = 1e-6;
  int samples = 100;
  std::string catalog_path;  // empty: built-in catalog

  /// Throws InvalidArgument unless tolerances are positive and samples >= 2.
  void validate() const;
};

/// Self-describing output of one command. The payload is the single source
/// for both renderings, so text and JSON always carry the same data.
struct Report {
  static constexpr int kSchemaVersion = 1;

  std::string command;  // echo of the invocation
  std::string kind;     // "prove", "check", "sweep", "expr-eval", "expr-solve"
  std::string artifact_version{kArtifactVersion};
  int catalog_version = Catalog::kVersion;
  nlohmann::ordered_json payload;
  std::string status;  // human summary, e.g. the proof verdict
  bool passed = true;

  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);  // throws Parse on schema mismatch
  std::string to_json_text() const;
  std::string to_text() const;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::ordered_json to_json(const ProofTrace& t);
nlohmann::ordered_json to_json(const ConditionReport& r);
nlohmann::ordered_json to_json(const SweepResult& s);

}  // namespace starricci
