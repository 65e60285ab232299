#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starricci/conditions.hpp"
#include "starricci/syntax.hpp"

namespace starricci {

struct ModelSpace {
  std::string name;  // "CP2" or "CH2"
  int c = 4;

  static ModelSpace cp2() { return {"CP2", 4}; }
  static ModelSpace ch2() { return {"CH2", -4}; }
  /// Accepts "cp2"/"ch2" in any case.
  static ModelSpace parse(std::string_view s);
  friend bool operator==(const ModelSpace&, const ModelSpace&) = default;
};

struct Curvatures {
  double alpha = 0, lambda = 0, nu = 0;
};

/// lambda*nu - (alpha/2)(lambda + nu) - c/4.
double hopf_relation_residual(double alpha, double lambda, double nu, double c);

/// Closed-form principal curvatures of a one-parameter family of Hopf
/// hypersurfaces, as formulas in the single symbol r.
class HypersurfaceFamily {
 public:
  HypersurfaceFamily(std::string id, ModelSpace space, double lo, double hi, std::string alpha, std::string lambda,
                     std::string nu, std::string description);

  const std::string& id() const noexcept { return id_; }
  const ModelSpace& space() const noexcept { return space_; }
  /// Open interval (lo, hi); either end may be infinite.
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  const std::string& description() const noexcept { return description_; }
  const std::string& alpha_text() const noexcept { return alpha_text_; }
  const std::string& lambda_text() const noexcept { return lambda_text_; }
  const std::string& nu_text() const noexcept { return nu_text_; }

  bool contains(double r) const noexcept { return lo_ < r && r < hi_; }
  /// Throws Domain outside the open interval or when a value is not finite.
  Curvatures at(double r) const;

  /// Compact interval used for load-time validation: bounded domains lose 2%
  /// of their width at each end, a half-line (a, inf) becomes [a+0.05, a+5],
  /// the whole line becomes [-5, 5].
  std::pair<double, double> validation_interval() const;

  /// `n` uniformly spaced radii over the validation interval.
  std::vector<double> sample_radii(int n) const;

 private:
  std::string id_;
  ModelSpace space_;
  double lo_, hi_;
  std::string alpha_text_, lambda_text_, nu_text_, description_;
  SyntaxNode alpha_, lambda_, nu_;
};

/// Versioned plain-text family catalog:
///
///   catalog-version 1
///   family <id>
///   space cp2|ch2
///   domain <lo> <hi>
///   alpha <formula in r>
///   lambda <formula in r>
///   nu <formula in r>
///   description <free text>
///   end
///
/// '#' starts a comment line. Every family is checked against the Hopf
/// relation at load time; a failure aborts loading.
class Catalog {
 public:
  static constexpr int kVersion = 1;
  static constexpr int kValidationSamples = 100;

  static Catalog builtin();
  static Catalog parse(std::string_view text, double tol_oracle = 1e-9);
  static Catalog load(const std::string& path, double tol_oracle = 1e-9);

  int version() const noexcept { return version_; }
  const std::vector<HypersurfaceFamily>& families() const noexcept { return families_; }
  const HypersurfaceFamily& find(std::string_view id) const;  // throws Catalog
  std::string to_text() const;

 private:
  int version_ = kVersion;
  std::vector<HypersurfaceFamily> families_;
};

/// Text of the built-in catalog.
std::string_view builtin_catalog_text();

/// Throws Catalog if the family misses the Hopf relation by `tol` or more at
/// any of `samples` radii of its validation interval.
void validate_family(const HypersurfaceFamily& f, double tol, int samples = Catalog::kValidationSamples);

struct NumericEntry {
  std::string label;
  double value = 0;
};

struct NumericReport {
  std::string family;
  double r = 0;
  ConditionKind kind = ConditionKind::Parallel;
  Curvatures curvatures;
  std::vector<NumericEntry> entries;
  double max_residual = 0;
  double lambda_nu_plus_c = 0;
};

/// The chosen condition on S* (the Ricci tensor for einstein) evaluated at
/// radius r. Formal derivatives are bound to zero since the principal
/// curvatures of these families are constant on each hypersurface. For
/// pseudo-parallelism L is bound to `L`; for einstein lambda_E is tr(S)/3.
NumericReport evaluate_condition(const HypersurfaceFamily& f, double r, ConditionKind kind, double L = 0);

struct SweepRow {
  double r = 0;
  double max_residual = 0;
  double lambda_nu_plus_c = 0;
};

struct SweepResult {
  std::string family;
  ConditionKind kind = ConditionKind::Parallel;
  std::vector<SweepRow> rows;
};

/// Uniform grid of `samples` radii from r_min to r_max inclusive. The interval
/// must lie inside the open domain and samples must be at least 2.
SweepResult sweep(const HypersurfaceFamily& f, double r_min, double r_max, int samples, ConditionKind kind,
                  double L = 0);

}  // namespace starricci
