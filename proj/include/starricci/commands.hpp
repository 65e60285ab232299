#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starricci/report.hpp"

namespace starricci {

/// Proof replay. `space` is "cp2", "ch2" or empty for both. A failing step
/// yields a report with passed = false and the failure text in the payload.
Report cmd_prove(std::string_view target, std::string_view space, const RunConfig& cfg, const Catalog& catalog);

/// Symbolic condition report. `tensor` is "star-ricci" or "ricci", `context`
/// "nonhopf" or "hopf"; assumptions are "name=expr" bindings substituted into
/// every equation. `L` is the pseudo-parallel function (default the symbol L).
Report cmd_check(std::string_view tensor, std::string_view condition, std::string_view context,
                 const std::vector<std::string>& assumptions, std::optional<std::string> L = std::nullopt);

/// Radius sweep over a catalog family; each row is flagged as a witness when
/// its max residual exceeds cfg.tol_witness.
Report cmd_sweep(std::string_view family, double r_min, double r_max, int samples, std::string_view condition,
                 const RunConfig& cfg, const Catalog& catalog, double L = 0);

/// Exact evaluation: unbound identifiers stay symbolic.
Report cmd_expr_eval(std::string_view text, const std::vector<std::string>& bindings);
Report cmd_expr_solve(std::string_view text, std::string_view unknown);

}  // namespace starricci
