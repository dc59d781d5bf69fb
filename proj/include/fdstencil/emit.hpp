#pragma once

#include "fdstencil/error_bounds.hpp"
#include "fdstencil/stencil.hpp"

#include <json.hpp>

#include <string>

namespace fdstencil {

enum class EmitFormat { text, latex, c_expr, json };

/// Accepts "text", "latex", "c-expr", "json".
EmitFormat parse_emit_format(const std::string& name);

/// Renders the stencil formula in the requested format. Text and LaTeX show
/// the exact rational coefficients; the C expression spells them as
/// (p.0/q.0) so nothing is truncated to a decimal.
std::string render_stencil(const Stencil& stencil, EmitFormat format);

nlohmann::json stencil_to_json(const Stencil& stencil);

/// Rebuilds a stencil from its JSON form (nodes + derivative order are
/// authoritative; coefficients, when present, are checked against the
/// regenerated ones).
Stencil stencil_from_json(const nlohmann::json& j);

nlohmann::json bound_report_json(const ErrorModel& model);
nlohmann::json leading_term_json(const LeadingTerm& term);

/// "f'" for k = 1, "f''" for 2, "f'''" for 3, "f^(k)" beyond.
std::string derivative_label(int k);

}  // namespace fdstencil
