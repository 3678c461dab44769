#pragma once

#include <string>

#include <json.hpp>

#include "steiner/body.hpp"

namespace steiner {

/// Body description schema (JSON object), recursive by construction:
///   {"dimension": n, "type": "ball", "radius": r}
///   {"dimension": n, "type": "ellipsoid", "semi_axes": [a1, ..., an]}
///   {"dimension": n, "type": "sum", "terms": [body, ...]}
///   {"dimension": n, "type": "offset", "inner": body, "shift": s}
///   {"dimension": n, "type": "complement", "inner": body, "c": c}
/// "dimension" is required at the top level and optional (but checked) on
/// nested bodies. Negative-shift offsets and complements have their summand
/// condition verified at parse time against a rule of the given level
/// (0 = per-dimension default); violations throw SummandViolationError.
ConvexBody parse_body(const nlohmann::json& doc, int quad_level = 0);

/// Parse the JSON document in the file at `path`.
ConvexBody load_body_file(const std::string& path, int quad_level = 0);

/// Serialize back to the schema above. Internal-only nodes (translations)
/// are rejected.
nlohmann::json body_to_json(const ConvexBody& body);

} // namespace steiner
