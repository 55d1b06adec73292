#pragma once

#include <string>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "frontspeed/medium.hpp"

namespace frontspeed {

using AnyMedium = std::variant<LineMedium, ShearMedium, CellMedium2D>;

/// Parsed medium document: geometry plus the reaction shape.
struct MediumDocument {
  AnyMedium medium;
  ReactionProfile reaction;
};

/// Strict parse of the medium schema. Geometry is inferred from the field
/// keys: "a" selects a 1D line medium, "alpha"/"d" a shear medium, "a11"
/// (with "a12"/"a22") a full 2D cell. Unknown keys are rejected with a
/// path-to-field message (ConfigError).
MediumDocument parse_medium(const nlohmann::json& document);
MediumDocument parse_medium_string(const std::string& text);
MediumDocument load_medium_file(const std::string& path);

nlohmann::json medium_to_json(const MediumDocument& document);

std::string medium_id(const AnyMedium& medium);

}  // namespace frontspeed
