#pragma once

#include <json.hpp>

#include "confspace/multipoly.hpp"

namespace confspace {

/// [[coefficient-as-decimal-string, {variable: exponent}], ...] in canonical term order.
nlohmann::ordered_json poly_to_json(const MultiPoly& p);

/// Inverse of poly_to_json; throws nlohmann::json::exception or std::invalid_argument.
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace confspace
