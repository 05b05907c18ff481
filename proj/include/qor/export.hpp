#pragma once

// Structured (JSON) form of views, items, batteries and solutions. Field
// names follow the C++ types; the service and the trainer UI exchange
// exactly these objects.

#include <json.hpp>

#include "qor/items.hpp"
#include "qor/solver.hpp"

namespace qor {

nlohmann::json view_to_json(const CubeView& view);
/// Throws std::invalid_argument on malformed input.
CubeView view_from_json(const nlohmann::json& j);

/// Visible known sides of a state, keyed by location.
nlohmann::json state_to_json(const CubeState& state);

nlohmann::json item_to_json(const Item& item, bool include_key = true);
Item item_from_json(const nlohmann::json& j);

nlohmann::json battery_to_json(const Battery& battery, bool include_keys = true);
Battery battery_from_json(const nlohmann::json& j);

/// Verdict, explanation fields and the left view replayed step by step
/// along the witness path (one visible-state snapshot per step).
nlohmann::json solution_to_json(const Item& item, const Solution& solution);

}  // namespace qor
