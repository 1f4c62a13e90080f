#pragma once

#include <variant>
#include <vector>

#include <json.hpp>

#include "diamond/skew.hpp"

namespace diamond {

using Json = nlohmann::json;

// Signed integers (i -> i, i' -> -i, 0' -> "-0"), or {"m", "b"} objects when
// `extended` is set.
Json letter_to_json(Letter x, bool extended = false);
Letter letter_from_json(const Json& j);

Json to_json(const SlTableau& t);
Json to_json(const SpTableau& t);
using AnyTableau = std::variant<SlTableau, SpTableau>;
// {"n", "kind": "sl"|"sp", "columns": [[...], ...]}
AnyTableau tableau_from_json(const Json& j);
SpTableau sp_from_json(const Json& j);
SlTableau sl_from_json(const Json& j);

// Skew states add "inner" (vacated counts per column) and "star" (1-based
// [row, col] or null); the star cell itself is null inside its column.
Json to_json(const SlSkewTableau& t, bool extended = false);
Json to_json(const SpSkewTableau& t, bool extended = false);
SlSkewTableau sl_skew_from_json(const Json& j);
SpSkewTableau sp_skew_from_json(const Json& j);

Json trace_to_json(const std::vector<SpSkewTableau>& trace);
Json trace_to_json(const std::vector<SlSkewTableau>& trace);

}  // namespace diamond
