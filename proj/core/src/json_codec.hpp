#pragma once
// nlohmann/json conversions shared by the translation units in core/src.

#include <nlohmann/json.hpp>

#include "lgamble/gamble.hpp"
#include "lgamble/gamble_json.hpp"

namespace lgamble::detail {

[[nodiscard]] nlohmann::json to_json_value(const Gamble& g);
[[nodiscard]] Gamble gamble_from_json_value(const nlohmann::json& j, LoadMode mode);

}  // namespace lgamble::detail
