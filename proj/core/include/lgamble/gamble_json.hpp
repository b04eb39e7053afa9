#pragma once
// JSON encoding of gambles and models.
//
//   constant: {"constant": 0.5}
//   compound: {"prospects": [{"likelihood": 1.0, "reward": {"constant": 0.5}}, ...]}
//   model:    {"probabilities": {"head": 0.5, "tail": 0.5}, "payoff": {"head": 1.0, "tail": 0.0}}

#include <filesystem>
#include <string>
#include <string_view>

#include "lgamble/gamble.hpp"

namespace lgamble {

enum class LoadMode {
    normalize,  // rescale each prospect list by its maximum likelihood
    strict,     // reject any prospect list whose maximum is not 1
};

// Throws ParseError on malformed input, DegenerateEvidenceError on an all-zero
// prospect list, DomainError on constants outside [0,1].
[[nodiscard]] Gamble gamble_from_json(std::string_view text, LoadMode mode = LoadMode::normalize);

// Compact (indent < 0) or pretty-printed encoding. Doubles are written in
// shortest round-trip form, so encode(decode(encode(g))) == encode(g).
[[nodiscard]] std::string gamble_to_json(const Gamble& g, int indent = -1);

[[nodiscard]] ModelSpec model_from_json(std::string_view text);
[[nodiscard]] std::string model_to_json(const ModelSpec& model, int indent = -1);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
[[nodiscard]] Gamble read_gamble_file(const std::filesystem::path& path,
                                      LoadMode mode = LoadMode::normalize);
[[nodiscard]] ModelSpec read_model_file(const std::filesystem::path& path);

}  // namespace lgamble
