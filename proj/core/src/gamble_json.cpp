#include "lgamble/gamble_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json_codec.hpp"
#include "lgamble/error.hpp"

namespace lgamble {

namespace detail {

using nlohmann::json;

json to_json_value(const Gamble& g) {
    if (g.is_constant()) return json{{"constant", g.value()}};
    json prospects = json::array();
    for (const auto& p : g.prospects()) {
        prospects.push_back(json{{"likelihood", p.likelihood.value()}, {"reward", to_json_value(p.reward)}});
    }
    return json{{"prospects", std::move(prospects)}};
}

namespace {

double require_number(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
    if (!it->is_number()) throw ParseError(where + ": \"" + key + "\" must be a number");
    const double v = it->get<double>();
    if (!std::isfinite(v)) throw ParseError(where + ": \"" + key + "\" is not finite");
    return v;
}

Gamble parse_gamble(const json& j, LoadMode mode, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": gamble must be a JSON object");
    const bool has_constant = j.contains("constant");
    const bool has_prospects = j.contains("prospects");
    if (has_constant == has_prospects) {
        throw ParseError(where + ": expected exactly one of \"constant\" or \"prospects\"");
    }
    if (has_constant) return Gamble::constant(require_number(j, "constant", where));

    const json& list = j.at("prospects");
    if (!list.is_array()) throw ParseError(where + ": \"prospects\" must be an array");
    if (list.empty()) throw ParseError(where + ": \"prospects\" is empty");

    std::vector<double> raw;
    std::vector<Gamble> rewards;
    raw.reserve(list.size());
    rewards.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string here = where + ".prospects[" + std::to_string(i) + "]";
        const json& item = list[i];
        if (!item.is_object()) throw ParseError(here + ": prospect must be a JSON object");
        const double l = require_number(item, "likelihood", here);
        if (l < 0.0) throw ParseError(here + ": likelihood is negative");
        if (mode == LoadMode::strict && l > 1.0) throw ParseError(here + ": likelihood exceeds 1");
        auto reward = item.find("reward");
        if (reward == item.end()) throw ParseError(here + ": missing \"reward\"");
        raw.push_back(l);
        rewards.push_back(parse_gamble(*reward, mode, here + ".reward"));
    }

    std::vector<Prospect> prospects;
    prospects.reserve(raw.size());
    if (mode == LoadMode::strict) {
        for (std::size_t i = 0; i < raw.size(); ++i) prospects.push_back({Likelihood(raw[i]), rewards[i]});
        try {
            return Gamble::compound(std::move(prospects));
        } catch (const InvalidGambleError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    auto normalized = normalize_likelihoods(raw);
    for (std::size_t i = 0; i < raw.size(); ++i) prospects.push_back({normalized[i], rewards[i]});
    return Gamble::compound(std::move(prospects));
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

ModelSpec::OutcomeMap parse_outcome_map(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_object()) {
        throw ParseError(std::string("model: \"") + key + "\" must be an object");
    }
    ModelSpec::OutcomeMap out;
    for (const auto& [name, value] : it->items()) {
        if (!value.is_number()) throw ParseError(std::string("model: ") + key + "." + name + " must be a number");
        out.emplace(name, value.get<double>());
    }
    return out;
}

}  // namespace

Gamble gamble_from_json_value(const json& j, LoadMode mode) { return parse_gamble(j, mode, "$"); }

}  // namespace detail

Gamble gamble_from_json(std::string_view text, LoadMode mode) {
    return detail::gamble_from_json_value(detail::parse_document(text), mode);
}

std::string gamble_to_json(const Gamble& g, int indent) { return detail::to_json_value(g).dump(indent); }

ModelSpec model_from_json(std::string_view text) {
    const auto j = detail::parse_document(text);
    if (!j.is_object()) throw ParseError("model must be a JSON object");
    return ModelSpec(detail::parse_outcome_map(j, "probabilities"), detail::parse_outcome_map(j, "payoff"));
}

std::string model_to_json(const ModelSpec& model, int indent) {
    nlohmann::json j;
    j["probabilities"] = nlohmann::json::object();
    j["payoff"] = nlohmann::json::object();
    for (const auto& [k, v] : model.probabilities()) j["probabilities"][k] = v;
    for (const auto& [k, v] : model.payoff()) j["payoff"][k] = v;
    return j.dump(indent);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

Gamble read_gamble_file(const std::filesystem::path& path, LoadMode mode) {
    return gamble_from_json(read_text_file(path), mode);
}

ModelSpec read_model_file(const std::filesystem::path& path) { return model_from_json(read_text_file(path)); }

}  // namespace lgamble
