#pragma once

#include <json.hpp>

#include "eklab/chains/config_maps.hpp"

namespace eklab {

// Canonical sorted JSON form of formal sums and wedges: generator string
// -> integer coefficient. nlohmann::json objects keep keys sorted, and all
// generator strings here are canonical, so equal values serialize to equal
// bytes (used by report emission and golden-file tests).

inline nlohmann::json to_json(const Wedge2& w) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, c] : w.terms()) j[k.str()] = c;
    return j;
}

inline nlohmann::json to_json(const Wedge3& w) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, c] : w.terms()) j[k.str()] = c;
    return j;
}

inline nlohmann::json to_json(const TensorW2F& w) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, c] : w.terms()) j[k.str()] = c;
    return j;
}

inline nlohmann::json to_json(const FormalSum<Rational>& s) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, c] : s.terms()) j["{" + k.get_str() + "}"] = c;
    return j;
}

inline nlohmann::json to_json(const FormalSum<QtElem>& s) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, c] : s.terms()) j["{" + k.str() + "}"] = c;
    return j;
}

inline nlohmann::json to_json(const B2TensorQ& s) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, c] : s.terms()) {
        Factored leg;
        leg.exp = k.second.exp;
        j["{" + k.first.get_str() + "} \xE2\x8A\x97 " + leg.str()] = c;
    }
    return j;
}

} // namespace eklab
