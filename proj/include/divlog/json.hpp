#pragma once

#include <json.hpp>

#include "divlog/factorization.hpp"
#include "divlog/natural.hpp"
#include "divlog/oracle.hpp"

namespace divlog {

/// Naturals that fit in 64 bits become JSON numbers; larger ones become decimal strings.
inline nlohmann::json to_json(const Natural& n) {
    if (const auto small = n.to_u64()) return *small;
    return n.str();
}

inline nlohmann::json to_json(const ExponentVector& v) {
    auto arr = nlohmann::json::array();
    for (const auto& [p, e] : v.terms()) arr.push_back({{"prime", to_json(p)}, {"exponent", e}});
    return arr;
}

inline nlohmann::json to_json(const LawReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;

    auto skipped = nlohmann::json::array();
    for (const auto& s : r.skipped)
        skipped.push_back({{"bottom", to_json(s.bottom)}, {"top", to_json(s.top)}, {"size", s.size}});

    auto counterexamples = nlohmann::json::array();
    for (const auto& c : r.counterexamples) {
        nlohmann::json inputs = nlohmann::json::array();
        for (const auto& n : c.inputs) inputs.push_back(to_json(n));
        nlohmann::json entry{{"inputs", inputs}, {"lhs", c.lhs}, {"rhs", c.rhs}};
        if (!c.variant.empty()) entry["variant"] = c.variant;
        counterexamples.push_back(std::move(entry));
    }

    return {{"law_name", r.law_name},         {"parameters", params}, {"cases_checked", r.cases_checked},
            {"failures", r.failures},         {"skipped", skipped},   {"counterexamples", counterexamples},
            {"success", r.success()}};
}

}  // namespace divlog
