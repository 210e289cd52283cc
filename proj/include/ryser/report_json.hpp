#pragma once

// nlohmann::json adapters for the report types. Objects use the default
// std::map-backed json, so keys are always emitted in sorted order.

#include <string>

#include <json.hpp>

#include "ryser/barker.hpp"
#include "ryser/circulant.hpp"
#include "ryser/criterion.hpp"

namespace ryser {

inline constexpr const char* kSchemaVersion = "1";

inline void to_json(nlohmann::json& j, const WitnessRecord& w) {
    j = {{"p", w.p},
         {"a", w.a},
         {"m", w.m},
         {"order", w.order},
         {"parity", std::string(to_string(w.parity))},
         {"j_index", w.j_index}};
}

inline void to_json(nlohmann::json& j, const CriterionReport& r) {
    j = {{"n", r.n},
         {"applicable", r.applicable},
         {"witnesses", r.witnesses},
         {"verdict", std::string(to_string(r.verdict))},
         {"rejection_primes", r.rejection_primes}};
    if (r.applicable) j["u"] = r.u();
    if (r.not_applicable_reason) j["reason"] = std::string(to_string(*r.not_applicable_reason));
}

inline void to_json(nlohmann::json& j, const SpectrumReport& s) {
    nlohmann::json eig = nlohmann::json::array();
    for (const auto& b : s.eigenvalues) eig.push_back({b.real(), b.imag()});
    j = {{"eigenvalues", eig},
         {"magnitudes", s.magnitudes},
         {"max_deviation", s.max_deviation},
         {"root_convention", SpectrumReport::root_convention}};
}

inline void to_json(nlohmann::json& j, const BarkerExclusionReport& b) {
    j = {{"criterion", b.criterion}, {"excludes_barker", b.excludes_barker}, {"note", b.note}};
}

/// Top-level document for single-shot commands.
inline nlohmann::json envelope(std::string command, nlohmann::json input, nlohmann::json result, long long timing_ms) {
    return {{"schema_version", kSchemaVersion},
            {"command", std::move(command)},
            {"input", std::move(input)},
            {"result", std::move(result)},
            {"timing_ms", timing_ms}};
}

}  // namespace ryser
