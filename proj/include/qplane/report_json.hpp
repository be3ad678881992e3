#pragma once

// JSON form of a verification report:
//   { "meta": {...}, "checks": [ {id, anchor, status, engine, transcription} ] }
// Check records carry no run-dependent data, so identical runs produce
// byte-identical output.

#include "qplane/report.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace qplane {

inline constexpr const char* kToolVersion = "1.0.0";

inline nlohmann::ordered_json to_json(const Report& rep) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    nlohmann::ordered_json required = nlohmann::ordered_json::array();
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    std::size_t mismatches = 0;
    for (const auto& c : rep.checks) {
        nlohmann::ordered_json j;
        j["id"] = c.id;
        j["anchor"] = c.anchor;
        j["status"] = to_string(c.status);
        j["engine"] = c.engine;
        j["transcription"] = c.transcription ? nlohmann::ordered_json(*c.transcription) : nlohmann::ordered_json();
        checks.push_back(std::move(j));
        if (c.required) required.push_back(c.id);
        if (c.failed()) failures.push_back(c.id);
        if (c.status == CheckStatus::mismatch) ++mismatches;
    }
    nlohmann::ordered_json meta;
    meta["tool"] = "qplane";
    meta["version"] = kToolVersion;
    meta["form_star_convention"] = to_string(rep.convention);
    meta["arithmetic"] = "exact Gaussian rationals";
    meta["check_count"] = rep.checks.size();
    meta["mismatch_count"] = mismatches;
    meta["match_required"] = std::move(required);
    meta["required_failures"] = std::move(failures);
    meta["passed"] = rep.ok();
    nlohmann::ordered_json out;
    out["meta"] = std::move(meta);
    out["checks"] = std::move(checks);
    return out;
}

/// Structural validation against the report schema; returns a description of
/// the first violation, or nothing when the document conforms.
inline std::optional<std::string> validate_report_json(const nlohmann::json& doc) {
    if (!doc.is_object()) return "top level is not an object";
    for (const auto& [key, value] : doc.items())
        if (key != "meta" && key != "checks") return "unexpected top-level key '" + key + "'";
    if (!doc.contains("meta") || !doc["meta"].is_object()) return "missing object 'meta'";
    if (!doc.contains("checks") || !doc["checks"].is_array()) return "missing array 'checks'";
    std::size_t i = 0;
    for (const auto& c : doc["checks"]) {
        const std::string where = "checks[" + std::to_string(i++) + "]";
        if (!c.is_object()) return where + " is not an object";
        for (const char* k : {"id", "anchor", "status", "engine", "transcription"})
            if (!c.contains(k)) return where + " lacks '" + k + "'";
        for (const auto& [key, value] : c.items())
            if (key != "id" && key != "anchor" && key != "status" && key != "engine" && key != "transcription")
                return where + " has unexpected key '" + key + "'";
        for (const char* k : {"id", "anchor", "engine"})
            if (!c[k].is_string()) return where + "." + k + " is not a string";
        if (!c["status"].is_string()) return where + ".status is not a string";
        const auto st = c["status"].get<std::string>();
        if (st != "match" && st != "mismatch" && st != "computed") return where + ".status '" + st + "' is invalid";
        if (!c["transcription"].is_string() && !c["transcription"].is_null())
            return where + ".transcription is neither string nor null";
    }
    return std::nullopt;
}

}  // namespace qplane
