#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace qalg {

// ---------------------------------------------------------------------------
// CheckReport / SuiteResult: the outcome record of one verification and the
// aggregate of a named batch. Exact-mode passes carry no residual; failures
// always carry a witness.
// ---------------------------------------------------------------------------
enum class CheckMode { exact, numeric };
enum class CheckStatus { pass, fail, error };

struct CheckReport {
    std::string name;
    CheckMode mode = CheckMode::exact;
    CheckStatus status = CheckStatus::pass;
    double residual = -1.0;  // negative = absent
    std::string witness;
    std::string convention_notes;
    double duration_ms = 0.0;

    bool passed() const { return status == CheckStatus::pass; }
    bool has_residual() const { return residual >= 0.0; }

    static CheckReport pass_exact(std::string name) {
        CheckReport r;
        r.name = std::move(name);
        return r;
    }
    static CheckReport pass_numeric(std::string name, double residual) {
        CheckReport r;
        r.name = std::move(name);
        r.mode = CheckMode::numeric;
        r.residual = residual;
        return r;
    }
    static CheckReport failed(std::string name, CheckMode mode, std::string witness,
                              double residual = -1.0) {
        CheckReport r;
        r.name = std::move(name);
        r.mode = mode;
        r.status = CheckStatus::fail;
        r.witness = witness.empty() ? "unspecified" : std::move(witness);
        r.residual = residual;
        return r;
    }
    static CheckReport errored(std::string name, CheckMode mode, std::string what) {
        CheckReport r;
        r.name = std::move(name);
        r.mode = mode;
        r.status = CheckStatus::error;
        r.witness = std::move(what);
        return r;
    }
};

inline const char* to_string(CheckMode m) { return m == CheckMode::exact ? "exact" : "numeric"; }
inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "error";
    }
}

struct SuiteResult {
    std::string suite;
    std::vector<CheckReport> checks;

    bool aggregate_pass() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
};

/// One line per check: "<name> <mode> <status> [residual] [witness]".
inline std::string to_text(const SuiteResult& r) {
    std::string out;
    for (const auto& c : r.checks) {
        out += c.name;
        out += ' ';
        out += to_string(c.mode);
        out += ' ';
        out += to_string(c.status);
        if (c.has_residual()) out += " " + std::to_string(c.residual);
        if (!c.witness.empty()) out += " " + c.witness;
        out += '\n';
    }
    out += "aggregate ";
    out += r.aggregate_pass() ? "pass" : "fail";
    out += '\n';
    return out;
}

/// JSON report. Timings live in a separate "timings" object so the remainder
/// of the document is byte-stable across runs.
inline nlohmann::json to_json(const SuiteResult& r) {
    nlohmann::json checks = nlohmann::json::array();
    nlohmann::json timings = nlohmann::json::object();
    double total = 0.0;
    for (const auto& c : r.checks) {
        nlohmann::json j;
        j["name"] = c.name;
        j["mode"] = to_string(c.mode);
        j["status"] = to_string(c.status);
        if (c.has_residual()) j["residual"] = c.residual;
        if (!c.witness.empty()) j["witness"] = c.witness;
        if (!c.convention_notes.empty()) j["convention_notes"] = c.convention_notes;
        checks.push_back(std::move(j));
        timings[c.name] = c.duration_ms;
        total += c.duration_ms;
    }
    nlohmann::json notes = nlohmann::json::array();
    for (const auto& c : r.checks)
        if (!c.convention_notes.empty()) notes.push_back(c.name + ": " + c.convention_notes);
    nlohmann::json out;
    out["suite"] = r.suite;
    out["aggregate"] = r.aggregate_pass() ? "pass" : "fail";
    out["checks"] = std::move(checks);
    out["convention_notes"] = std::move(notes);
    out["timings"] = {{"total_ms", total}, {"per_check_ms", std::move(timings)}};
    return out;
}

}  // namespace qalg
