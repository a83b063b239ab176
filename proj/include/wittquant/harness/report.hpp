#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wittquant/errors.hpp"

namespace wittquant::harness {

/// Structured verdict of one scenario run.  Field set and JSON key order
/// are stable: identical config and seed give byte-identical documents
/// apart from elapsed_ms.
struct ScenarioReport {
    static constexpr int schema_version = 1;

    std::string scenario;
    nlohmann::json params;   // config echo
    std::string verdict;     // "pass" | "fail" | "inconclusive"
    uint64_t cases = 0;
    uint64_t failures = 0;
    std::vector<nlohmann::json> witnesses;
    double elapsed_ms = 0.0;

    nlohmann::json to_json() const;
    bool passed() const { return verdict == "pass"; }
};

struct SuiteReport {
    std::string profile;
    std::vector<ScenarioReport> scenarios; // sorted by scenario name
    bool all_passed() const;
    nlohmann::json to_json() const;
};

/// Serialize a report in the requested format ("json" or "markdown");
/// markdown includes the scenario-to-statement mapping table.
std::string emit_report(const ScenarioReport& rep, const std::string& format);
std::string emit_report(const SuiteReport& rep, const std::string& format);

/// Write to a path, throwing on unwritable targets.
void write_report_file(const std::string& path, const std::string& contents);

} // namespace wittquant::harness
