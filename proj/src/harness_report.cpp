#include "wittquant/harness/report.hpp"

#include <algorithm>
#include <fstream>

#include "wittquant/errors.hpp"
#include "wittquant/harness/scenario.hpp"

namespace wittquant::harness {

nlohmann::json ScenarioReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["scenario"] = scenario;
    j["params"] = params;
    j["verdict"] = verdict;
    j["cases"] = cases;
    j["failures"] = failures;
    j["witnesses"] = witnesses;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

bool SuiteReport::all_passed() const {
    return std::all_of(scenarios.begin(), scenarios.end(),
                       [](const ScenarioReport& r) { return r.passed(); });
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = ScenarioReport::schema_version;
    j["profile"] = profile;
    j["verdict"] = all_passed() ? "pass" : "fail";
    j["scenarios"] = nlohmann::json::array();
    for (const auto& r : scenarios) j["scenarios"].push_back(r.to_json());
    return j;
}

namespace {

std::string statement_of(const std::string& scenario) {
    for (const auto& info : scenario_registry())
        if (info.name == scenario) return info.statement;
    return "";
}

std::string markdown_one(const ScenarioReport& rep) {
    std::string md;
    md += "### scenario `" + rep.scenario + "`\n\n";
    md += "- statement: " + statement_of(rep.scenario) + "\n";
    md += "- verdict: **" + rep.verdict + "**\n";
    md += "- cases: " + std::to_string(rep.cases) +
          ", failures: " + std::to_string(rep.failures) + "\n";
    md += "- elapsed: " + std::to_string(rep.elapsed_ms) + " ms\n";
    md += "- params: `" + rep.params.dump() + "`\n";
    if (!rep.witnesses.empty()) {
        md += "- witnesses:\n";
        for (const auto& w : rep.witnesses) md += "  - `" + w.dump() + "`\n";
    }
    md += "\n";
    return md;
}

std::string mapping_table(const std::vector<const ScenarioReport*>& reps) {
    std::string md = "| scenario | statement verified | verdict |\n|---|---|---|\n";
    for (const auto* r : reps)
        md += "| `" + r->scenario + "` | " + statement_of(r->scenario) + " | " + r->verdict +
              " |\n";
    return md + "\n";
}

} // namespace

std::string emit_report(const ScenarioReport& rep, const std::string& format) {
    if (format == "json") return rep.to_json().dump(2) + "\n";
    if (format == "markdown") return mapping_table({&rep}) + markdown_one(rep);
    throw domain_error("emit_report: unknown format " + format);
}

std::string emit_report(const SuiteReport& rep, const std::string& format) {
    if (format == "json") return rep.to_json().dump(2) + "\n";
    if (format == "markdown") {
        std::string md = "## suite profile `" + rep.profile + "` — " +
                         (rep.all_passed() ? "pass" : "fail") + "\n\n";
        std::vector<const ScenarioReport*> ptrs;
        for (const auto& r : rep.scenarios) ptrs.push_back(&r);
        md += mapping_table(ptrs);
        for (const auto& r : rep.scenarios) md += markdown_one(r);
        return md;
    }
    throw domain_error("emit_report: unknown format " + format);
}

void write_report_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw domain_error("write_report_file: cannot open " + path);
    out << contents;
    if (!out.good()) throw domain_error("write_report_file: write failed for " + path);
}

} // namespace wittquant::harness
