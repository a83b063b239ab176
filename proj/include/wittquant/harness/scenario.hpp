#pragma once

#include <functional>
#include <optional>

#include "wittquant/harness/report.hpp"

namespace wittquant::harness {

/// Parameters of one scenario run.  Guard rails: p <= 7, n <= 4,
/// degree caps <= 60.  The sign knobs exist so the suite can demonstrate
/// its own sensitivity to the orientation conventions.
struct ScenarioConfig {
    std::string scenario;
    uint32_t p = 3;
    uint32_t n = 2;
    uint32_t r = 1;
    uint32_t degree = 12;        // degree cap for span computations
    uint32_t witt_length = 0;    // m where applicable; 0 = scenario default
    uint64_t seed = 1;
    uint32_t samples = 50;
    uint32_t component_degree = 2; // sampler degree bound
    uint32_t max_terms = 3;        // sampler term bound
    int weyl_sign = +1;
    int pairing_sign = +1;
    /// Monomial generators (in the Z_1 coordinates) of the ideal a scenario
    /// instantiates, where it takes one; empty = the scenario's pinned
    /// default instance.
    std::vector<std::string> ideal;

    void validate() const;
    nlohmann::json to_json() const;
    static ScenarioConfig from_json(const nlohmann::json& j);
};

/// What a scenario claims and which way the claim is expected to go:
/// most expect the identity to hold on every case; the counterexample
/// scenario expects the constructed violation.
enum class Polarity { expect_holds, expect_violation };

struct ScenarioInfo {
    std::string name;
    std::string statement; // the mathematical claim the scenario verifies
    Polarity polarity;
    ScenarioConfig defaults;
    std::function<ScenarioReport(const ScenarioConfig&)> run;
};

const std::vector<ScenarioInfo>& scenario_registry();
const ScenarioInfo& find_scenario(const std::string& name);

/// Run one scenario: unknown names and out-of-guard parameters throw;
/// the report verdict is "pass" exactly when the observed outcome matches
/// the scenario's expected polarity.
ScenarioReport run_scenario(const ScenarioConfig& cfg);

/// Run the quick (p=3, small caps) or full (adds p=5 and level-3 runs)
/// profile.  `only` filters by scenario name; an empty selection is an
/// error.  The mutation switch flips one orientation convention across
/// the whole suite -- used to demonstrate the suite is not vacuous.
enum class Mutation { none, flip_weyl_sign, flip_pairing_sign };
SuiteReport run_suite(const std::string& profile, Mutation mutation = Mutation::none,
                      const std::vector<std::string>& only = {});

/// Re-run the single check a witness records; true when the recorded
/// failure reproduces.  Supported for the sampled per-case scenarios.
bool replay_witness(const ScenarioConfig& cfg, const nlohmann::json& witness);

} // namespace wittquant::harness
