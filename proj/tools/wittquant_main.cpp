// wittquant: scenario runner and element calculator for the exact
// Weyl-algebra / Witt-vector verification library.
//
//   wittquant run <scenario> [--p --n --r --degree --seed --samples ...]
//   wittquant suite --profile quick|full [--only a,b] [--mutate ...]
//   wittquant list
//   wittquant eval <expr> [--p --n --level --r] [--commutative]
//
// Exit code 0 means every executed scenario met its expected polarity.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wittquant/harness/scenario.hpp"
#include "wittquant/polyring/poisson.hpp"
#include "wittquant/quantization/phi.hpp"

namespace {

using namespace wittquant;

int cmd_run(const harness::ScenarioConfig& cfg, const std::string& out,
            const std::string& format) {
    harness::ScenarioReport rep = harness::run_scenario(cfg);
    std::string doc = harness::emit_report(rep, format);
    if (out.empty()) std::cout << doc;
    else harness::write_report_file(out, doc);
    return rep.passed() ? 0 : 1;
}

int cmd_suite(const std::string& profile, const std::string& mutate,
              const std::vector<std::string>& only, const std::string& out,
              const std::string& format) {
    harness::Mutation m = harness::Mutation::none;
    if (mutate == "weyl-sign") m = harness::Mutation::flip_weyl_sign;
    else if (mutate == "pairing-sign") m = harness::Mutation::flip_pairing_sign;
    else if (!mutate.empty() && mutate != "none")
        throw domain_error("unknown mutation: " + mutate);
    harness::SuiteReport rep = harness::run_suite(profile, m, only);
    std::string doc = harness::emit_report(rep, format);
    if (out.empty()) std::cout << doc;
    else harness::write_report_file(out, doc);
    for (const auto& r : rep.scenarios)
        std::cerr << (r.passed() ? "[pass] " : "[FAIL] ") << r.scenario << " (" << r.cases
                  << " cases, " << r.failures << " failures, " << r.elapsed_ms << " ms)\n";
    return rep.all_passed() ? 0 : 1;
}

// Tiny exploration evaluator on top of the element grammar: +, -, *, ^,
// parentheses, [a,b] commutators, integer literals and the generators.
struct EvalParser {
    quantization::AlgebraPtr alg;
    uint32_t level;
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool accept(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    quantization::WeylElement parse() {
        auto e = sum();
        skip();
        if (i != s.size()) throw parse_error("trailing input in expression");
        return e;
    }
    quantization::WeylElement sum() {
        auto acc = product();
        for (;;) {
            if (accept('+')) acc = acc + product();
            else if (accept('-')) acc = acc - product();
            else return acc;
        }
    }
    quantization::WeylElement product() {
        auto acc = power();
        for (;;) {
            skip();
            if (accept('*')) acc = acc * power();
            else return acc;
        }
    }
    quantization::WeylElement power() {
        auto base = atom();
        if (accept('^')) {
            skip();
            uint64_t e = 0;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                throw parse_error("expected exponent");
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                e = e * 10 + uint64_t(s[i++] - '0');
            return base.pow(e);
        }
        return base;
    }
    quantization::WeylElement atom() {
        skip();
        if (accept('(')) {
            auto e = sum();
            if (!accept(')')) throw parse_error("expected ')'");
            return e;
        }
        if (accept('[')) {
            auto a = sum();
            if (!accept(',')) throw parse_error("expected ',' in commutator");
            auto b = sum();
            if (!accept(']')) throw parse_error("expected ']'");
            return quantization::commutator(a, b);
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            int64_t v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + (s[i++] - '0');
            return quantization::WeylElement::constant(alg, level, v);
        }
        for (std::size_t slot = 0; slot < alg->var_names.size(); ++slot) {
            const auto& name = alg->var_names[slot];
            if (s.compare(i, name.size(), name) == 0) {
                i += name.size();
                return quantization::WeylElement::generator(alg, level, name);
            }
        }
        throw parse_error("unexpected input at position " + std::to_string(i));
    }
};

int cmd_eval(const std::string& expr, uint32_t p, uint32_t n, uint32_t level, uint32_t r) {
    auto alg = quantization::make_weyl_algebra(p, n, r);
    if (level == 0) level = n;
    EvalParser parser{alg, level, expr};
    quantization::WeylElement e = parser.parse();
    std::cout << e.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Witt-vector / Weyl-algebra verification toolkit"};
    app.require_subcommand(1);

    harness::ScenarioConfig cfg;
    std::string out, format = "json", config_path;
    bool have_cfg_defaults = true;

    auto* run = app.add_subcommand("run", "run one scenario");
    std::string scenario_name;
    run->add_option("scenario", scenario_name, "scenario name (see `wittquant list`)")
        ->required();
    uint32_t opt_p = 0, opt_n = 0, opt_r = 0, opt_degree = 0, opt_samples = 0, opt_m = 0;
    uint64_t opt_seed = UINT64_MAX;
    int opt_weyl_sign = 0, opt_pairing_sign = 0;
    run->add_option("--p", opt_p, "odd prime p (<= 7)");
    run->add_option("--n", opt_n, "coefficient length n (<= 4)");
    run->add_option("--r", opt_r, "symplectic pairs (<= 4)");
    run->add_option("--degree", opt_degree, "degree cap (<= 60)");
    run->add_option("--m", opt_m, "Witt length where applicable");
    run->add_option("--seed", opt_seed, "random seed");
    run->add_option("--samples", opt_samples, "sample count");
    run->add_option("--weyl-sign", opt_weyl_sign, "orientation of [y, x] (+1 or -1)");
    run->add_option("--pairing-sign", opt_pairing_sign, "orientation of {u, v} (+1 or -1)");
    std::vector<std::string> opt_ideal;
    run->add_option("--ideal", opt_ideal,
                    "monomial ideal generators in the Z_1 coordinates, where the scenario "
                    "takes an ideal instance");
    run->add_option("--out", out, "write the report to this path");
    run->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    run->add_option("--config", config_path, "JSON config file mirroring the flags");

    auto* suite = app.add_subcommand("suite", "run a scenario suite");
    std::string profile = "quick", mutate = "none", only_csv;
    suite->add_option("--profile", profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    suite->add_option("--mutate", mutate, "none, weyl-sign or pairing-sign")
        ->check(CLI::IsMember({"none", "weyl-sign", "pairing-sign"}));
    suite->add_option("--only", only_csv, "comma-separated scenario filter");
    suite->add_option("--out", out, "write the report to this path");
    suite->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));

    auto* list = app.add_subcommand("list", "list scenarios and their statements");

    auto* eval = app.add_subcommand("eval", "normalize a Weyl-algebra expression");
    std::string expr;
    uint32_t ev_p = 3, ev_n = 2, ev_level = 0, ev_r = 1;
    eval->add_option("expr", expr, "expression over the generators, e.g. \"[y,x]^2 + 3*x\"")
        ->required();
    eval->add_option("--p", ev_p, "odd prime p");
    eval->add_option("--n", ev_n, "coefficient length n");
    eval->add_option("--level", ev_level, "element level (default n)");
    eval->add_option("--r", ev_r, "symplectic pairs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run)) {
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw domain_error("cannot open config file " + config_path);
                nlohmann::json j = nlohmann::json::parse(in);
                cfg = harness::ScenarioConfig::from_json(j);
                have_cfg_defaults = false;
            }
            if (have_cfg_defaults) cfg = harness::find_scenario(scenario_name).defaults;
            cfg.scenario = scenario_name;
            if (opt_p) cfg.p = opt_p;
            if (opt_n) cfg.n = opt_n;
            if (opt_r) cfg.r = opt_r;
            if (opt_degree) cfg.degree = opt_degree;
            if (opt_m) cfg.witt_length = opt_m;
            if (opt_seed != UINT64_MAX) cfg.seed = opt_seed;
            if (opt_samples) cfg.samples = opt_samples;
            if (opt_weyl_sign) cfg.weyl_sign = opt_weyl_sign;
            if (opt_pairing_sign) cfg.pairing_sign = opt_pairing_sign;
            if (!opt_ideal.empty()) cfg.ideal = opt_ideal;
            return cmd_run(cfg, out, format);
        }
        if (app.got_subcommand(suite)) {
            std::vector<std::string> only;
            std::size_t start = 0;
            while (start < only_csv.size()) {
                std::size_t comma = only_csv.find(',', start);
                only.push_back(only_csv.substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            return cmd_suite(profile, mutate, only, out, format);
        }
        if (app.got_subcommand(list)) {
            for (const auto& info : harness::scenario_registry())
                std::cout << info.name << "\n    " << info.statement << "\n";
            return 0;
        }
        if (app.got_subcommand(eval)) return cmd_eval(expr, ev_p, ev_n, ev_level, ev_r);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
