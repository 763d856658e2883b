#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "respool/commands.hpp"
#include "respool/scenario.hpp"

namespace {

struct CommonOptions {
    std::string scenario_path;
    std::string mode;
    std::optional<std::size_t> max_owners;
    std::string csv_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> epochs;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--scenario", opts.scenario_path, "Scenario file (JSON)")->required();
    cmd->add_option("--mode", opts.mode, "Improvement mode: strict|pareto");
    cmd->add_option("--max-owners", opts.max_owners, "Coalition enumeration bound");
    cmd->add_option("--csv", opts.csv_path, "Write CSV output to this file");
    cmd->add_option("--seed", opts.seed, "Override the scenario seed");
    cmd->add_option("--epochs", opts.epochs, "Number of epochs");
}

int finish(const respool::CommandResult& result, const CommonOptions& opts) {
    std::cout << result.report;
    if (!result.csv.empty()) {
        if (opts.csv_path.empty()) {
            std::cout << result.csv;
        } else {
            std::ofstream out(opts.csv_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << opts.csv_path << "\n";
                return 2;
            }
            out << result.csv;
        }
    }
    return result.exit_code;
}

std::optional<respool::ScenarioDoc> load(const CommonOptions& opts) {
    std::ifstream in(opts.scenario_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << opts.scenario_path << "\n";
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        auto doc = respool::parse_scenario(buffer.str());
        if (opts.mode == "strict") doc.mode = respool::ImprovementMode::AllStrictlyBetter;
        else if (opts.mode == "pareto") doc.mode = respool::ImprovementMode::ParetoImprovement;
        else if (!opts.mode.empty()) {
            std::cerr << "error: --mode must be strict or pareto\n";
            return std::nullopt;
        }
        if (opts.max_owners) doc.max_owners = *opts.max_owners;
        if (opts.seed) {
            if (!doc.dynamics) doc.dynamics = respool::DynamicsParams{};
            doc.dynamics->seed = *opts.seed;
            if (doc.blueprint) doc.blueprint->seed = *opts.seed;
        }
        if (opts.epochs && doc.blueprint) doc.blueprint->epochs = *opts.epochs;
        return doc;
    } catch (const respool::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::nullopt;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pooling-game analysis over exact rationals"};
    app.require_subcommand(1);

    CommonOptions axioms_opts, equilibrium_opts, dynamics_opts, simulate_opts, emission_opts;
    bool coalition_csv = false;

    auto* axioms = app.add_subcommand("axioms", "Check the reward axioms");
    add_common(axioms, axioms_opts);

    auto* equilibrium =
        app.add_subcommand("equilibrium", "Strong Nash check by coalition enumeration");
    add_common(equilibrium, equilibrium_opts);
    equilibrium->add_flag("--per-coalition", coalition_csv,
                          "Emit one CSV row per coalition");

    auto* dynamics = app.add_subcommand("dynamics", "Best-response dynamics trace");
    add_common(dynamics, dynamics_opts);

    auto* simulate = app.add_subcommand("simulate", "Epoch-based blueprint simulation");
    add_common(simulate, simulate_opts);

    auto* emission = app.add_subcommand("emission", "Emission schedule table");
    add_common(emission, emission_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (axioms->parsed()) {
            const auto doc = load(axioms_opts);
            if (!doc) return 2;
            return finish(respool::cmd_axioms(*doc), axioms_opts);
        }
        if (equilibrium->parsed()) {
            const auto doc = load(equilibrium_opts);
            if (!doc) return 2;
            return finish(respool::cmd_equilibrium(*doc, coalition_csv), equilibrium_opts);
        }
        if (dynamics->parsed()) {
            const auto doc = load(dynamics_opts);
            if (!doc) return 2;
            return finish(respool::cmd_dynamics(*doc), dynamics_opts);
        }
        if (simulate->parsed()) {
            const auto doc = load(simulate_opts);
            if (!doc) return 2;
            return finish(respool::cmd_simulate(*doc), simulate_opts);
        }
        if (emission->parsed()) {
            const auto doc = load(emission_opts);
            if (!doc) return 2;
            const auto through = emission_opts.epochs.value_or(
                doc->blueprint ? doc->blueprint->epochs : 10);
            return finish(respool::cmd_emission(*doc, through), emission_opts);
        }
    } catch (const respool::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
