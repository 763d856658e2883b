#ifndef RESPOOL_COMMANDS_HPP
#define RESPOOL_COMMANDS_HPP

#include <sstream>
#include <string>

#include "respool/blueprint.hpp"
#include "respool/dynamics.hpp"
#include "respool/equilibrium.hpp"
#include "respool/scenario.hpp"

namespace respool {

// Exit codes: 0 all checks pass / run complete, 1 a checked property
// failed (witness emitted), 2 input error, 3 resource or limit error.
struct CommandResult {
    int exit_code = 0;
    std::string report;
    std::string csv;
};

namespace detail {

inline std::string move_label(const Move& move) {
    switch (move.kind) {
        case MoveKind::CreateSoloPool: return "create";
        case MoveKind::JoinPool: return "join:" + std::to_string(move.pool_index);
        case MoveKind::LeavePool: return "leave";
    }
    return "?";
}

inline CommandResult input_error(const std::string& message) {
    return CommandResult{2, "error: " + message + "\n", ""};
}

inline CommandResult limit_error(const std::string& message) {
    return CommandResult{3, "error: " + message + "\n", ""};
}

}  // namespace detail

inline CommandResult cmd_axioms(const ScenarioDoc& doc) {
    CommandResult result;
    std::ostringstream report, csv;
    csv << "check,verdict,detail\n";
    bool all_ok = true;
    try {
        const auto sybil = check_sybil_resilience(doc.reward, doc.universe);
        if (sybil) {
            all_ok = false;
            report << "sybil_resilience: violated P1=" << sybil->first.to_string()
                   << " P2=" << sybil->second.to_string()
                   << " joint=" << format_rational(sybil->lhs)
                   << " split=" << format_rational(sybil->rhs) << "\n";
            csv << "sybil_resilience,violated," << sybil->first.to_string() << ";"
                << sybil->second.to_string() << "\n";
        } else {
            report << "sybil_resilience: ok\n";
            csv << "sybil_resilience,ok,\n";
        }
        const auto egal = check_egalitarianism(doc.reward, doc.universe);
        if (egal) {
            all_ok = false;
            report << "egalitarianism: violated P1=" << egal->first.to_string()
                   << " P2=" << egal->second.to_string()
                   << " joint=" << format_rational(egal->lhs)
                   << " split=" << format_rational(egal->rhs) << "\n";
            csv << "egalitarianism,violated," << egal->first.to_string() << ";"
                << egal->second.to_string() << "\n";
        } else {
            report << "egalitarianism: ok\n";
            csv << "egalitarianism,ok,\n";
        }
        try {
            const auto cauchy = check_cauchy_linearity(doc.reward, doc.cauchy_denominator);
            if (cauchy) {
                all_ok = false;
                report << "cauchy_linearity[N=" << doc.cauchy_denominator
                       << "]: violated at k=" << cauchy->k
                       << " lhs=" << format_rational(cauchy->lhs)
                       << " rhs=" << format_rational(cauchy->rhs) << "\n";
                csv << "cauchy_linearity,violated,k=" << cauchy->k << "\n";
            } else {
                report << "cauchy_linearity[N=" << doc.cauchy_denominator << "]: ok\n";
                csv << "cauchy_linearity,ok,\n";
            }
        } catch (const NotOnGrid&) {
            report << "cauchy_linearity[N=" << doc.cauchy_denominator
                   << "]: not applicable (tabulated reward off the grid)\n";
            csv << "cauchy_linearity,skipped,off-grid\n";
        }
    } catch (const SubsetLimitExceeded& e) {
        return detail::limit_error(e.what());
    }
    result.exit_code = all_ok ? 0 : 1;
    result.report = report.str();
    result.csv = csv.str();
    return result;
}

inline CommandResult cmd_equilibrium(const ScenarioDoc& doc, bool coalition_csv = false) {
    if (!doc.configuration)
        return detail::input_error("equilibrium requires a configuration section");
    const Instance inst{doc.universe, doc.cost, doc.reward};
    CommandResult result;
    std::ostringstream report, csv;
    try {
        const OwnerSet omega = doc.universe.all_owners();
        report << "viable_omega: "
               << (is_viable(omega, doc.cost, doc.reward, doc.universe) ? "yes" : "no")
               << "\n";
        const auto inefficiency =
            cost_inefficiency_witness(omega, doc.cost, doc.universe, doc.max_owners >= 20
                                                                         ? doc.max_owners
                                                                         : 20);
        if (inefficiency)
            report << "cost_efficient_omega: no witness=" << inefficiency->to_string() << "\n";
        else
            report << "cost_efficient_omega: yes\n";
        if (const auto* lin = std::get_if<OperatorLinearCost>(&doc.cost))
            report << "prop1_condition: "
                   << (satisfies_prop1_condition(*lin) ? "holds" : "fails")
                   << " delta=" << format_rational(delta(*lin)) << "\n";

        const auto eq = is_strong_nash(inst, *doc.configuration, doc.mode, doc.max_owners);
        report << "mode: "
               << (doc.mode == ImprovementMode::AllStrictlyBetter ? "strict" : "pareto")
               << "\n";
        report << "coalitions_checked: " << eq.coalitions_checked << "\n";
        if (eq.strong_nash) {
            report << "verdict: StrongNash\n";
            result.exit_code = 0;
        } else {
            const auto& cert = *eq.certificate;
            report << "verdict: NotStrongNash\n";
            report << "coalition: " << cert.coalition.to_string() << "\n";
            for (const auto& pool : cert.pools)
                report << "new_pool: " << pool.to_string() << "\n";
            if (!cert.inactive.empty())
                report << "inactive: " << cert.inactive.to_string() << "\n";
            for (OwnerId id : cert.coalition.members())
                report << "owner " << id << ": old="
                       << format_rational(cert.old_utilities.at(id))
                       << " new=" << format_rational(cert.new_utilities.at(id)) << "\n";
            result.exit_code = 1;
        }

        if (coalition_csv) {
            csv << "coalition,deviation_found,first_new_pools\n";
            const auto baseline = participant_utilities(inst, *doc.configuration);
            for (const OwnerSet& coalition : nonempty_subsets_lex(omega)) {
                const auto dev = deviation_for_coalition(inst, coalition, baseline, doc.mode);
                csv << coalition.to_string().c_str() << ","
                    << (dev ? "yes" : "no") << ",";
                if (dev) {
                    bool first = true;
                    for (const auto& pool : dev->pools) {
                        if (!first) csv << ";";
                        csv << pool.to_string();
                        first = false;
                    }
                    if (!dev->inactive.empty())
                        csv << (dev->pools.empty() ? "" : ";") << "inactive"
                            << dev->inactive.to_string();
                }
                csv << "\n";
            }
        }
    } catch (const EnumerationLimitExceeded& e) {
        return detail::limit_error(e.what());
    } catch (const SubsetLimitExceeded& e) {
        return detail::limit_error(e.what());
    }
    result.report = report.str();
    result.csv = csv.str();
    return result;
}

inline CommandResult cmd_dynamics(const ScenarioDoc& doc) {
    if (!doc.configuration)
        return detail::input_error("dynamics requires a configuration section");
    const Instance inst{doc.universe, doc.cost, doc.reward};
    const DynamicsParams params = doc.dynamics.value_or(DynamicsParams{});
    const auto trace = best_response_dynamics(inst, *doc.configuration, MoveRules{},
                                              params.max_iter, params.seed);
    std::ostringstream report, csv;
    csv << "iteration,mover,move,pool_count,min_pool_measure,max_pool_measure,"
           "utility_before,utility_after\n";
    for (const auto& step : trace.steps) {
        Rational lo, hi;
        bool first = true;
        for (const auto& pool : step.pools_after) {
            const Rational m = doc.universe.measure(pool);
            if (first || m < lo) lo = m;
            if (first || m > hi) hi = m;
            first = false;
        }
        csv << step.round << "," << step.mover << "," << detail::move_label(step.move)
            << "," << step.pools_after.size() << "," << format_rational(lo) << ","
            << format_rational(hi) << "," << format_rational(step.utility_before)
            << "," << format_rational(step.utility_after) << "\n";
    }
    report << "converged=" << (trace.converged ? "true" : "false")
           << " iterations=" << trace.iterations << " steps=" << trace.steps.size();
    if (!trace.steps.empty())
        report << " final_pools=" << trace.steps.back().pools_after.size();
    else
        report << " final_pools=" << doc.configuration->pools.size();
    report << "\n";
    return CommandResult{0, report.str(), csv.str()};
}

inline CommandResult cmd_simulate(const ScenarioDoc& doc) {
    if (!doc.configuration || !doc.tokenomics || !doc.blueprint)
        return detail::input_error(
            "simulate requires configuration, tokenomics and blueprint sections");
    Scenario scenario{Instance{doc.universe, doc.cost, doc.reward},
                      *doc.configuration,
                      doc.blueprint->k,
                      doc.blueprint->epochs,
                      doc.tokenomics->schedule,
                      doc.tokenomics->treasury_rate,
                      doc.tokenomics->fees_per_epoch,
                      doc.blueprint->performance,
                      doc.blueprint->seed};
    if (scenario.performance.empty())
        scenario.performance.assign(scenario.configuration.pools.size(), Rational(1));
    std::vector<EpochRecord> records;
    try {
        records = run(scenario);
    } catch (const Error& e) {
        return detail::input_error(e.what());
    }

    const std::size_t pool_count = scenario.configuration.pools.size();
    const std::size_t owner_count = doc.universe.owner_count();
    std::ostringstream report, csv;
    csv << "epoch,emission,fees,treasury,committee";
    for (std::size_t p = 0; p < pool_count; ++p) csv << ",pool_" << p << "_reward";
    for (OwnerId id = 0; id < owner_count; ++id) csv << ",owner_" << id << "_cumulative";
    csv << "\n";

    std::vector<Rational> cumulative(owner_count, Rational(0));
    for (const auto& record : records) {
        csv << record.epoch << "," << format_rational(record.pot.emission) << ","
            << format_rational(record.pot.fees) << ","
            << format_rational(record.pot.treasury_cut + record.shortfall) << ",";
        bool first = true;
        for (std::size_t p : record.committee) {
            if (!first) csv << ";";
            csv << p;
            first = false;
        }
        for (std::size_t p = 0; p < pool_count; ++p) {
            const auto it = record.pool_rewards.find(p);
            csv << "," << format_rational(it == record.pool_rewards.end() ? Rational(0)
                                                                          : it->second);
        }
        for (OwnerId id = 0; id < owner_count; ++id) {
            const auto it = record.owner_rewards.find(id);
            if (it != record.owner_rewards.end()) cumulative[id] += it->second;
            csv << "," << format_rational(cumulative[id]);
        }
        csv << "\n";
    }
    report << "epochs=" << records.size() << "\n";
    for (OwnerId id = 0; id < owner_count; ++id)
        report << "owner " << id << " cumulative: " << format_rational(cumulative[id])
               << "\n";
    return CommandResult{0, report.str(), csv.str()};
}

inline CommandResult cmd_emission(const ScenarioDoc& doc, Epoch through) {
    if (!doc.tokenomics)
        return detail::input_error("emission requires a tokenomics section");
    const EmissionSchedule& schedule = doc.tokenomics->schedule;
    std::ostringstream report, csv;
    csv << "epoch,emission,cumulative\n";
    try {
        for (Epoch e = 0; e <= through; ++e)
            csv << e << "," << format_rational(emission(schedule, e)) << ","
                << format_rational(cumulative_emission(schedule, e)) << "\n";
    } catch (const EpochOutOfCustomRange& e) {
        return detail::input_error(e.what());
    }
    report << "through_epoch=" << through << " cumulative="
           << format_rational(cumulative_emission(schedule, through)) << "\n";
    if (const auto limit = supply_limit(schedule))
        report << "supply_limit=" << format_rational(*limit) << "\n";
    return CommandResult{0, report.str(), csv.str()};
}

}  // namespace respool

#endif  // RESPOOL_COMMANDS_HPP
