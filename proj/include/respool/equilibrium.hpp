#ifndef RESPOOL_EQUILIBRIUM_HPP
#define RESPOOL_EQUILIBRIUM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "respool/cost_model.hpp"
#include "respool/errors.hpp"
#include "respool/owner_set.hpp"
#include "respool/partitions.hpp"
#include "respool/rational.hpp"
#include "respool/resource_model.hpp"
#include "respool/reward_model.hpp"

namespace respool {

struct Instance {
    ResourceUniverse universe;
    CostModel cost;
    RewardModel reward;
};

enum class ImprovementMode {
    AllStrictlyBetter,   // every coalition member strictly gains
    ParetoImprovement,   // no member loses, at least one strictly gains
};

// A witnessed deviation: the coalition leaves its pools, `pools` are the
// new pools it forms and `inactive` the members that drop out entirely.
// pools and inactive are disjoint and together cover the coalition.
struct DeviationCertificate {
    OwnerSet coalition;
    std::vector<OwnerSet> pools;
    OwnerSet inactive;
    std::map<OwnerId, Rational> old_utilities, new_utilities;
};

struct EquilibriumReport {
    bool strong_nash = false;
    std::optional<DeviationCertificate> certificate;
    std::uint64_t coalitions_checked = 0;
    ImprovementMode mode = ImprovementMode::AllStrictlyBetter;
};

// Each owner's utility under cfg: the share of its pool's profit, zero for
// inactive owners.
inline std::vector<Rational> participant_utilities(const Instance& inst,
                                                   const PoolingConfiguration& cfg) {
    validate_configuration(inst.universe, cfg);
    std::vector<Rational> utilities(inst.universe.owner_count(), Rational(0));
    for (const Pool& pool : cfg.pools) {
        const auto shares =
            split_rewards(pool.members, pool.split, inst.universe, inst.cost, inst.reward);
        for (const auto& [id, share] : shares) utilities[id] = share;
    }
    return utilities;
}

namespace detail {

inline bool coalition_improves(const std::vector<OwnerId>& members,
                               const std::map<OwnerId, Rational>& old_u,
                               const std::map<OwnerId, Rational>& new_u,
                               ImprovementMode mode) {
    bool some_strict = false;
    for (OwnerId id : members) {
        const Rational& before = old_u.at(id);
        const Rational& after = new_u.at(id);
        if (mode == ImprovementMode::AllStrictlyBetter) {
            if (after <= before) return false;
            some_strict = true;
        } else {
            if (after < before) return false;
            if (after > before) some_strict = true;
        }
    }
    return some_strict;
}

}  // namespace detail

// First profitable deviation plan for one fixed coalition, given the
// baseline utilities of the current configuration. Plans are ordered by
// the set of members going inactive (lex order, none first) and then by
// the canonical restricted-growth partition of the remaining members into
// new pools. Each new pool splits fair-share; rewards are simple, so the
// payoff of a deviating pool does not depend on what the non-deviators do.
inline std::optional<DeviationCertificate> deviation_for_coalition(
    const Instance& inst, const OwnerSet& coalition,
    const std::vector<Rational>& baseline, ImprovementMode mode) {
    const std::vector<OwnerId> members = coalition.members();
    std::map<OwnerId, Rational> old_u;
    for (OwnerId id : members) old_u[id] = baseline.at(id);

    // subsets of the coalition that go inactive, the empty set first
    std::vector<OwnerSet> inactive_choices{OwnerSet{}};
    for (const OwnerSet& s : nonempty_subsets_lex(coalition))
        inactive_choices.push_back(s);

    std::optional<DeviationCertificate> found;
    for (const OwnerSet& inactive : inactive_choices) {
        const std::vector<OwnerId> active = coalition.minus(inactive).members();
        const bool stop = for_each_partition(active, [&](const std::vector<OwnerSet>& pools) {
            std::map<OwnerId, Rational> new_u;
            for (OwnerId id : inactive.members()) new_u[id] = 0;
            for (const OwnerSet& pool : pools) {
                const Rational profit =
                    evaluate(inst.reward, inst.universe.measure(pool)) -
                    cost(inst.cost, inst.universe, pool);
                for (auto& [id, share] :
                     split_profit(pool, FairShare{}, inst.universe, profit))
                    new_u[id] = share;
            }
            if (detail::coalition_improves(members, old_u, new_u, mode)) {
                found = DeviationCertificate{coalition, pools, inactive, old_u, new_u};
                return true;
            }
            return false;
        });
        if (stop) break;
    }
    return found;
}

// Exhaustive coalition-deviation search; coalitions are visited in lex
// order and the first certificate wins, so the result is deterministic.
inline std::optional<DeviationCertificate> find_profitable_deviation(
    const Instance& inst, const PoolingConfiguration& cfg, ImprovementMode mode,
    std::size_t enumeration_bound = 10, std::uint64_t* coalitions_checked = nullptr) {
    const std::size_t n = inst.universe.owner_count();
    if (n > enumeration_bound) throw EnumerationLimitExceeded(n, enumeration_bound);
    const std::vector<Rational> baseline = participant_utilities(inst, cfg);

    std::optional<DeviationCertificate> found;
    std::uint64_t checked = 0;
    for (const OwnerSet& coalition : nonempty_subsets_lex(inst.universe.all_owners())) {
        ++checked;
        found = deviation_for_coalition(inst, coalition, baseline, mode);
        if (found) break;
    }
    if (coalitions_checked) *coalitions_checked = checked;
    return found;
}

inline EquilibriumReport is_strong_nash(const Instance& inst,
                                        const PoolingConfiguration& cfg,
                                        ImprovementMode mode,
                                        std::size_t enumeration_bound = 10) {
    EquilibriumReport report;
    report.mode = mode;
    report.certificate =
        find_profitable_deviation(inst, cfg, mode, enumeration_bound,
                                  &report.coalitions_checked);
    report.strong_nash = !report.certificate.has_value();
    return report;
}

}  // namespace respool

#endif  // RESPOOL_EQUILIBRIUM_HPP
