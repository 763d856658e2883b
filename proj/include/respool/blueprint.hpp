#ifndef RESPOOL_BLUEPRINT_HPP
#define RESPOOL_BLUEPRINT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "respool/equilibrium.hpp"
#include "respool/errors.hpp"
#include "respool/rational.hpp"
#include "respool/resource_model.hpp"
#include "respool/rng.hpp"
#include "respool/tokenomics.hpp"

namespace respool {

// Desk-scale epoch simulator: stake-weighted committee selection,
// performance-adjusted pool rewards, and in-pool splitting.
struct Scenario {
    Instance instance;
    PoolingConfiguration configuration;
    std::size_t committee_size = 1;
    Epoch epochs = 0;
    EmissionSchedule schedule = ConstantSchedule{Rational(0)};
    Rational treasury_rate;
    Rational fees_per_epoch;
    std::vector<Rational> performance;  // per pool, factors in [0,1]
    std::uint64_t seed = 0;
};

inline void validate_scenario(const Scenario& s) {
    validate_configuration(s.instance.universe, s.configuration);
    validate_schedule(s.schedule);
    if (s.committee_size < 1 || s.committee_size > s.configuration.pools.size())
        throw Error("committee size must be between 1 and the number of pools");
    if (s.performance.size() != s.configuration.pools.size())
        throw Error("one performance factor per pool required");
    for (const auto& f : s.performance)
        if (f < 0 || f > 1) throw Error("performance factors must lie in [0,1]");
    if (s.treasury_rate < 0 || s.treasury_rate > 1) throw RateOutOfRange();
    if (s.fees_per_epoch < 0) throw Error("fees must be nonnegative");
}

// Weighted sampling without replacement: each pool with positive weight w
// draws a key u^(1/w) from the seeded generator and the k largest keys win.
// Keys are floating point but only ever compared, never accumulated; ties
// break toward the lower pool index. Deterministic given the seed.
inline std::vector<std::size_t> select_committee(
    const std::vector<std::pair<std::size_t, Rational>>& stakes, std::size_t k,
    std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<double, std::size_t>> keyed;  // (key, pool index)
    for (const auto& [pool, weight] : stakes) {
        if (weight <= 0) continue;
        const double u = rng.next_unit();
        keyed.emplace_back(std::pow(u, 1.0 / weight.get_d()), pool);
    }
    if (k > keyed.size()) throw KTooLarge(k, keyed.size());
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<std::size_t> committee;
    for (std::size_t i = 0; i < k; ++i) committee.push_back(keyed[i].second);
    std::sort(committee.begin(), committee.end());
    return committee;
}

struct EpochRecord {
    Epoch epoch = 0;
    std::vector<std::size_t> committee;
    EpochPot pot;
    std::map<std::size_t, Rational> pool_rewards;  // post-performance, pre-cost
    std::map<OwnerId, Rational> owner_rewards;
    Rational shortfall;  // performance-withheld amount, carried to the treasury
};

// Baseline per committee pool is proportional to its committee-relative
// stake; the performance factor scales it down and the withheld remainder
// goes to the treasury. Pool cost is then subtracted and the rest split by
// the pool's strategy. Non-committee pools earn nothing this epoch.
inline EpochRecord distribute_epoch(const Scenario& s, Epoch epoch,
                                    const std::vector<std::size_t>& committee) {
    const ResourceUniverse& u = s.instance.universe;
    EpochRecord record;
    record.epoch = epoch;
    record.committee = committee;
    record.pot = epoch_pot(emission(s.schedule, epoch), s.fees_per_epoch, s.treasury_rate);
    record.shortfall = 0;

    Rational committee_stake = 0;
    for (std::size_t p : committee)
        committee_stake += u.measure(s.configuration.pools.at(p).members);

    for (std::size_t p : committee) {
        const Pool& pool = s.configuration.pools.at(p);
        const Rational baseline =
            record.pot.distributable * u.measure(pool.members) / committee_stake;
        const Rational reward = baseline * s.performance.at(p);
        record.pool_rewards[p] = reward;
        record.shortfall += baseline - reward;
        const Rational profit = reward - cost(s.instance.cost, u, pool.members);
        for (const auto& [id, share] : split_profit(pool.members, pool.split, u, profit))
            record.owner_rewards[id] += share;
    }
    return record;
}

inline std::vector<EpochRecord> run(const Scenario& s) {
    validate_scenario(s);
    std::vector<std::pair<std::size_t, Rational>> stakes;
    for (std::size_t p = 0; p < s.configuration.pools.size(); ++p)
        stakes.emplace_back(p,
                            s.instance.universe.measure(s.configuration.pools[p].members));
    SplitMix64 seeder(s.seed);
    std::vector<EpochRecord> records;
    for (Epoch e = 0; e < s.epochs; ++e) {
        const auto committee = select_committee(stakes, s.committee_size, seeder.next());
        records.push_back(distribute_epoch(s, e, committee));
    }
    return records;
}

}  // namespace respool

#endif  // RESPOOL_BLUEPRINT_HPP
