#ifndef RESPOOL_DYNAMICS_HPP
#define RESPOOL_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "respool/equilibrium.hpp"
#include "respool/rng.hpp"

namespace respool {

enum class MoveKind { CreateSoloPool, JoinPool, LeavePool };

struct Move {
    MoveKind kind = MoveKind::CreateSoloPool;
    std::size_t pool_index = 0;  // target pool, JoinPool only
};

struct MoveRules {
    bool allow_create = true;
    bool allow_join = true;
    bool allow_leave = true;
    // Accept a utility-preserving join when it strictly reduces the pool
    // count. Flat reward regions (a capped reward below its cap) make all
    // configurations utility-equivalent for the mover, and without this
    // rule the dynamics can never consolidate across them.
    bool consolidate_ties = true;
};

struct DynamicsStep {
    std::size_t round = 0;  // 1-based round-robin iteration
    OwnerId mover = 0;
    Move move;
    std::vector<OwnerSet> pools_after;
    Rational utility_before, utility_after;
};

struct DynamicsTrace {
    std::vector<DynamicsStep> steps;
    bool converged = false;
    std::size_t iterations = 0;
};

namespace detail {

inline PoolingConfiguration without_owner(const PoolingConfiguration& cfg, OwnerId id) {
    PoolingConfiguration out;
    for (const Pool& pool : cfg.pools) {
        Pool copy = pool;
        copy.members.erase(id);
        if (copy.members.empty()) continue;
        // an operator who departs leaves the pool on plain fair share
        if (const auto* om = std::get_if<OperatorMargin>(&copy.split))
            if (om->op == id) copy.split = FairShare{};
        out.pools.push_back(std::move(copy));
    }
    return out;
}

}  // namespace detail

// Round-robin best response. Each owner in turn evaluates CreateSoloPool,
// JoinPool and LeavePool, and takes the utility-maximizing accepted move:
// strictly improving, or (with consolidate_ties) utility-preserving while
// shrinking the pool count. Ties between accepted moves of equal utility
// break by kind order Create < Join-lowest-index < Leave. The seed only
// permutes the round-robin order once, up front.
inline DynamicsTrace best_response_dynamics(const Instance& inst,
                                            PoolingConfiguration cfg,
                                            MoveRules rules, std::size_t max_iter,
                                            std::uint64_t seed) {
    if (max_iter < 1) throw Error("max_iter must be at least 1");
    validate_configuration(inst.universe, cfg);
    const std::size_t n = inst.universe.owner_count();

    std::vector<OwnerId> order(n);
    for (OwnerId id = 0; id < n; ++id) order[id] = id;
    SplitMix64 rng(seed);
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[rng.next() % i]);

    DynamicsTrace trace;
    for (std::size_t round = 0; round < max_iter; ++round) {
        trace.iterations = round + 1;
        bool moved_this_round = false;
        for (OwnerId mover : order) {
            const Rational before = participant_utilities(inst, cfg)[mover];
            const auto current_pool = cfg.pool_of(mover);
            const PoolingConfiguration stripped = detail::without_owner(cfg, mover);

            std::optional<Move> best_move;
            std::optional<Rational> best_utility;
            PoolingConfiguration best_cfg;

            auto consider = [&](Move move, const PoolingConfiguration& candidate) {
                const Rational after = participant_utilities(inst, candidate)[mover];
                const bool accepted =
                    after > before ||
                    (rules.consolidate_ties && after == before &&
                     candidate.pools.size() < cfg.pools.size());
                if (!accepted) return;
                // kind order is already the visit order, so strict > keeps
                // the first best
                if (!best_utility || after > *best_utility) {
                    best_move = move;
                    best_utility = after;
                    best_cfg = candidate;
                }
            };

            if (rules.allow_create &&
                !(current_pool && cfg.pools[*current_pool].members.size() == 1)) {
                PoolingConfiguration candidate = stripped;
                candidate.pools.push_back(Pool{OwnerSet{mover}, FairShare{}});
                consider(Move{MoveKind::CreateSoloPool}, candidate);
            }
            if (rules.allow_join) {
                for (std::size_t p = 0; p < cfg.pools.size(); ++p) {
                    if (cfg.pools[p].members.contains(mover)) continue;
                    const OwnerSet target = cfg.pools[p].members;
                    PoolingConfiguration candidate = stripped;
                    for (Pool& pool : candidate.pools)
                        if (pool.members == target) pool.members.insert(mover);
                    consider(Move{MoveKind::JoinPool, p}, candidate);
                }
            }
            if (rules.allow_leave && current_pool)
                consider(Move{MoveKind::LeavePool}, stripped);

            if (best_move) {
                cfg = best_cfg;
                std::vector<OwnerSet> snapshot;
                for (const Pool& pool : cfg.pools) snapshot.push_back(pool.members);
                trace.steps.push_back(DynamicsStep{round + 1, mover, *best_move,
                                                   snapshot, before, *best_utility});
                moved_this_round = true;
            }
        }
        if (!moved_this_round) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

}  // namespace respool

#endif  // RESPOOL_DYNAMICS_HPP
