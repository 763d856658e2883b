#ifndef RESPOOL_REWARD_MODEL_HPP
#define RESPOOL_REWARD_MODEL_HPP

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "respool/cost_model.hpp"
#include "respool/errors.hpp"
#include "respool/owner_set.hpp"
#include "respool/rational.hpp"
#include "respool/resource_model.hpp"
#include "respool/splitting.hpp"

namespace respool {

// Reward as a function of measure alone. Defining the families on measure
// makes resource fungibility structural: equal-measure sets cannot earn
// differently.
struct LinearReward {
    Rational gamma;  // reward units per unit of measure
};

// gamma * min(x, beta): rewards stop growing once a pool reaches the cap.
struct CappedReward {
    Rational gamma;
    Rational beta;  // cap on effective measure, in (0,1]
};

// gamma * x^e with integer e >= 2; superadditive, favors concentration.
struct PowerConvexReward {
    Rational gamma;
    unsigned exponent = 2;
};

// Exact lookup on a fixed grid; evaluation between grid points is an error.
struct TabulatedReward {
    std::vector<std::pair<Rational, Rational>> grid;  // (measure, value), increasing
};

using RewardModel =
    std::variant<LinearReward, CappedReward, PowerConvexReward, TabulatedReward>;

inline void validate_reward_model(const RewardModel& model) {
    if (const auto* lin = std::get_if<LinearReward>(&model)) {
        if (lin->gamma < 0) throw Error("gamma must be nonnegative");
    } else if (const auto* cap = std::get_if<CappedReward>(&model)) {
        if (cap->gamma < 0) throw Error("gamma must be nonnegative");
        if (cap->beta <= 0 || cap->beta > 1) throw Error("beta must be in (0,1]");
    } else if (const auto* pow = std::get_if<PowerConvexReward>(&model)) {
        if (pow->gamma < 0) throw Error("gamma must be nonnegative");
        if (pow->exponent < 2) throw Error("exponent must be at least 2");
    } else {
        const auto& tab = std::get<TabulatedReward>(model);
        if (tab.grid.empty() || tab.grid.front().first != 0 ||
            tab.grid.front().second != 0)
            throw Error("tabulated reward grid must start at (0, 0)");
        for (std::size_t i = 1; i < tab.grid.size(); ++i)
            if (tab.grid[i].first <= tab.grid[i - 1].first)
                throw Error("tabulated reward grid measures must strictly increase");
    }
}

inline Rational evaluate(const RewardModel& model, const Rational& x) {
    if (x < 0 || x > 1) throw MeasureOutOfRange();
    if (const auto* lin = std::get_if<LinearReward>(&model))
        return lin->gamma * x;
    if (const auto* cap = std::get_if<CappedReward>(&model))
        return cap->gamma * (x < cap->beta ? x : cap->beta);
    if (const auto* pow = std::get_if<PowerConvexReward>(&model))
        return pow->gamma * pow_rational(x, pow->exponent);
    const auto& tab = std::get<TabulatedReward>(model);
    for (const auto& [measure, value] : tab.grid)
        if (measure == x) return value;
    throw NotOnGrid();
}

enum class Axiom { SybilResilience, Egalitarianism };

struct AxiomWitness {
    Axiom axiom;
    OwnerSet first, second;  // the violating disjoint pair
    Rational lhs, rhs;       // the two sides of the violated inequality
};

namespace detail {

// Shared loop over disjoint nonempty join pairs of the universe, tracking
// the lex-smallest violating pair. Rewards are cached per measure so the
// scan is dominated by rational comparisons.
template <typename Violates>
std::optional<AxiomWitness> scan_disjoint_pairs(const RewardModel& model,
                                                const ResourceUniverse& u,
                                                std::size_t pair_bound,
                                                Axiom axiom, Violates&& violates) {
    const OwnerSet all = u.all_owners();
    if (all.size() > pair_bound) throw SubsetLimitExceeded(all.size(), pair_bound);
    std::map<std::uint64_t, Rational> measure_of;
    for_each_nonempty_subset(all, [&](OwnerSet s) {
        measure_of.emplace(s.bits(), u.measure(s));
        return false;
    });
    std::optional<AxiomWitness> witness;
    for_each_nonempty_subset(all, [&](OwnerSet p1) {
        for_each_nonempty_subset(all.minus(p1), [&](OwnerSet p2) {
            if (!lex_less(p1, p2)) return false;  // the inequality is symmetric
            const Rational& m1 = measure_of.at(p1.bits());
            const Rational& m2 = measure_of.at(p2.bits());
            const Rational joint = evaluate(model, m1 + m2);
            const Rational split = evaluate(model, m1) + evaluate(model, m2);
            if (violates(joint, split)) {
                if (!witness || lex_less(p1, witness->first) ||
                    (p1 == witness->first && lex_less(p2, witness->second)))
                    witness = AxiomWitness{axiom, p1, p2, joint, split};
            }
            return false;
        });
        return false;
    });
    return witness;
}

}  // namespace detail

// Sybil resilience: rho(P1 u P2) >= rho(P1) + rho(P2) on disjoint joins.
inline std::optional<AxiomWitness> check_sybil_resilience(
    const RewardModel& model, const ResourceUniverse& u,
    std::size_t pair_bound = 13) {
    return detail::scan_disjoint_pairs(
        model, u, pair_bound, Axiom::SybilResilience,
        [](const Rational& joint, const Rational& split) { return joint < split; });
}

// Egalitarianism: rho(P) <= rho(Q) + rho(R) whenever sigma(P) equals
// sigma(Q) + sigma(R). Fungibility reduces the check to measures, so no
// actual set P of the combined measure needs to exist.
inline std::optional<AxiomWitness> check_egalitarianism(
    const RewardModel& model, const ResourceUniverse& u,
    std::size_t pair_bound = 13) {
    return detail::scan_disjoint_pairs(
        model, u, pair_bound, Axiom::Egalitarianism,
        [](const Rational& joint, const Rational& split) { return joint > split; });
}

struct CauchyWitness {
    unsigned k;
    Rational lhs, rhs;  // rho(k/N) and k * rho(1/N)
};

// The rational-grid consequence of super- plus sub-additivity: a model
// satisfying both axioms must be linear on the grid {k/N}.
inline std::optional<CauchyWitness> check_cauchy_linearity(const RewardModel& model,
                                                           unsigned denominator) {
    if (denominator < 1) throw Error("denominator must be at least 1");
    const Rational unit = evaluate(model, Rational(1, denominator));
    for (unsigned k = 0; k <= denominator; ++k) {
        const Rational lhs = evaluate(model, Rational(k) / denominator);
        const Rational rhs = k * unit;
        if (lhs != rhs) return CauchyWitness{k, lhs, rhs};
    }
    return std::nullopt;
}

// Splits a pool profit among members. FairShare gives owner i the fraction
// x_i / sigma(P); OperatorMargin takes the margin off the top first.
// Shares always sum to the profit exactly, negative profits included.
inline std::map<OwnerId, Rational> split_profit(const OwnerSet& pool,
                                                const SplittingStrategy& strategy,
                                                const ResourceUniverse& u,
                                                const Rational& profit) {
    if (pool.empty()) throw EmptyPool(0);
    const Rational pool_measure = u.measure(pool);
    std::map<OwnerId, Rational> shares;
    Rational fair_pot = profit;
    if (const auto* om = std::get_if<OperatorMargin>(&strategy)) {
        if (!pool.contains(om->op))
            throw Error("operator " + std::to_string(om->op) + " not in pool");
        if (om->margin < 0 || om->margin > 1) throw Error("margin outside [0,1]");
        shares[om->op] = om->margin * profit;
        fair_pot = (1 - om->margin) * profit;
    }
    for (OwnerId id : pool.members())
        shares[id] += (u.weight(id) / pool_measure) * fair_pot;
    return shares;
}

inline std::map<OwnerId, Rational> split_rewards(const OwnerSet& pool,
                                                 const SplittingStrategy& strategy,
                                                 const ResourceUniverse& u,
                                                 const CostModel& cost_model,
                                                 const RewardModel& reward_model) {
    const Rational profit =
        evaluate(reward_model, u.measure(pool)) - cost(cost_model, u, pool);
    return split_profit(pool, strategy, u, profit);
}

// Viable: rewards cover costs.
inline bool is_viable(const OwnerSet& p, const CostModel& cost_model,
                      const RewardModel& reward_model, const ResourceUniverse& u) {
    return evaluate(reward_model, u.measure(p)) >= cost(cost_model, u, p);
}

}  // namespace respool

#endif  // RESPOOL_REWARD_MODEL_HPP
