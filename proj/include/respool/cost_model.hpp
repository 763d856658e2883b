#ifndef RESPOOL_COST_MODEL_HPP
#define RESPOOL_COST_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "respool/errors.hpp"
#include "respool/owner_set.hpp"
#include "respool/rational.hpp"
#include "respool/resource_model.hpp"

namespace respool {

// c(P) = sum of per-member marginal costs d_i * x_i, plus the smallest
// fixed cost among the members (the cheapest member operates the pool).
struct OperatorLinearCost {
    std::vector<Rational> fixed;     // c_i >= 0, one per owner
    std::vector<Rational> marginal;  // d_i >= 0, one per owner
};

// An explicit cost table on owner joins; missing entries are undefined.
struct TabulatedCost {
    std::map<std::uint64_t, Rational> table;  // keyed by OwnerSet bits

    void set(const OwnerSet& s, Rational value) { table[s.bits()] = std::move(value); }
    bool has(const OwnerSet& s) const { return table.count(s.bits()) != 0; }
};

using CostModel = std::variant<OperatorLinearCost, TabulatedCost>;

inline void validate_cost_model(const CostModel& model, const ResourceUniverse& u) {
    if (const auto* lin = std::get_if<OperatorLinearCost>(&model)) {
        if (lin->fixed.size() != u.owner_count() ||
            lin->marginal.size() != u.owner_count())
            throw Error("operator-linear cost vectors must have one entry per owner");
        for (const auto& c : lin->fixed)
            if (c < 0) throw Error("fixed costs must be nonnegative");
        for (const auto& d : lin->marginal)
            if (d < 0) throw Error("marginal costs must be nonnegative");
    }
}

inline Rational cost(const CostModel& model, const ResourceUniverse& u,
                     const OwnerSet& p) {
    if (p.empty()) throw EmptySet();
    if (const auto* lin = std::get_if<OperatorLinearCost>(&model)) {
        Rational sum = 0;
        std::optional<Rational> min_fixed;
        for (OwnerId id : p.members()) {
            if (id >= u.owner_count()) throw UnknownOwner(id);
            sum += lin->marginal.at(id) * u.weight(id);
            if (!min_fixed || lin->fixed.at(id) < *min_fixed)
                min_fixed = lin->fixed.at(id);
        }
        return sum + *min_fixed;
    }
    const auto& tab = std::get<TabulatedCost>(model);
    const auto it = tab.table.find(p.bits());
    if (it == tab.table.end()) throw UndefinedCost(p.to_string());
    return it->second;
}

// Lowest-index owner achieving the minimum fixed cost; reporting only,
// the cost value does not depend on the choice.
inline OwnerId operating_owner(const OperatorLinearCost& model, const OwnerSet& p) {
    if (p.empty()) throw EmptySet();
    OwnerId best = p.members().front();
    for (OwnerId id : p.members())
        if (model.fixed.at(id) < model.fixed.at(best)) best = id;
    return best;
}

// Largest spread between marginal costs: max d_i - min d_i.
inline Rational delta(const OperatorLinearCost& model) {
    Rational lo = model.marginal.front(), hi = lo;
    for (const auto& d : model.marginal) {
        if (d < lo) lo = d;
        if (d > hi) hi = d;
    }
    return hi - lo;
}

// Sufficient condition for the full universe to be cost efficient.
inline bool satisfies_prop1_condition(const OperatorLinearCost& model) {
    Rational min_fixed = model.fixed.front();
    for (const auto& c : model.fixed)
        if (c < min_fixed) min_fixed = c;
    return delta(model) <= min_fixed;
}

// Lex-smallest nonempty subset of p with strictly lower cost per unit of
// measure, or nullopt when p is cost efficient. Always enumerates; the
// sufficient condition above is never used as a shortcut.
inline std::optional<OwnerSet> cost_inefficiency_witness(
    const OwnerSet& p, const CostModel& model, const ResourceUniverse& u,
    std::size_t subset_bound = 20) {
    if (p.empty()) throw EmptySet();
    if (p.size() > subset_bound) throw SubsetLimitExceeded(p.size(), subset_bound);
    const Rational ratio_p = cost(model, u, p) / u.measure(p);
    std::optional<OwnerSet> witness;
    for_each_nonempty_subset(p, [&](OwnerSet s) {
        if (cost(model, u, s) / u.measure(s) < ratio_p)
            if (!witness || lex_less(s, *witness)) witness = s;
        return false;
    });
    return witness;
}

inline bool is_cost_efficient(const OwnerSet& p, const CostModel& model,
                              const ResourceUniverse& u,
                              std::size_t subset_bound = 20) {
    return !cost_inefficiency_witness(p, model, u, subset_bound).has_value();
}

// Checks c(P1 u P2) <= c(P1) + c(P2) over all disjoint nonempty joins.
// Returns the lex-smallest violating pair, ordered within the pair.
inline std::optional<std::pair<OwnerSet, OwnerSet>> economies_of_scale_witness(
    const CostModel& model, const ResourceUniverse& u,
    std::size_t pair_bound = 13) {
    const OwnerSet all = u.all_owners();
    if (all.size() > pair_bound) throw SubsetLimitExceeded(all.size(), pair_bound);
    std::optional<std::pair<OwnerSet, OwnerSet>> witness;
    for_each_nonempty_subset(all, [&](OwnerSet p1) {
        for_each_nonempty_subset(all.minus(p1), [&](OwnerSet p2) {
            if (!lex_less(p1, p2)) return false;
            if (cost(model, u, p1.unite(p2)) > cost(model, u, p1) + cost(model, u, p2)) {
                const auto pair = std::make_pair(p1, p2);
                if (!witness || lex_less(p1, witness->first) ||
                    (p1 == witness->first && lex_less(p2, witness->second)))
                    witness = pair;
            }
            return false;
        });
        return false;
    });
    return witness;
}

}  // namespace respool

#endif  // RESPOOL_COST_MODEL_HPP
