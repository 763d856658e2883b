#ifndef RESPOOL_SCENARIO_HPP
#define RESPOOL_SCENARIO_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "respool/blueprint.hpp"
#include "respool/cost_model.hpp"
#include "respool/dynamics.hpp"
#include "respool/equilibrium.hpp"
#include "respool/errors.hpp"
#include "respool/resource_model.hpp"
#include "respool/reward_model.hpp"
#include "respool/tokenomics.hpp"

namespace respool {

using Json = nlohmann::ordered_json;

struct DynamicsParams {
    std::size_t max_iter = 100;
    std::uint64_t seed = 0;
};

struct TokenomicsParams {
    EmissionSchedule schedule = ConstantSchedule{Rational(0)};
    Rational treasury_rate;
    Rational fees_per_epoch;
};

struct BlueprintParams {
    std::size_t k = 1;
    Epoch epochs = 0;
    std::vector<Rational> performance;
    std::uint64_t seed = 0;
};

// One parsed scenario document. Every rational comes from a "p/q" string
// or an integer literal; unknown fields are rejected.
struct ScenarioDoc {
    ResourceUniverse universe;
    CostModel cost;
    RewardModel reward;
    std::optional<PoolingConfiguration> configuration;
    ImprovementMode mode = ImprovementMode::AllStrictlyBetter;
    std::size_t max_owners = 10;
    unsigned cauchy_denominator = 12;
    std::optional<DynamicsParams> dynamics;
    std::optional<TokenomicsParams> tokenomics;
    std::optional<BlueprintParams> blueprint;
};

namespace detail {

inline void check_fields(const Json& obj, std::vector<std::string> allowed,
                         const std::string& where) {
    if (!obj.is_object()) throw ScenarioError(where + " must be an object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const auto& name : allowed) ok = ok || key == name;
        if (!ok) throw ScenarioError("unknown field \"" + key + "\" in " + where);
    }
}

inline Rational read_rational(const Json& v, const std::string& where) {
    if (v.is_number_integer())
        return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        if (auto r = parse_rational(v.get<std::string>())) return *r;
        throw ScenarioError("malformed rational \"" + v.get<std::string>() + "\" in " + where);
    }
    throw ScenarioError(where + " must be a \"p/q\" string or integer");
}

inline std::vector<Rational> read_rational_list(const Json& v, const std::string& where) {
    if (!v.is_array()) throw ScenarioError(where + " must be an array");
    std::vector<Rational> out;
    for (const auto& item : v) out.push_back(read_rational(item, where));
    return out;
}

inline std::uint64_t read_uint(const Json& v, const std::string& where) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ScenarioError(where + " must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

inline OwnerSet read_members(const Json& v, const std::string& where) {
    if (!v.is_array()) throw ScenarioError(where + " must be an array of owner ids");
    OwnerSet s;
    for (const auto& item : v) {
        const auto id = read_uint(item, where);
        if (id >= OwnerSet::max_owners) throw ScenarioError(where + ": owner id too large");
        s.insert(static_cast<OwnerId>(id));
    }
    return s;
}

inline CostModel read_cost(const Json& v, const ResourceUniverse& u) {
    check_fields(v, {"kind", "fixed", "marginal", "entries"}, "cost");
    const std::string kind = v.value("kind", "");
    if (kind == "operator_linear") {
        check_fields(v, {"kind", "fixed", "marginal"}, "cost");
        OperatorLinearCost lin{read_rational_list(v.at("fixed"), "cost.fixed"),
                               read_rational_list(v.at("marginal"), "cost.marginal")};
        CostModel model = lin;
        validate_cost_model(model, u);
        return model;
    }
    if (kind == "tabulated") {
        check_fields(v, {"kind", "entries"}, "cost");
        TabulatedCost tab;
        for (const auto& entry : v.at("entries")) {
            check_fields(entry, {"members", "cost"}, "cost.entries");
            tab.set(read_members(entry.at("members"), "cost.entries.members"),
                    read_rational(entry.at("cost"), "cost.entries.cost"));
        }
        return tab;
    }
    throw ScenarioError("cost.kind must be \"operator_linear\" or \"tabulated\"");
}

inline RewardModel read_reward(const Json& v) {
    const std::string kind = v.value("kind", "");
    RewardModel model = LinearReward{Rational(0)};
    if (kind == "linear") {
        check_fields(v, {"kind", "gamma"}, "reward");
        model = LinearReward{read_rational(v.at("gamma"), "reward.gamma")};
    } else if (kind == "capped") {
        check_fields(v, {"kind", "gamma", "beta"}, "reward");
        model = CappedReward{read_rational(v.at("gamma"), "reward.gamma"),
                             read_rational(v.at("beta"), "reward.beta")};
    } else if (kind == "power") {
        check_fields(v, {"kind", "gamma", "exponent"}, "reward");
        model = PowerConvexReward{
            read_rational(v.at("gamma"), "reward.gamma"),
            static_cast<unsigned>(read_uint(v.at("exponent"), "reward.exponent"))};
    } else if (kind == "tabulated") {
        check_fields(v, {"kind", "grid"}, "reward");
        TabulatedReward tab;
        for (const auto& point : v.at("grid")) {
            if (!point.is_array() || point.size() != 2)
                throw ScenarioError("reward.grid entries must be [measure, value] pairs");
            tab.grid.emplace_back(read_rational(point[0], "reward.grid"),
                                  read_rational(point[1], "reward.grid"));
        }
        model = tab;
    } else {
        throw ScenarioError("reward.kind must be linear, capped, power or tabulated");
    }
    validate_reward_model(model);
    return model;
}

inline SplittingStrategy read_split(const Json& v) {
    const std::string kind = v.value("kind", "");
    if (kind == "fair_share") {
        check_fields(v, {"kind"}, "split");
        return FairShare{};
    }
    if (kind == "operator_margin") {
        check_fields(v, {"kind", "operator", "margin"}, "split");
        return OperatorMargin{
            static_cast<OwnerId>(read_uint(v.at("operator"), "split.operator")),
            read_rational(v.at("margin"), "split.margin")};
    }
    throw ScenarioError("split.kind must be \"fair_share\" or \"operator_margin\"");
}

inline PoolingConfiguration read_configuration(const Json& v, const ResourceUniverse& u) {
    check_fields(v, {"pools"}, "configuration");
    PoolingConfiguration cfg;
    for (const auto& pool : v.at("pools")) {
        check_fields(pool, {"members", "split"}, "configuration.pools");
        Pool p;
        p.members = read_members(pool.at("members"), "configuration.pools.members");
        if (pool.contains("split")) p.split = read_split(pool.at("split"));
        cfg.pools.push_back(std::move(p));
    }
    validate_configuration(u, cfg);
    return cfg;
}

inline EmissionSchedule read_schedule(const Json& v) {
    const std::string kind = v.value("kind", "");
    EmissionSchedule s = ConstantSchedule{Rational(0)};
    if (kind == "constant") {
        check_fields(v, {"kind", "rate"}, "schedule");
        s = ConstantSchedule{read_rational(v.at("rate"), "schedule.rate")};
    } else if (kind == "halving") {
        check_fields(v, {"kind", "initial", "interval"}, "schedule");
        s = HalvingSchedule{read_rational(v.at("initial"), "schedule.initial"),
                            read_uint(v.at("interval"), "schedule.interval")};
    } else if (kind == "custom") {
        check_fields(v, {"kind", "ranges"}, "schedule");
        CustomSchedule custom;
        for (const auto& range : v.at("ranges")) {
            check_fields(range, {"first", "last", "rate"}, "schedule.ranges");
            custom.ranges.push_back(CustomRange{
                read_uint(range.at("first"), "schedule.ranges.first"),
                read_uint(range.at("last"), "schedule.ranges.last"),
                read_rational(range.at("rate"), "schedule.ranges.rate")});
        }
        s = custom;
    } else {
        throw ScenarioError("schedule.kind must be constant, halving or custom");
    }
    validate_schedule(s);
    return s;
}

}  // namespace detail

inline ScenarioDoc parse_scenario(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("invalid scenario document: ") + e.what());
    }
    try {
        detail::check_fields(doc,
                             {"universe", "cost", "reward", "configuration", "mode",
                              "max_owners", "cauchy_denominator", "dynamics",
                              "tokenomics", "blueprint"},
                             "scenario");
        detail::check_fields(doc.at("universe"), {"weights"}, "universe");
        auto universe = ResourceUniverse::from_weights(
            detail::read_rational_list(doc.at("universe").at("weights"), "universe.weights"));
        auto cost_model = detail::read_cost(doc.at("cost"), universe);
        auto reward_model = detail::read_reward(doc.at("reward"));

        ScenarioDoc out{std::move(universe), std::move(cost_model), std::move(reward_model)};

        if (doc.contains("configuration"))
            out.configuration = detail::read_configuration(doc.at("configuration"), out.universe);
        if (doc.contains("mode")) {
            const std::string mode = doc.at("mode").get<std::string>();
            if (mode == "strict") out.mode = ImprovementMode::AllStrictlyBetter;
            else if (mode == "pareto") out.mode = ImprovementMode::ParetoImprovement;
            else throw ScenarioError("mode must be \"strict\" or \"pareto\"");
        }
        if (doc.contains("max_owners"))
            out.max_owners = detail::read_uint(doc.at("max_owners"), "max_owners");
        if (doc.contains("cauchy_denominator"))
            out.cauchy_denominator = static_cast<unsigned>(
                detail::read_uint(doc.at("cauchy_denominator"), "cauchy_denominator"));
        if (doc.contains("dynamics")) {
            detail::check_fields(doc.at("dynamics"), {"max_iter", "seed"}, "dynamics");
            DynamicsParams dp;
            if (doc.at("dynamics").contains("max_iter"))
                dp.max_iter = detail::read_uint(doc.at("dynamics").at("max_iter"),
                                                "dynamics.max_iter");
            if (doc.at("dynamics").contains("seed"))
                dp.seed = detail::read_uint(doc.at("dynamics").at("seed"), "dynamics.seed");
            out.dynamics = dp;
        }
        if (doc.contains("tokenomics")) {
            const Json& t = doc.at("tokenomics");
            detail::check_fields(t, {"schedule", "treasury_rate", "fees_per_epoch"},
                                 "tokenomics");
            TokenomicsParams tp;
            tp.schedule = detail::read_schedule(t.at("schedule"));
            if (t.contains("treasury_rate"))
                tp.treasury_rate = detail::read_rational(t.at("treasury_rate"),
                                                         "tokenomics.treasury_rate");
            if (t.contains("fees_per_epoch"))
                tp.fees_per_epoch = detail::read_rational(t.at("fees_per_epoch"),
                                                          "tokenomics.fees_per_epoch");
            if (tp.treasury_rate < 0 || tp.treasury_rate > 1)
                throw ScenarioError("tokenomics.treasury_rate must lie in [0,1]");
            out.tokenomics = tp;
        }
        if (doc.contains("blueprint")) {
            const Json& b = doc.at("blueprint");
            detail::check_fields(b, {"k", "epochs", "performance", "seed"}, "blueprint");
            BlueprintParams bp;
            bp.k = detail::read_uint(b.at("k"), "blueprint.k");
            bp.epochs = detail::read_uint(b.at("epochs"), "blueprint.epochs");
            if (b.contains("performance"))
                bp.performance =
                    detail::read_rational_list(b.at("performance"), "blueprint.performance");
            if (b.contains("seed"))
                bp.seed = detail::read_uint(b.at("seed"), "blueprint.seed");
            out.blueprint = bp;
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("invalid scenario document: ") + e.what());
    } catch (const ScenarioError&) {
        throw;
    } catch (const Error& e) {
        // model-level validation failures surface as scenario errors too,
        // so callers see a single exception type for bad input documents
        throw ScenarioError(e.what());
    }
}

namespace detail {

inline Json rational_json(const Rational& r) { return format_rational(r); }

inline Json members_json(const OwnerSet& s) {
    Json arr = Json::array();
    for (OwnerId id : s.members()) arr.push_back(id);
    return arr;
}

}  // namespace detail

inline Json serialize_scenario(const ScenarioDoc& doc) {
    using detail::members_json;
    using detail::rational_json;
    Json out;

    Json weights = Json::array();
    for (OwnerId id = 0; id < doc.universe.owner_count(); ++id)
        weights.push_back(rational_json(doc.universe.weight(id)));
    out["universe"] = Json{{"weights", weights}};

    if (const auto* lin = std::get_if<OperatorLinearCost>(&doc.cost)) {
        Json fixed = Json::array(), marginal = Json::array();
        for (const auto& c : lin->fixed) fixed.push_back(rational_json(c));
        for (const auto& d : lin->marginal) marginal.push_back(rational_json(d));
        out["cost"] = Json{{"kind", "operator_linear"}, {"fixed", fixed}, {"marginal", marginal}};
    } else {
        const auto& tab = std::get<TabulatedCost>(doc.cost);
        Json entries = Json::array();
        for (const auto& [bits, value] : tab.table)
            entries.push_back(Json{{"members", members_json(OwnerSet(bits))},
                                   {"cost", rational_json(value)}});
        out["cost"] = Json{{"kind", "tabulated"}, {"entries", entries}};
    }

    if (const auto* lin = std::get_if<LinearReward>(&doc.reward)) {
        out["reward"] = Json{{"kind", "linear"}, {"gamma", rational_json(lin->gamma)}};
    } else if (const auto* cap = std::get_if<CappedReward>(&doc.reward)) {
        out["reward"] = Json{{"kind", "capped"},
                             {"gamma", rational_json(cap->gamma)},
                             {"beta", rational_json(cap->beta)}};
    } else if (const auto* pow = std::get_if<PowerConvexReward>(&doc.reward)) {
        out["reward"] = Json{{"kind", "power"},
                             {"gamma", rational_json(pow->gamma)},
                             {"exponent", pow->exponent}};
    } else {
        const auto& tab = std::get<TabulatedReward>(doc.reward);
        Json grid = Json::array();
        for (const auto& [measure, value] : tab.grid)
            grid.push_back(Json::array({rational_json(measure), rational_json(value)}));
        out["reward"] = Json{{"kind", "tabulated"}, {"grid", grid}};
    }

    if (doc.configuration) {
        Json pools = Json::array();
        for (const Pool& pool : doc.configuration->pools) {
            Json p{{"members", members_json(pool.members)}};
            if (const auto* om = std::get_if<OperatorMargin>(&pool.split))
                p["split"] = Json{{"kind", "operator_margin"},
                                  {"operator", om->op},
                                  {"margin", rational_json(om->margin)}};
            else
                p["split"] = Json{{"kind", "fair_share"}};
            pools.push_back(p);
        }
        out["configuration"] = Json{{"pools", pools}};
    }

    out["mode"] = doc.mode == ImprovementMode::AllStrictlyBetter ? "strict" : "pareto";
    out["max_owners"] = doc.max_owners;
    out["cauchy_denominator"] = doc.cauchy_denominator;

    if (doc.dynamics)
        out["dynamics"] =
            Json{{"max_iter", doc.dynamics->max_iter}, {"seed", doc.dynamics->seed}};

    if (doc.tokenomics) {
        Json schedule;
        if (const auto* c = std::get_if<ConstantSchedule>(&doc.tokenomics->schedule)) {
            schedule = Json{{"kind", "constant"}, {"rate", rational_json(c->rate)}};
        } else if (const auto* h = std::get_if<HalvingSchedule>(&doc.tokenomics->schedule)) {
            schedule = Json{{"kind", "halving"},
                            {"initial", rational_json(h->initial)},
                            {"interval", h->interval}};
        } else {
            const auto& custom = std::get<CustomSchedule>(doc.tokenomics->schedule);
            Json ranges = Json::array();
            for (const auto& r : custom.ranges)
                ranges.push_back(Json{{"first", r.first},
                                      {"last", r.last},
                                      {"rate", rational_json(r.rate)}});
            schedule = Json{{"kind", "custom"}, {"ranges", ranges}};
        }
        out["tokenomics"] = Json{{"schedule", schedule},
                                 {"treasury_rate", rational_json(doc.tokenomics->treasury_rate)},
                                 {"fees_per_epoch", rational_json(doc.tokenomics->fees_per_epoch)}};
    }

    if (doc.blueprint) {
        Json performance = Json::array();
        for (const auto& f : doc.blueprint->performance)
            performance.push_back(rational_json(f));
        out["blueprint"] = Json{{"k", doc.blueprint->k},
                                {"epochs", doc.blueprint->epochs},
                                {"performance", performance},
                                {"seed", doc.blueprint->seed}};
    }
    return out;
}

}  // namespace respool

#endif  // RESPOOL_SCENARIO_HPP
