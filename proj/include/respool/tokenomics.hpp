#ifndef RESPOOL_TOKENOMICS_HPP
#define RESPOOL_TOKENOMICS_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "respool/errors.hpp"
#include "respool/rational.hpp"

namespace respool {

using Epoch = std::uint64_t;

struct ConstantSchedule {
    Rational rate;  // coin units per epoch
};

// initial / 2^floor(epoch / interval); total supply bounded by
// 2 * initial * interval.
struct HalvingSchedule {
    Rational initial;
    Epoch interval = 1;  // epochs per halving
};

struct CustomRange {
    Epoch first = 0, last = 0;  // inclusive
    Rational rate;
};

// Caller-computed rates; ranges must be contiguous from epoch 0.
struct CustomSchedule {
    std::vector<CustomRange> ranges;
};

using EmissionSchedule = std::variant<ConstantSchedule, HalvingSchedule, CustomSchedule>;

inline void validate_schedule(const EmissionSchedule& s) {
    if (const auto* c = std::get_if<ConstantSchedule>(&s)) {
        if (c->rate < 0) throw Error("emission rate must be nonnegative");
    } else if (const auto* h = std::get_if<HalvingSchedule>(&s)) {
        if (h->initial < 0) throw Error("initial emission must be nonnegative");
        if (h->interval < 1) throw Error("halving interval must be at least 1");
    } else {
        const auto& ranges = std::get<CustomSchedule>(s).ranges;
        Epoch expected = 0;
        for (const auto& r : ranges) {
            if (r.first != expected || r.last < r.first)
                throw Error("custom schedule ranges must be contiguous from epoch 0");
            if (r.rate < 0) throw Error("emission rate must be nonnegative");
            expected = r.last + 1;
        }
    }
}

inline Rational emission(const EmissionSchedule& s, Epoch epoch) {
    if (const auto* c = std::get_if<ConstantSchedule>(&s)) return c->rate;
    if (const auto* h = std::get_if<HalvingSchedule>(&s))
        return h->initial / Rational(pow2(static_cast<unsigned long>(epoch / h->interval)));
    for (const auto& r : std::get<CustomSchedule>(s).ranges)
        if (epoch >= r.first && epoch <= r.last) return r.rate;
    throw EpochOutOfCustomRange(epoch);
}

// Exact partial sum of emissions over epochs 0..through_epoch.
inline Rational cumulative_emission(const EmissionSchedule& s, Epoch through_epoch) {
    if (const auto* c = std::get_if<ConstantSchedule>(&s))
        return c->rate * Rational(through_epoch + 1);
    if (const auto* h = std::get_if<HalvingSchedule>(&s)) {
        const Epoch epochs = through_epoch + 1;
        const Epoch full_eras = epochs / h->interval;
        const Epoch remainder = epochs % h->interval;
        // sum over full eras: initial * interval * (2 - 2^(1 - full_eras))
        const Rational era_scale =
            2 - Rational(2) / Rational(pow2(static_cast<unsigned long>(full_eras)));
        Rational sum = h->initial * Rational(h->interval) * era_scale;
        sum += Rational(remainder) * h->initial /
               Rational(pow2(static_cast<unsigned long>(full_eras)));
        return sum;
    }
    const auto& ranges = std::get<CustomSchedule>(s).ranges;
    Rational sum = 0;
    for (const auto& r : ranges) {
        if (through_epoch < r.first) break;
        const Epoch last = through_epoch < r.last ? through_epoch : r.last;
        sum += r.rate * Rational(last - r.first + 1);
    }
    if (ranges.empty() || through_epoch > ranges.back().last)
        throw EpochOutOfCustomRange(through_epoch);
    return sum;
}

// All-time supply supremum, when the schedule has one.
inline std::optional<Rational> supply_limit(const EmissionSchedule& s) {
    if (const auto* h = std::get_if<HalvingSchedule>(&s))
        return 2 * h->initial * Rational(h->interval);
    return std::nullopt;
}

struct EpochPot {
    Rational emission, fees, treasury_cut, distributable;
};

// Treasury taxes the combined pot of fresh emission and collected fees.
inline EpochPot epoch_pot(const Rational& emission_amount, const Rational& fees,
                          const Rational& treasury_rate) {
    if (emission_amount < 0 || fees < 0) throw Error("pot inputs must be nonnegative");
    if (treasury_rate < 0 || treasury_rate > 1) throw RateOutOfRange();
    const Rational total = emission_amount + fees;
    const Rational cut = treasury_rate * total;
    return EpochPot{emission_amount, fees, cut, total - cut};
}

}  // namespace respool

#endif  // RESPOOL_TOKENOMICS_HPP
