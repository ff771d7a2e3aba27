#pragma once

#include <string>
#include <vector>

#include "iclc/channel.hpp"

namespace iclc {

enum class Duplex { Half, Full };

inline const char* duplex_name(Duplex d) { return d == Duplex::Half ? "half" : "full"; }

// Total cooperation budget. Half duplex shares pi across the two directions
// (d01 + d02 <= pi); full duplex caps each direction at pi/2.
struct CoopBudget {
    Duplex mode = Duplex::Half;
    Rat pi;

    bool valid() const { return pi.is_nonneg(); }
};

// Directional budgets d01 <= pi01, d02 <= pi02 for the general converse.
struct SplitBudget {
    Rat pi01, pi02;
    bool valid() const { return pi01.is_nonneg() && pi02.is_nonneg(); }
};

struct Bound {
    std::string id;
    Rat value;
    bool active = false;  // tight at the evaluated point
};

struct BoundSet {
    std::vector<Bound> bounds;

    Rat min_value() const {
        Rat m = bounds.front().value;
        for (const auto& b : bounds) m = min(m, b.value);
        return m;
    }
    void flag_active() {
        Rat m = min_value();
        for (auto& b : bounds) b.active = (b.value == m);
    }
};

// Sum-GDoF with limited cooperation, evaluated for an explicitly chosen
// admissible regime tag (exposed so boundary points can be checked under
// every admissible tag; values agree whenever the tag is admissible).
BoundSet bound_set_for_regime(const ChannelParams& p, const CoopBudget& b, Regime r);

std::pair<Rat, BoundSet> sum_gdof(const ChannelParams& p, const CoopBudget& b);
inline Rat sum_gdof_value(const ChannelParams& p, const CoopBudget& b) {
    return sum_gdof(p, b).first;
}

// Outer bound for arbitrary directional budgets (d01 <= pi01, d02 <= pi02),
// evaluated over the regime-appropriate bound list.
Rat general_converse(const ChannelParams& p, const SplitBudget& s);
Rat general_converse_for_regime(const ChannelParams& p, const SplitBudget& s, Regime r);

// Minimum half-duplex cooperation GDoF achieving the broadcast-channel value.
Rat pi_star(const ChannelParams& p);
// Minimum full-duplex cooperation GDoF achieving the broadcast-channel value.
Rat pi_plus(const ChannelParams& p);

inline Rat pi_saturation(const ChannelParams& p, Duplex mode) {
    return mode == Duplex::Half ? pi_star(p) : pi_plus(p);
}

// The piecewise-linear map pi -> sum-GDoF: nondecreasing, concave, slopes
// drawn from {1, 1/2, 1/3, 0}, saturating at d_bc.
struct PiecewiseCurve {
    // Breakpoints ordered by pi, starting at pi = 0 and ending at the
    // saturation point; slopes[i] is the slope on [breakpoints[i], breakpoints[i+1]]
    // and slopes.back() (= 0) applies beyond the last breakpoint.
    std::vector<std::pair<Rat, Rat>> breakpoints;
    std::vector<Rat> slopes;
    Rat saturation;

    Rat value_at(const Rat& pi) const;
    // Smallest pi at which the curve reaches its saturation value.
    Rat saturation_pi() const { return breakpoints.back().first; }
};

PiecewiseCurve curve(const ChannelParams& p, Duplex mode);

}  // namespace iclc
