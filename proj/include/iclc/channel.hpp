#pragma once

#include <optional>
#include <stdexcept>

#include "iclc/rational.hpp"

namespace iclc {

// Channel-strength exponents of the four links. a_ki is the exponent of the
// link Transmitter i -> Receiver k, so a12 is the cross link into Receiver 1.
//
// The finite-precision-CSIT model behind these formulas also assumes fading
// coefficients bounded away from 0 and infinity with bounded densities; those
// assumptions only shape the converse arguments and carry no GDoF-level data,
// so nothing here represents them.
struct ChannelParams {
    Rat a11, a22, a12, a21;

    bool valid() const {
        return a11.is_nonneg() && a22.is_nonneg() && a12.is_nonneg() && a21.is_nonneg();
    }

    // Exchange user labels: direct links swap with each other, cross links too.
    ChannelParams swapped() const { return ChannelParams{a22, a11, a21, a12}; }

    ChannelParams scaled(const Rat& g) const {
        return ChannelParams{a11 * g, a22 * g, a12 * g, a21 * g};
    }

    Rat max_direct() const { return max(a11, a22); }
    Rat min_direct() const { return min(a11, a22); }
    Rat max_cross() const { return max(a12, a21); }
    Rat min_cross() const { return min(a12, a21); }

    bool operator==(const ChannelParams& o) const {
        return a11 == o.a11 && a22 == o.a22 && a12 == o.a12 && a21 == o.a21;
    }
};

enum class Regime { Weak, Mixed, Strong };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Weak: return "weak";
        case Regime::Mixed: return "mixed";
        case Regime::Strong: return "strong";
    }
    return "?";
}

// Weak iff both cross links are at most both direct links, strong iff the
// reverse, mixed otherwise. Boundary points satisfy several conditions; the
// fixed tie-break prefers Weak, then Strong, over Mixed (value-agreement at
// boundaries is covered by the property suite).
inline Regime classify_regime(const ChannelParams& p) {
    if (p.max_cross() <= p.min_direct()) return Regime::Weak;
    if (p.max_direct() <= p.min_cross()) return Regime::Strong;
    return Regime::Mixed;
}

inline bool regime_admissible(const ChannelParams& p, Regime r) {
    switch (r) {
        case Regime::Weak: return p.max_cross() <= p.min_direct();
        case Regime::Strong: return p.max_direct() <= p.min_cross();
        case Regime::Mixed:
            return p.min_cross() <= p.max_direct() && p.max_cross() >= p.min_direct();
    }
    return false;
}

// Sum-GDoF of the non-cooperative interference channel (same value under
// perfect and finite-precision CSIT).
inline Rat d_ic(const ChannelParams& p) {
    Rat t1 = max(p.a11 - p.a21, p.a12) + max(p.a22 - p.a12, p.a21);
    Rat t2 = max(p.a11, p.a12) + pos(p.a22 - p.a12);
    Rat t3 = max(p.a21, p.a22) + pos(p.a11 - p.a21);
    Rat t4 = p.a11 + p.a22;
    return min(min(t1, t2), min(t3, t4));
}

// Sum-GDoF of the broadcast channel (full transmitter cooperation) under
// finite-precision CSIT.
inline Rat d_bc(const ChannelParams& p) {
    Rat t1 = max(p.a11, p.a12) + pos(max(p.a21 - p.a11, p.a22 - p.a12));
    Rat t2 = max(p.a21, p.a22) + pos(max(p.a11 - p.a21, p.a12 - p.a22));
    return min(t1, t2);
}

// Extremal bound constants for the strong-interference regime. d_2e is the
// cross-link sum; d_3e is printed for the a12 >= a21 labeling, so the user
// swap is applied first when needed (d_2e is swap-invariant as is).
inline Rat d_2e(const ChannelParams& p) { return p.a12 + p.a21; }

inline Rat d_3e(const ChannelParams& p) {
    ChannelParams q = p.a12 >= p.a21 ? p : p.swapped();
    return min(q.a21 - q.a22, q.a11) + Rat(2) * max(q.a21 - q.a11, q.a22) + q.a12 +
           max(q.a12 - q.a22, q.a11);
}

// A transmit-power band expressed as distance below full power: the band's
// top is at transmit exponent -hi, its bottom at -lo; lo == nullopt means the
// band extends to the noise floor and below (power P^{-hi}).
struct LevelBand {
    Rat hi;
    std::optional<Rat> lo;  // nullopt = unbounded below

    static LevelBand tail(const Rat& hi) { return LevelBand{hi, std::nullopt}; }
    static LevelBand slab(const Rat& hi, const Rat& lo) { return LevelBand{hi, lo}; }

    bool well_formed() const {
        if (!hi.is_nonneg()) return false;
        if (lo && *lo < hi) return false;
        return true;
    }
    bool empty() const { return lo && *lo == hi; }

    bool operator==(const LevelBand& o) const { return hi == o.hi && lo == o.lo; }
};

// Received-power exponent of the band's top over a link with the given
// strength exponent. May be negative; callers clip at the noise floor 0.
inline Rat band_top(const LevelBand& b, const Rat& at_receiver_exponent) {
    if (b.empty()) throw std::invalid_argument("band_top: empty band");
    return at_receiver_exponent - b.hi;
}

// Bands with disjoint interiors; sharing an endpoint is allowed.
inline bool bands_disjoint(const LevelBand& a, const LevelBand& b) {
    if (a.empty() || b.empty()) return true;
    // overlap iff a.hi < b.lo and b.hi < a.lo (with missing lo = +inf)
    bool a_below_b_ends = !b.lo || a.hi < *b.lo;
    bool b_below_a_ends = !a.lo || b.hi < *a.lo;
    return !(a_below_b_ends && b_below_a_ends);
}

}  // namespace iclc
