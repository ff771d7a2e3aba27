#pragma once

#include <random>
#include <vector>

#include "iclc/bounds.hpp"
#include "iclc/channel.hpp"

namespace iclc::testsupport {

// Random nonnegative rational in [0, span] with denominator drawn from `dens`.
inline Rat random_rat(std::mt19937_64& rng, int span, const std::vector<int>& dens) {
    std::uniform_int_distribution<std::size_t> pick(0, dens.size() - 1);
    int den = dens[pick(rng)];
    std::uniform_int_distribution<int> num(0, span * den);
    return Rat(num(rng), den);
}

inline const std::vector<int>& default_dens() {
    static const std::vector<int> d = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    return d;
}

// Denominators dividing 12, so a whole scheme (which divides by 2 and 3) stays
// on a grid of lcm at most 72.
inline const std::vector<int>& grid12_dens() {
    static const std::vector<int> d = {1, 2, 3, 4, 6, 12};
    return d;
}

inline ChannelParams random_params(std::mt19937_64& rng, const std::vector<int>& dens) {
    return ChannelParams{random_rat(rng, 3, dens), random_rat(rng, 3, dens),
                         random_rat(rng, 3, dens), random_rat(rng, 3, dens)};
}

// Rejection-samples a parameter point of the requested regime.
inline ChannelParams random_params_in(std::mt19937_64& rng, Regime r,
                                      const std::vector<int>& dens) {
    for (;;) {
        ChannelParams p = random_params(rng, dens);
        if (classify_regime(p) == r) return p;
    }
}

// Budget spread over the interesting range: zero, interior points of
// [0, saturation], the saturation itself, and beyond it.
inline std::vector<Rat> budget_samples(std::mt19937_64& rng, const ChannelParams& p,
                                       Duplex mode) {
    Rat sat = pi_saturation(p, mode);
    std::uniform_int_distribution<int> num(0, 24);
    std::vector<Rat> out;
    out.push_back(Rat(0));
    out.push_back(sat * Rat(num(rng), 24));
    out.push_back(sat * Rat(num(rng), 24));
    out.push_back(sat);
    out.push_back(sat + Rat(1, 2));
    return out;
}

}  // namespace iclc::testsupport
