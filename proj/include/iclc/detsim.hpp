#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "iclc/scheme.hpp"

namespace iclc {

// Carry-free deterministic channel at integer grain g: link (rx k, tx i) has
// n[k][i] = g * a_ki digit levels; each transmitter's digit vector is as long
// as its strongest outgoing link. Exact only when every exponent in play is a
// multiple of 1/g.
struct GrainedChannel {
    std::int64_t grain = 1;
    std::int64_t n[2][2] = {{0, 0}, {0, 0}};  // n[rx-1][tx-1]
    std::int64_t tx_len[2] = {0, 0};
};

struct SimDelivery {
    int receiver = 0;
    Msg msg;
    std::int64_t delivered = 0;
    std::int64_t required = 0;
    bool decoded = false;  // the plan step recovered the codeword completely
};

struct SimResult {
    bool grid_ok = false;
    bool ok = false;  // every required (receiver, message) pair fully delivered
    GrainedChannel channel;
    std::vector<SimDelivery> deliveries;

    const SimDelivery* find(int rx, Msg m) const {
        for (const auto& d : deliveries)
            if (d.receiver == rx && d.msg == m) return &d;
        return nullptr;
    }
};

// Least common multiple of the denominators of every exponent the simulation
// needs (channel gains, band endpoints, GDoF loads).
std::int64_t scheme_grain_lcm(const Scheme& s);

// Runs the scheme on the carry-free deterministic channel: information digits
// fill each codeword's band from the top (cooperative tails additionally dodge
// levels their reading receiver has already committed), receivers replay their
// decoding plans by peeling from the strongest received top, and digits are
// delivered only when no undecoded codeword collides on their level.
SimResult simulate(const Scheme& s, const ChannelParams& p, std::int64_t grain);

}  // namespace iclc
