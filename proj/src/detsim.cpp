#include "iclc/detsim.hpp"

#include <algorithm>
#include <set>

namespace iclc {

namespace {

bool to_grid(const Rat& r, std::int64_t grain, std::int64_t& out) {
    __int128 scaled = static_cast<__int128>(r.num()) * grain;
    if (scaled % r.den() != 0) return false;
    out = static_cast<std::int64_t>(scaled / r.den());
    return true;
}

struct PlacedCodeword {
    const Codeword* cw = nullptr;
    std::int64_t digits = 0;  // payload size g * gdof
    // slot lists per placement, one slot per payload digit (slot = depth below
    // full power at the transmitter); -1 marks an unplaceable digit.
    std::vector<std::vector<std::int64_t>> slots;
};

}  // namespace

std::int64_t scheme_grain_lcm(const Scheme& s) {
    std::int64_t l = 1;
    auto fold = [&](const Rat& r) { l = lcm64(l, r.den()); };
    fold(s.params.a11);
    fold(s.params.a22);
    fold(s.params.a12);
    fold(s.params.a21);
    for (const auto& c : s.codewords) {
        fold(c.gdof);
        for (const auto& pl : c.placements) {
            fold(pl.band.hi);
            if (pl.band.lo) fold(*pl.band.lo);
        }
    }
    return l;
}

SimResult simulate(const Scheme& s, const ChannelParams& p, std::int64_t grain) {
    SimResult res;
    GrainedChannel& ch = res.channel;
    ch.grain = grain;
    const Rat links[2][2] = {{p.a11, p.a12}, {p.a21, p.a22}};
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            if (!to_grid(links[k][i], grain, ch.n[k][i])) return res;
    ch.tx_len[0] = std::max(ch.n[0][0], ch.n[1][0]);
    ch.tx_len[1] = std::max(ch.n[0][1], ch.n[1][1]);

    std::vector<PlacedCodeword> placed;
    for (const auto& c : s.codewords) {
        if (c.gdof.is_zero()) continue;
        PlacedCodeword pc;
        pc.cw = &c;
        if (!to_grid(c.gdof, grain, pc.digits)) return res;
        pc.slots.resize(c.placements.size());
        placed.push_back(std::move(pc));
    }
    res.grid_ok = true;

    // Step index of each codeword in each receiver's plan (-1 = not decoded).
    auto step_of = [&](int rx, Msg m) -> int {
        const DecodingPlan& plan = s.plans[rx - 1];
        for (std::size_t i = 0; i < plan.steps.size(); ++i)
            for (Msg mm : plan.steps[i].msgs)
                if (mm == m) return static_cast<int>(i);
        return -1;
    };

    // Received top level of one placement: level counts down from n at slot 0.
    auto placement_top = [&](const PlacedCodeword& pc, std::size_t pi, int rx) -> std::int64_t {
        const Placement& pl = pc.cw->placements[pi];
        std::int64_t hi;
        if (!to_grid(pl.band.hi, grain, hi)) return INT64_MIN;
        return ch.n[rx - 1][pl.tx - 1] - hi;
    };

    // Pass 1: bounded bands (and every W0c copy) take the top of their band.
    // Pass 2 (tails) follows below.
    std::vector<std::pair<int, std::size_t>> tails;  // (placed idx, placement idx)
    for (std::size_t ci = 0; ci < placed.size(); ++ci) {
        PlacedCodeword& pc = placed[ci];
        for (std::size_t pi = 0; pi < pc.cw->placements.size(); ++pi) {
            const Placement& pl = pc.cw->placements[pi];
            if (!pl.band.lo) {
                tails.push_back({static_cast<int>(ci), pi});
                continue;
            }
            std::int64_t hi, lo;
            if (!to_grid(pl.band.hi, grain, hi) || !to_grid(*pl.band.lo, grain, lo)) {
                res.grid_ok = false;
                return res;
            }
            auto& sl = pc.slots[pi];
            for (std::int64_t d = 0; d < pc.digits; ++d)
                sl.push_back(hi + d < lo ? hi + d : -1);  // digits past the band are lost
        }
    }

    // Tails are placed in band order from the top of the power range; each
    // dodges the levels its reading receiver needs for other codewords, i.e.
    // read regions of earlier steps and everything not yet decoded there.
    std::sort(tails.begin(), tails.end(), [&](const auto& a, const auto& b) {
        const Placement& pa = placed[a.first].cw->placements[a.second];
        const Placement& pb = placed[b.first].cw->placements[b.second];
        if (pa.band.hi != pb.band.hi) return pa.band.hi < pb.band.hi;
        Msg ma = placed[a.first].cw->msg, mb = placed[b.first].cw->msg;
        int rxa = msg_required_at(ma, 1) ? 1 : 2;
        int rxb = msg_required_at(mb, 1) ? 1 : 2;
        return step_of(rxa, ma) < step_of(rxb, mb);
    });

    for (auto [ci, pi] : tails) {
        PlacedCodeword& pc = placed[ci];
        const Placement& pl = pc.cw->placements[pi];
        int rx = msg_required_at(pc.cw->msg, 1) ? 1 : 2;
        int my_step = step_of(rx, pc.cw->msg);
        std::int64_t n = ch.n[rx - 1][pl.tx - 1];

        // Levels at the reading receiver this codeword must keep clear.
        std::set<std::int64_t> blocked;
        for (const auto& other : placed) {
            if (other.cw == pc.cw) continue;
            int ostep = step_of(rx, other.cw->msg);
            bool read_only = ostep >= 0 && my_step >= 0 && ostep < my_step;
            if (read_only) {
                // Only the copy the receiver actually reads is off limits.
                std::size_t best = 0;
                for (std::size_t opi = 1; opi < other.cw->placements.size(); ++opi)
                    if (placement_top(other, opi, rx) > placement_top(other, best, rx))
                        best = opi;
                for (std::int64_t slot : other.slots[best])
                    if (slot >= 0)
                        blocked.insert(ch.n[rx - 1][other.cw->placements[best].tx - 1] - slot);
            } else {
                for (std::size_t opi = 0; opi < other.cw->placements.size(); ++opi)
                    for (std::int64_t slot : other.slots[opi])
                        if (slot >= 0)
                            blocked.insert(ch.n[rx - 1][other.cw->placements[opi].tx - 1] - slot);
            }
        }

        std::int64_t hi;
        if (!to_grid(pl.band.hi, grain, hi)) {
            res.grid_ok = false;
            return res;
        }
        auto& sl = pc.slots[pi];
        std::int64_t slot = hi;
        std::int64_t limit = std::max(ch.tx_len[pl.tx - 1], hi + pc.digits);
        for (std::int64_t d = 0; d < pc.digits; ++d) {
            while (slot < limit && n - slot >= 1 && blocked.count(n - slot)) ++slot;
            sl.push_back(slot < limit ? slot : -1);
            ++slot;
        }
    }

    // Replay. Per receiver: level -> contributing (codeword, payload digit).
    std::vector<SimDelivery> deliveries;
    for (int rx = 1; rx <= 2; ++rx) {
        std::map<std::int64_t, std::vector<std::pair<int, std::int64_t>>> at_level;
        for (std::size_t ci = 0; ci < placed.size(); ++ci) {
            const PlacedCodeword& pc = placed[ci];
            for (std::size_t pi = 0; pi < pc.cw->placements.size(); ++pi) {
                std::int64_t n = ch.n[rx - 1][pc.cw->placements[pi].tx - 1];
                for (std::int64_t d = 0; d < pc.digits; ++d) {
                    std::int64_t slot = pc.slots[pi][d];
                    if (slot < 0) continue;
                    std::int64_t level = n - slot;
                    if (level >= 1) at_level[level].push_back({static_cast<int>(ci), d});
                }
            }
        }

        std::set<int> decoded;
        for (const auto& step : s.plans[rx - 1].steps) {
            // Members peel in order of received top, strongest first.
            std::vector<int> members;
            for (Msg m : step.msgs)
                for (std::size_t ci = 0; ci < placed.size(); ++ci)
                    if (placed[ci].cw->msg == m) members.push_back(static_cast<int>(ci));
            std::sort(members.begin(), members.end(), [&](int a, int b) {
                std::int64_t ta = INT64_MIN, tb = INT64_MIN;
                for (std::size_t pi = 0; pi < placed[a].cw->placements.size(); ++pi)
                    ta = std::max(ta, placement_top(placed[a], pi, rx));
                for (std::size_t pi = 0; pi < placed[b].cw->placements.size(); ++pi)
                    tb = std::max(tb, placement_top(placed[b], pi, rx));
                return ta > tb;
            });

            for (int ci : members) {
                const PlacedCodeword& pc = placed[ci];
                // A payload digit is delivered when some copy of it sits on a
                // level whose every other contributor is already decoded.
                std::vector<bool> got(static_cast<std::size_t>(pc.digits), false);
                for (std::size_t pi = 0; pi < pc.cw->placements.size(); ++pi) {
                    std::int64_t n = ch.n[rx - 1][pc.cw->placements[pi].tx - 1];
                    for (std::int64_t d = 0; d < pc.digits; ++d) {
                        if (got[static_cast<std::size_t>(d)]) continue;
                        std::int64_t slot = pc.slots[pi][d];
                        if (slot < 0) continue;
                        std::int64_t level = n - slot;
                        if (level < 1) continue;
                        // Clean iff every other contributor on this level is
                        // already decoded and the codeword does not land on it
                        // twice (two copies summing carry-free ruin the digit).
                        int self_hits = 0;
                        bool clean = true;
                        for (const auto& [oci, od] : at_level[level]) {
                            if (oci == ci) {
                                ++self_hits;
                                continue;
                            }
                            if (!decoded.count(oci)) {
                                clean = false;
                                break;
                            }
                        }
                        if (self_hits > 1) clean = false;
                        if (clean) got[static_cast<std::size_t>(d)] = true;
                    }
                }
                std::int64_t delivered = 0;
                for (bool g : got) delivered += g ? 1 : 0;
                bool full = delivered == pc.digits;
                if (full) decoded.insert(ci);
                SimDelivery del;
                del.receiver = rx;
                del.msg = pc.cw->msg;
                del.delivered = delivered;
                del.required = pc.digits;
                del.decoded = full;
                deliveries.push_back(del);
            }
        }
    }

    res.deliveries = std::move(deliveries);
    res.ok = true;
    for (const auto& c : s.codewords) {
        if (c.gdof.is_zero()) continue;
        std::int64_t need;
        if (!to_grid(c.gdof, grain, need)) {
            res.grid_ok = false;
            res.ok = false;
            return res;
        }
        for (int rx = 1; rx <= 2; ++rx) {
            if (!msg_required_at(c.msg, rx)) continue;
            const SimDelivery* d = res.find(rx, c.msg);
            if (!d || d->delivered != need) res.ok = false;
        }
    }
    return res;
}

}  // namespace iclc
