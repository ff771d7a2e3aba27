#include "iclc/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace iclc {

namespace {

Rat received_top(const Codeword& c, int rx, const ChannelParams& p) {
    bool first = true;
    Rat best(0);
    for (const auto& pl : c.placements) {
        Rat link = rx == 1 ? (pl.tx == 1 ? p.a11 : p.a12) : (pl.tx == 1 ? p.a21 : p.a22);
        Rat t = band_top(pl.band, link);
        if (first || t > best) {
            best = t;
            first = false;
        }
    }
    return best;
}

void add_check(VerificationReport& rep, int rx, int step, std::string id, const Rat& lhs,
               const Rat& rhs) {
    Finding f;
    f.receiver = rx;
    f.step = step;
    f.constraint = std::move(id);
    f.lhs = lhs;
    f.rhs = rhs;
    f.margin = rhs - lhs;
    f.violated = lhs > rhs;
    if (f.violated) rep.ok = false;
    rep.findings.push_back(std::move(f));
}

void add_structural(VerificationReport& rep, std::string id) {
    Finding f;
    f.constraint = std::move(id);
    f.violated = true;
    rep.ok = false;
    rep.structural_ok = false;
    rep.findings.push_back(std::move(f));
}

}  // namespace

bool mac_region_contains(const std::vector<Rat>& demands, const std::vector<Rat>& tops,
                         const Rat& z) {
    std::size_t n = demands.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Rat sum(0);
        Rat best_top;
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            sum += demands[i];
            if (first || tops[i] > best_top) {
                best_top = tops[i];
                first = false;
            }
        }
        if (sum > pos(best_top - z)) return false;
    }
    return true;
}

VerificationReport verify(const Scheme& s, const ChannelParams& p, const CoopBudget& b) {
    VerificationReport rep;
    rep.ok = true;

    if (!p.valid() || !b.valid()) {
        add_structural(rep, "invalid-parameters");
        return rep;
    }

    // Structural pass: well-formed codewords, unique messages, per-transmitter
    // band disjointness.
    std::map<Msg, const Codeword*> by_msg;
    for (const auto& c : s.codewords) {
        if (c.gdof.is_negative()) add_structural(rep, std::string("negative-gdof:") + msg_name(c.msg));
        if (c.placements.empty() || c.placements.size() > 2)
            add_structural(rep, std::string("placement-count:") + msg_name(c.msg));
        if (c.placements.size() == 2 && c.placements[0].tx == c.placements[1].tx)
            add_structural(rep, std::string("placements-same-tx:") + msg_name(c.msg));
        if (c.placements.size() == 2 && c.msg != Msg::W0c)
            add_structural(rep, std::string("vector-placement:") + msg_name(c.msg));
        for (const auto& pl : c.placements) {
            if (pl.tx != 1 && pl.tx != 2) add_structural(rep, "bad-transmitter");
            if (!pl.band.well_formed()) add_structural(rep, std::string("bad-band:") + msg_name(c.msg));
            else if (pl.band.empty() && !c.gdof.is_zero())
                add_structural(rep, std::string("empty-band:") + msg_name(c.msg));
        }
        if (by_msg.count(c.msg)) add_structural(rep, std::string("duplicate-msg:") + msg_name(c.msg));
        by_msg[c.msg] = &c;
    }
    if (!rep.structural_ok) return rep;

    for (int tx = 1; tx <= 2; ++tx) {
        std::vector<std::pair<Msg, const LevelBand*>> bands;
        for (const auto& c : s.codewords)
            for (const auto& pl : c.placements)
                if (pl.tx == tx && !c.gdof.is_zero()) bands.push_back({c.msg, &pl.band});
        for (std::size_t i = 0; i < bands.size(); ++i)
            for (std::size_t j = i + 1; j < bands.size(); ++j)
                if (!bands_disjoint(*bands[i].second, *bands[j].second))
                    add_structural(rep, std::string("band-overlap:tx") + std::to_string(tx) + ":" +
                                            msg_name(bands[i].first) + "/" +
                                            msg_name(bands[j].first));
    }

    // Plan structure: steps reference scheme codewords, each receiver decodes
    // its required messages exactly once, and private parts never appear at
    // the wrong receiver.
    for (int rxi = 0; rxi < 2; ++rxi) {
        const DecodingPlan& plan = s.plans[rxi];
        int rx = rxi + 1;
        if (plan.receiver != rx) add_structural(rep, "plan-receiver-order");
        std::map<Msg, int> seen;
        for (const auto& step : plan.steps) {
            if (step.msgs.empty()) add_structural(rep, "empty-step");
            for (Msg m : step.msgs) {
                if (!by_msg.count(m))
                    add_structural(rep, std::string("unknown-codeword:") + msg_name(m));
                else {
                    seen[m]++;
                    if (!msg_allowed_at(m, rx))
                        add_structural(rep, std::string("private-at-wrong-rx:") + msg_name(m));
                }
            }
        }
        for (const auto& [m, count] : seen)
            if (count > 1) add_structural(rep, std::string("decoded-twice:") + msg_name(m));
        for (const auto& c : s.codewords) {
            if (c.gdof.is_zero()) continue;
            if (msg_required_at(c.msg, rx) && !seen.count(c.msg))
                add_structural(rep, std::string("missing-decode:rx") + std::to_string(rx) + ":" +
                                        msg_name(c.msg));
        }
    }
    if (!rep.structural_ok) return rep;

    // Accounting: claimed tuple vs codeword GDoF sums and the budget model.
    Rat sum11(0), sum22(0), coop1(0), coop2(0), coop_shared(0);
    for (const auto& c : s.codewords) {
        switch (c.msg) {
            case Msg::W11: case Msg::W11p: case Msg::W11c: sum11 += c.gdof; break;
            case Msg::W22: case Msg::W22p: case Msg::W22c: sum22 += c.gdof; break;
            case Msg::W01: case Msg::W01p: coop1 += c.gdof; break;
            case Msg::W02: case Msg::W02p: coop2 += c.gdof; break;
            case Msg::W0c: coop_shared += c.gdof; break;
        }
    }
    add_check(rep, 0, -1, "claimed-d11", s.claimed.d11, sum11);
    add_check(rep, 0, -1, "claimed-d11-lb", sum11, s.claimed.d11);
    add_check(rep, 0, -1, "claimed-d22", s.claimed.d22, sum22);
    add_check(rep, 0, -1, "claimed-d22-lb", sum22, s.claimed.d22);
    // W0c may be attributed to either direction; only the total is fixed.
    add_check(rep, 0, -1, "coop-total", coop1 + coop2 + coop_shared,
              s.claimed.d01 + s.claimed.d02);
    add_check(rep, 0, -1, "coop-total-lb", s.claimed.d01 + s.claimed.d02,
              coop1 + coop2 + coop_shared);
    add_check(rep, 0, -1, "claimed-d01-covers", coop1, s.claimed.d01);
    add_check(rep, 0, -1, "claimed-d02-covers", coop2, s.claimed.d02);
    if (b.mode == Duplex::Half) {
        add_check(rep, 0, -1, "budget-half", s.claimed.d01 + s.claimed.d02, b.pi);
    } else {
        add_check(rep, 0, -1, "budget-full-d01", s.claimed.d01, b.pi / Rat(2));
        add_check(rep, 0, -1, "budget-full-d02", s.claimed.d02, b.pi / Rat(2));
    }

    // Decoding pass per receiver.
    for (int rxi = 0; rxi < 2; ++rxi) {
        int rx = rxi + 1;
        const DecodingPlan& plan = s.plans[rxi];
        std::set<Msg> decoded;
        for (std::size_t si = 0; si < plan.steps.size(); ++si) {
            const DecodeStep& step = plan.steps[si];
            std::set<Msg> members(step.msgs.begin(), step.msgs.end());
            // Interference floor from everything not yet decoded and not being
            // decoded in this step; codewords with zero GDoF are inert.
            Rat z(0);
            for (const auto& c : s.codewords) {
                if (c.gdof.is_zero()) continue;
                if (decoded.count(c.msg) || members.count(c.msg)) continue;
                z = max(z, received_top(c, rx, p));
            }
            if (!step.joint || step.msgs.size() == 1) {
                for (Msg m : step.msgs) {
                    const Codeword& c = *by_msg.at(m);
                    if (!c.gdof.is_zero()) {
                        Rat top = received_top(c, rx, p);
                        add_check(rep, rx, static_cast<int>(si),
                                  std::string("sinr:") + msg_name(m), c.gdof, top - z);
                    }
                    decoded.insert(m);
                }
            } else {
                std::vector<const Codeword*> cws;
                for (Msg m : step.msgs) {
                    const Codeword* c = by_msg.at(m);
                    if (!c->gdof.is_zero()) cws.push_back(c);
                    decoded.insert(m);
                }
                std::size_t n = cws.size();
                for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
                    Rat sum(0);
                    Rat best_top;
                    bool first = true;
                    std::string label = "mac:";
                    for (std::size_t i = 0; i < n; ++i) {
                        if (!(mask & (std::size_t{1} << i))) continue;
                        sum += cws[i]->gdof;
                        Rat t = received_top(*cws[i], rx, p);
                        if (first) label += msg_name(cws[i]->msg);
                        else label += std::string("+") + msg_name(cws[i]->msg);
                        if (first || t > best_top) {
                            best_top = t;
                            first = false;
                        }
                    }
                    add_check(rep, rx, static_cast<int>(si), label, sum, pos(best_top - z));
                }
            }
        }
    }

    rep.totals = ClaimedTuple{sum11, sum22, s.claimed.d01, s.claimed.d02};
    return rep;
}

}  // namespace iclc
