#include "iclc/scheme.hpp"

namespace iclc {

bool msg_from_name(const std::string& name, Msg& out) {
    static const Msg all[] = {Msg::W11, Msg::W22, Msg::W01, Msg::W02, Msg::W11p,
                              Msg::W11c, Msg::W22p, Msg::W22c, Msg::W01p, Msg::W02p,
                              Msg::W0c};
    for (Msg m : all) {
        if (name == msg_name(m)) {
            out = m;
            return true;
        }
    }
    return false;
}

Msg msg_swapped(Msg m) {
    switch (m) {
        case Msg::W11: return Msg::W22;
        case Msg::W22: return Msg::W11;
        case Msg::W01: return Msg::W02;
        case Msg::W02: return Msg::W01;
        case Msg::W11p: return Msg::W22p;
        case Msg::W22p: return Msg::W11p;
        case Msg::W11c: return Msg::W22c;
        case Msg::W22c: return Msg::W11c;
        case Msg::W01p: return Msg::W02p;
        case Msg::W02p: return Msg::W01p;
        case Msg::W0c: return Msg::W0c;
    }
    return m;
}

Scheme Scheme::swapped() const {
    Scheme s;
    s.params = params.swapped();
    s.budget = budget;
    s.provenance = provenance;
    for (const auto& c : codewords) {
        Codeword cw;
        cw.msg = msg_swapped(c.msg);
        cw.gdof = c.gdof;
        for (const auto& pl : c.placements) cw.placements.push_back({3 - pl.tx, pl.band});
        s.codewords.push_back(std::move(cw));
    }
    for (int i = 0; i < 2; ++i) {
        DecodingPlan plan;
        plan.receiver = i + 1;
        for (const auto& step : plans[1 - i].steps) {
            DecodeStep st;
            st.joint = step.joint;
            for (Msg m : step.msgs) st.msgs.push_back(msg_swapped(m));
            plan.steps.push_back(std::move(st));
        }
        s.plans[i] = std::move(plan);
    }
    s.claimed = ClaimedTuple{claimed.d22, claimed.d11, claimed.d02, claimed.d01};
    return s;
}

}  // namespace iclc
