#include "iclc/synth.hpp"

#include <initializer_list>
#include <stdexcept>

namespace iclc {

namespace {

DecodeStep S(Msg m) { return DecodeStep{false, {m}}; }
DecodeStep J(std::initializer_list<Msg> ms) { return DecodeStep{true, std::vector<Msg>(ms)}; }

struct Build {
    Scheme s;

    Build(const ChannelParams& p, const CoopBudget& b, std::string prov) {
        s.params = p;
        s.budget = b;
        s.provenance = std::move(prov);
    }

    void add(Msg m, const Rat& gdof, int tx, const LevelBand& band) {
        if (gdof.is_negative()) throw std::logic_error("synthesized negative gdof");
        if (gdof.is_zero()) return;
        if (!band.well_formed() || band.empty()) throw std::logic_error("synthesized bad band");
        s.codewords.push_back(Codeword{m, gdof, {Placement{tx, band}}});
    }

    // The jointly encoded vector codeword, one band per transmitter.
    void add_shared(const Rat& gdof, const LevelBand& b1, const LevelBand& b2) {
        if (gdof.is_negative()) throw std::logic_error("synthesized negative gdof");
        if (gdof.is_zero()) return;
        if (!b1.well_formed() || b1.empty() || !b2.well_formed() || b2.empty())
            throw std::logic_error("synthesized bad shared band");
        s.codewords.push_back(Codeword{Msg::W0c, gdof, {Placement{1, b1}, Placement{2, b2}}});
    }

    // Steps referencing omitted (zero-GDoF) codewords are filtered out.
    void plan(int rx, std::initializer_list<DecodeStep> steps) {
        DecodingPlan pl;
        pl.receiver = rx;
        for (const auto& st : steps) {
            DecodeStep kept;
            kept.joint = st.joint;
            for (Msg m : st.msgs)
                if (s.find(m)) kept.msgs.push_back(m);
            if (kept.msgs.empty()) continue;
            if (kept.msgs.size() == 1) kept.joint = false;
            pl.steps.push_back(std::move(kept));
        }
        s.plans[rx - 1] = std::move(pl);
    }

    Scheme done(ClaimedTuple t) {
        s.claimed = t;
        return s;
    }
};

// ---------------------------------------------------------------------------
// Weak interference, a11 >= a22. The cooperative messages merge into the
// common W0c, split evenly across the two directions, so half and full duplex
// share one construction.
Scheme synth_weak(const ChannelParams& q, const CoopBudget& b) {
    Rat gain = d_bc(q) - d_ic(q);
    Rat d0c = min(b.pi, gain);
    Rat N = q.a12 + q.a21, M = q.a11 + q.a22;

    if (q.a22 >= N) {  // both direct links above the cross sum
        Build bd(q, b, "weak/table1/row1");
        bd.add(Msg::W11, q.a11 - q.a21, 1, LevelBand::tail(q.a21));
        bd.add(Msg::W22, q.a22 - q.a12, 2, LevelBand::tail(q.a12));
        bd.add_shared(d0c, LevelBand::slab(Rat(0), q.a21), LevelBand::slab(Rat(0), q.a12));
        bd.plan(1, {S(Msg::W0c), S(Msg::W11)});
        bd.plan(2, {S(Msg::W0c), S(Msg::W22)});
        return bd.done({q.a11 - q.a21, q.a22 - q.a12, d0c / Rat(2), d0c / Rat(2)});
    }

    if (q.a11 >= N) {  // only the stronger user splits off a common part
        bool r2a = q.a12 >= q.a21;
        Rat d11c = r2a ? q.a12 + q.a21 - q.a22 : Rat(2) * q.a21 - q.a22;
        Rat cross = r2a ? q.a12 : q.a21;  // the larger cross link
        Build bd(q, b, r2a ? "weak/table1/row2a" : "weak/table1/row2b");
        bd.add(Msg::W11p, q.a11 - q.a21, 1, LevelBand::tail(q.a21));
        bd.add(Msg::W11c, d11c, 1, LevelBand::slab(Rat(0), d11c));
        bd.add(Msg::W22, q.a22 - cross, 2, LevelBand::tail(cross));
        bd.add_shared(d0c, LevelBand::slab(d11c, q.a21), LevelBand::slab(Rat(0), cross));
        bd.plan(1, {S(Msg::W11c), S(Msg::W0c), S(Msg::W11p)});
        bd.plan(2, {S(Msg::W0c), S(Msg::W11c), S(Msg::W22)});
        return bd.done(
            {q.a11 - q.a21 + d11c, q.a22 - cross, d0c / Rat(2), d0c / Rat(2)});
    }

    if (N + q.max_cross() <= M) {  // both users split, cooperation still helps
        Rat d11c = q.a12 + q.a21 - q.a22;
        Rat d22c = q.a12 + q.a21 - q.a11;
        Build bd(q, b, "weak/table1/row3");
        bd.add(Msg::W11p, q.a11 - q.a21, 1, LevelBand::tail(q.a21));
        bd.add(Msg::W11c, d11c, 1, LevelBand::slab(Rat(0), d11c));
        bd.add(Msg::W22p, q.a22 - q.a12, 2, LevelBand::tail(q.a12));
        bd.add(Msg::W22c, d22c, 2, LevelBand::slab(Rat(0), d22c));
        bd.add_shared(d0c, LevelBand::slab(d11c, q.a21), LevelBand::slab(d22c, q.a12));
        bd.plan(1, {S(Msg::W11c), S(Msg::W0c), S(Msg::W22c), S(Msg::W11p)});
        bd.plan(2, {S(Msg::W22c), S(Msg::W0c), S(Msg::W11c), S(Msg::W22p)});
        return bd.done({q.a11 - q.a21 + d11c, q.a22 - q.a12 + d22c, d0c / Rat(2),
                        d0c / Rat(2)});
    }

    // No cooperation gain: plain rate splitting with the common parts decoded
    // jointly at both receivers.
    Rat target = q.min_cross();
    Rat c1 = min(N - q.a22, target);
    Rat c2 = target - c1;
    Build bd(q, b, "weak/etw-nogain");
    bd.add(Msg::W11p, q.a11 - q.a21, 1, LevelBand::tail(q.a21));
    bd.add(Msg::W22p, q.a22 - q.a12, 2, LevelBand::tail(q.a12));
    bd.add(Msg::W11c, c1, 1, LevelBand::slab(Rat(0), c1));
    bd.add(Msg::W22c, c2, 2, LevelBand::slab(Rat(0), c2));
    bd.plan(1, {J({Msg::W11c, Msg::W22c}), S(Msg::W11p)});
    bd.plan(2, {J({Msg::W11c, Msg::W22c}), S(Msg::W22p)});
    return bd.done({q.a11 - q.a21 + c1, q.a22 - q.a12 + c2, Rat(0), Rat(0)});
}

// ---------------------------------------------------------------------------
// Mixed interference, a11 >= a22. Only one cooperation direction is useful;
// full duplex therefore runs the same construction with pi/2 in place of pi.
Scheme synth_mixed(const ChannelParams& q, const CoopBudget& b) {
    Rat pi_eff = b.mode == Duplex::Half ? b.pi : b.pi / Rat(2);
    Rat gain = d_bc(q) - d_ic(q);
    Rat deff = min(pi_eff, gain);
    Rat N = q.a12 + q.a21, M = q.a11 + q.a22;

    if (q.a12 >= q.a11 && q.a21 <= q.a22) {
        if (N >= M) {
            Build bd(q, b, "mixed/table2/row1");
            bd.add(Msg::W11, q.a11 - q.a21, 1, LevelBand::tail(q.a21));
            bd.add(Msg::W22, q.a22, 2, LevelBand::slab(Rat(0), q.a22));
            bd.add(Msg::W01, deff, 2, LevelBand::tail(q.a22));
            bd.plan(1, {S(Msg::W22), S(Msg::W01), S(Msg::W11)});
            bd.plan(2, {S(Msg::W22)});
            return bd.done({q.a11 - q.a21, q.a22, deff, Rat(0)});
        }
        // D_IC already equals D_BC (= a12); the cross link is fully used by a
        // common W22 layer sized to what receiver 1 can strip.
        Rat d22 = N - M + q.a22;
        Build bd(q, b, "mixed/row1-nogain");
        bd.add(Msg::W11, q.a11 - q.a21, 1, LevelBand::tail(q.a21));
        bd.add(Msg::W22, d22, 2, LevelBand::slab(Rat(0), d22));
        bd.plan(1, {S(Msg::W22), S(Msg::W11)});
        bd.plan(2, {S(Msg::W22)});
        return bd.done({q.a11 - q.a21, d22, Rat(0), Rat(0)});
    }

    if (q.a21 >= q.a11 && q.a12 <= q.a22) {
        if (N >= M) {
            Build bd(q, b, "mixed/table2/row2");
            bd.add(Msg::W11, q.a11, 1, LevelBand::slab(Rat(0), q.a11));
            bd.add(Msg::W22, q.a22 - q.a12, 2, LevelBand::tail(q.a12));
            bd.add(Msg::W02, deff, 1, LevelBand::tail(q.a11));
            bd.plan(1, {S(Msg::W11)});
            bd.plan(2, {S(Msg::W11), S(Msg::W02), S(Msg::W22)});
            return bd.done({q.a11, q.a22 - q.a12, Rat(0), deff});
        }
        Rat d11 = N - M + q.a11;
        Build bd(q, b, "mixed/row2-nogain");
        bd.add(Msg::W11, d11, 1, LevelBand::slab(Rat(0), d11));
        bd.add(Msg::W22, q.a22 - q.a12, 2, LevelBand::tail(q.a12));
        bd.plan(1, {S(Msg::W11)});
        bd.plan(2, {S(Msg::W11), S(Msg::W22)});
        return bd.done({d11, q.a22 - q.a12, Rat(0), Rat(0)});
    }

    if (q.a21 >= q.a11) {  // a22 <= a12 <= a11 <= a21
        Build bd(q, b, "mixed/table2/row3");
        bd.add(Msg::W11, q.a11, 1, LevelBand::slab(Rat(0), q.a11));
        bd.add(Msg::W02, deff, 1, LevelBand::tail(q.a11));
        bd.plan(1, {S(Msg::W11)});
        bd.plan(2, {S(Msg::W11), S(Msg::W02)});
        return bd.done({q.a11, Rat(0), Rat(0), deff});
    }

    if (q.a12 >= q.a11) {  // a22 <= a21 <= a11 <= a12
        Build bd(q, b, "mixed/table2/row4");
        bd.add(Msg::W11, q.a11, 1, LevelBand::tail(Rat(0)));
        bd.add(Msg::W01, deff, 2, LevelBand::tail(Rat(0)));
        bd.plan(1, {S(Msg::W01), S(Msg::W11)});
        bd.plan(2, {});
        return bd.done({q.a11, Rat(0), deff, Rat(0)});
    }

    // Both cross links inside [a22, a11]: no gain and the stronger direct link
    // alone is optimal.
    Build bd(q, b, "mixed/nogain-direct");
    bd.add(Msg::W11, q.a11, 1, LevelBand::tail(Rat(0)));
    bd.plan(1, {S(Msg::W11)});
    bd.plan(2, {});
    return bd.done({q.a11, Rat(0), Rat(0), Rat(0)});
}

// ---------------------------------------------------------------------------
// Strong interference, a12 >= a21. Shared sub-constructions, parameterized so
// the half- and full-duplex dispatches can reuse them.

// First bound in Cases 1-2: W22 under the strong cross link, W11 at full
// power, the cooperative extra riding below W22.
Scheme strong_first_low(const ChannelParams& q, const CoopBudget& b, const Rat& dcoop,
                        std::string prov) {
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, q.a21 - q.a22, 1, LevelBand::tail(Rat(0)));
    bd.add(Msg::W22, q.a22, 2, LevelBand::slab(Rat(0), q.a21));
    bd.add(Msg::W01p, dcoop, 2, LevelBand::tail(q.a21));
    bd.plan(1, {J({Msg::W11, Msg::W22}), S(Msg::W01p)});
    bd.plan(2, {S(Msg::W11), S(Msg::W22)});
    return bd.done({q.a21 - q.a22, q.a22, dcoop, Rat(0)});
}

// Second bound in Cases 1-2 (half duplex): symmetric-rate layering with both
// cooperative private parts under a common cutoff.
Scheme strong_second_12(const ChannelParams& q, const CoopBudget& b, const Rat& pi,
                        std::string prov) {
    Rat d11 = (q.a21 + Rat(2) * q.a11 - q.a12 - pi) / Rat(2);
    Rat d22 = q.a12 - q.a11;
    Rat d01p = (q.a12 - q.a21 + pi) / Rat(2);
    Rat d02p = (q.a21 - q.a12 + pi) / Rat(2);
    Rat ds = d11 + d22;
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, d11, 1, LevelBand::slab(Rat(0), ds));
    bd.add(Msg::W22, d22, 2, LevelBand::slab(Rat(0), ds));
    bd.add(Msg::W01p, d01p, 2, LevelBand::tail(ds));
    bd.add(Msg::W02p, d02p, 1, LevelBand::tail(ds));
    bd.plan(1, {S(Msg::W22), S(Msg::W11), S(Msg::W01p)});
    bd.plan(2, {J({Msg::W11, Msg::W22}), S(Msg::W02p)});
    return bd.done({d11, d22, d01p, d02p});
}

// Third bound in Case 2: the 1/3-slope scheme where every cooperative part
// grows while both noncooperative messages shrink.
Scheme strong_third_2(const ChannelParams& q, const CoopBudget& b, const Rat& pi,
                      std::string prov, bool full_split) {
    Rat M = q.a11 + q.a22, N = q.a12 + q.a21;
    Rat d11 = (Rat(2) * q.a21 - q.a12 + Rat(2) * q.a11 - q.a22 - pi) / Rat(3);
    Rat d22 = (Rat(2) * q.a12 - q.a21 + Rat(2) * q.a22 - q.a11 - pi) / Rat(3);
    Rat d01p = (M + q.a12 - Rat(2) * q.a21 + pi) / Rat(3);
    Rat d02p = (M + q.a21 - Rat(2) * q.a12 + pi) / Rat(3);
    Rat d0c = (N - Rat(2) * M + pi) / Rat(3);
    Rat dd = d11 + d22 + d0c;
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, d11, 1, LevelBand::slab(Rat(0), d11));
    bd.add(Msg::W22, d22, 2, LevelBand::slab(Rat(0), d22));
    bd.add(Msg::W01p, d01p, 2, LevelBand::tail(dd));
    bd.add(Msg::W02p, d02p, 1, LevelBand::tail(dd));
    bd.add_shared(d0c, LevelBand::slab(d11, dd), LevelBand::slab(d22, dd));
    bd.plan(1, {S(Msg::W22), S(Msg::W0c), S(Msg::W11), S(Msg::W01p)});
    bd.plan(2, {S(Msg::W11), S(Msg::W0c), S(Msg::W22), S(Msg::W02p)});
    Rat x = full_split ? min(d0c, pos(b.pi / Rat(2) - d01p)) : d0c;
    return bd.done({d11, d22, d01p + x, d02p + d0c - x});
}

// First bound in Case 3: receiver 1 strips W22 then joint-decodes its own
// message with the cooperative private part.
Scheme strong_case3_first(const ChannelParams& q, const CoopBudget& b, const Rat& dcoop,
                          std::string prov) {
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, q.a21 - q.a22, 1, LevelBand::tail(Rat(0)));
    bd.add(Msg::W22, q.a22, 2, LevelBand::slab(Rat(0), q.a22));
    bd.add(Msg::W01p, dcoop, 2, LevelBand::tail(q.a22));
    bd.plan(1, {S(Msg::W22), J({Msg::W11, Msg::W01p})});
    bd.plan(2, {S(Msg::W11), S(Msg::W22)});
    return bd.done({q.a21 - q.a22, q.a22, dcoop, Rat(0)});
}

// Second bound in Case 3 (the 1/3 slope with one private part pinned at the
// weaker direct level).
Scheme strong_case3_second(const ChannelParams& q, const CoopBudget& b, const Rat& pi,
                           std::string prov, bool full_split) {
    Rat d11 = (Rat(2) * q.a21 + q.a12 - Rat(3) * q.a22 - pi) / Rat(3);
    Rat d22 = (Rat(3) * q.a22 + q.a12 - q.a21 - pi) / Rat(3);
    Rat d01p = (Rat(2) * q.a12 - Rat(2) * q.a21 + pi) / Rat(3);
    Rat d02p = (q.a21 - q.a12 + pi) / Rat(3);
    Rat d0c = d02p;
    Rat dd = d11 + d22 + d0c;  // = (2*a21 + a12 - pi) / 3
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, d11, 1, LevelBand::slab(Rat(0), d11));
    bd.add(Msg::W22, d22, 2, LevelBand::slab(Rat(0), d22));
    bd.add(Msg::W01p, d01p, 2, LevelBand::tail(q.a22));
    bd.add(Msg::W02p, d02p, 1, LevelBand::tail(dd));
    bd.add_shared(d0c, LevelBand::slab(d11, dd), LevelBand::slab(d22, q.a22));
    bd.plan(1, {S(Msg::W22), S(Msg::W0c), J({Msg::W11, Msg::W01p})});
    bd.plan(2, {S(Msg::W11), S(Msg::W0c), S(Msg::W22), S(Msg::W02p)});
    Rat x = full_split ? min(d0c, pos(b.pi / Rat(2) - d01p)) : d0c;
    return bd.done({d11, d22, d01p + x, d02p + d0c - x});
}

// Case 4 first bound, low range: the weak cross direction cannot yet carry a
// private part for receiver 1.
Scheme strong_case4_a(const ChannelParams& q, const CoopBudget& b, const Rat& dcoop,
                      std::string prov) {
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, q.a11, 1, LevelBand::slab(Rat(0), q.a11));
    bd.add(Msg::W22, q.a22, 2, LevelBand::tail(Rat(0)));
    bd.add(Msg::W02p, dcoop, 1, LevelBand::tail(q.a11));
    bd.plan(1, {S(Msg::W22), S(Msg::W11)});
    bd.plan(2, {S(Msg::W11), S(Msg::W02p), S(Msg::W22)});
    return bd.done({q.a11, q.a22, Rat(0), dcoop});
}

// Case 4 first/second bound with both cooperative private parts below the
// direct layers.
Scheme strong_case4_b(const ChannelParams& q, const CoopBudget& b, const Rat& d01p,
                      const Rat& d02p, std::string prov) {
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, q.a11, 1, LevelBand::slab(Rat(0), q.a11));
    bd.add(Msg::W22, q.a22, 2, LevelBand::slab(Rat(0), q.a22));
    bd.add(Msg::W01p, d01p, 2, LevelBand::tail(q.a22));
    bd.add(Msg::W02p, d02p, 1, LevelBand::tail(q.a11));
    bd.plan(1, {S(Msg::W22), S(Msg::W01p), S(Msg::W11)});
    bd.plan(2, {S(Msg::W11), S(Msg::W02p), S(Msg::W22)});
    return bd.done({q.a11, q.a22, d01p, d02p});
}

// Case 4 third bound (1/3 slope) with joint decoding of the private pair at
// each receiver.
Scheme strong_case4_c(const ChannelParams& q, const CoopBudget& b, const Rat& pi,
                      std::string prov, bool full_split) {
    Rat M = q.a11 + q.a22, N = q.a12 + q.a21;
    Rat d11 = (N + q.a11 - Rat(2) * q.a22 - pi) / Rat(3);
    Rat d22 = (N + q.a22 - Rat(2) * q.a11 - pi) / Rat(3);
    Rat d01p = (Rat(2) * q.a12 + pi - M - q.a21) / Rat(3);
    Rat d02p = (Rat(2) * q.a21 + pi - M - q.a12) / Rat(3);
    Rat d0c = (Rat(2) * M + pi - N) / Rat(3);
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, d11, 1, LevelBand::slab(Rat(0), d11));
    bd.add(Msg::W22, d22, 2, LevelBand::slab(Rat(0), d22));
    bd.add(Msg::W01p, d01p, 2, LevelBand::tail(q.a22));
    bd.add(Msg::W02p, d02p, 1, LevelBand::tail(q.a11));
    bd.add_shared(d0c, LevelBand::slab(d11, q.a11), LevelBand::slab(d22, q.a22));
    bd.plan(1, {S(Msg::W22), S(Msg::W0c), J({Msg::W11, Msg::W01p})});
    bd.plan(2, {S(Msg::W11), S(Msg::W0c), J({Msg::W22, Msg::W02p})});
    Rat x = full_split ? min(d0c, pos(b.pi / Rat(2) - d01p)) : d0c;
    return bd.done({d11, d22, d01p + x, d02p + d0c - x});
}

// Full-duplex first bound, high range, for Cases 1-2 (no common part yet).
Scheme strong_full_first_high(const ChannelParams& q, const CoopBudget& b, const Rat& h,
                              std::string prov) {
    Rat d11 = q.a11 - h;
    Rat d22 = q.a12 - q.a11;
    Rat ds = d11 + d22;  // = a12 - h
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, d11, 1, LevelBand::slab(Rat(0), ds));
    bd.add(Msg::W22, d22, 2, LevelBand::slab(Rat(0), ds));
    bd.add(Msg::W01p, h, 2, LevelBand::tail(ds));
    bd.add(Msg::W02p, h + q.a21 - q.a12, 1, LevelBand::tail(ds));
    bd.plan(1, {S(Msg::W22), S(Msg::W11), S(Msg::W01p)});
    bd.plan(2, {J({Msg::W11, Msg::W22}), S(Msg::W02p)});
    return bd.done({d11, d22, h, h + q.a21 - q.a12});
}

// Full-duplex Case 2 top range: a common part appears and the spare capacity
// of the reverse conference direction absorbs it.
Scheme strong_full_case2_high(const ChannelParams& q, const CoopBudget& b, const Rat& h,
                              std::string prov) {
    Rat M = q.a11 + q.a22;
    Rat d11 = q.a11 - h;
    Rat d22 = q.a12 - q.a21 + q.a22 - h;
    Rat d01p = h;
    Rat d02p = q.a21 - q.a12 + h;
    Rat d0c = q.a21 - M + h;
    Rat dd = q.a12 - h;  // common lower cutoff of both private tails
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, d11, 1, LevelBand::slab(Rat(0), d11));
    bd.add(Msg::W22, d22, 2, LevelBand::slab(Rat(0), d22));
    bd.add(Msg::W01p, d01p, 2, LevelBand::tail(dd));
    bd.add(Msg::W02p, d02p, 1, LevelBand::tail(dd));
    bd.add_shared(d0c, LevelBand::slab(d11, dd), LevelBand::slab(d22, dd));
    bd.plan(1, {S(Msg::W22), S(Msg::W0c), S(Msg::W11), S(Msg::W01p)});
    bd.plan(2, {S(Msg::W11), S(Msg::W0c), S(Msg::W22), S(Msg::W02p)});
    return bd.done({d11, d22, d01p, d02p + d0c});
}

// Full-duplex Case 3, high range of the first bound.
Scheme strong_full_case3_high(const ChannelParams& q, const CoopBudget& b, const Rat& h,
                              std::string prov) {
    Rat d11 = q.a12 - q.a22 - h;
    Rat d22 = q.a22 + q.a12 - q.a21 - h;
    Rat d01p = h;
    Rat d02p = q.a21 - q.a12 + h;
    Rat d0c = d02p;
    Rat dd = q.a12 - h;
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, d11, 1, LevelBand::slab(Rat(0), d11));
    bd.add(Msg::W22, d22, 2, LevelBand::slab(Rat(0), d22));
    bd.add(Msg::W01p, d01p, 2, LevelBand::tail(q.a22));
    bd.add(Msg::W02p, d02p, 1, LevelBand::tail(dd));
    bd.add_shared(d0c, LevelBand::slab(d11, dd), LevelBand::slab(d22, q.a22));
    bd.plan(1, {S(Msg::W22), S(Msg::W0c), J({Msg::W11, Msg::W01p})});
    bd.plan(2, {S(Msg::W11), S(Msg::W0c), S(Msg::W22), S(Msg::W02p)});
    return bd.done({d11, d22, d01p, d02p + d0c});
}

// Full-duplex Case 4, top of the second bound.
Scheme strong_full_case4_high(const ChannelParams& q, const CoopBudget& b, const Rat& h,
                              std::string prov) {
    Rat M = q.a11 + q.a22;
    Rat d11 = q.a12 - q.a22 - h;
    Rat d22 = q.a12 - q.a11 - h;
    Rat d01p = h;
    Rat d02p = q.a21 - q.a12 + h;
    Rat d0c = M - q.a12 + h;
    Build bd(q, b, std::move(prov));
    bd.add(Msg::W11, d11, 1, LevelBand::slab(Rat(0), d11));
    bd.add(Msg::W22, d22, 2, LevelBand::slab(Rat(0), d22));
    bd.add(Msg::W01p, d01p, 2, LevelBand::tail(q.a22));
    bd.add(Msg::W02p, d02p, 1, LevelBand::tail(q.a11));
    bd.add_shared(d0c, LevelBand::slab(d11, q.a11), LevelBand::slab(d22, q.a22));
    bd.plan(1, {S(Msg::W22), S(Msg::W0c), J({Msg::W11, Msg::W01p})});
    bd.plan(2, {S(Msg::W11), S(Msg::W0c), J({Msg::W22, Msg::W02p})});
    return bd.done({d11, d22, d01p, d02p + d0c});
}

Scheme synth_strong_half(const ChannelParams& q, const CoopBudget& b) {
    Rat pi = min(b.pi, pi_star(q));
    Rat M = q.a11 + q.a22, N = q.a12 + q.a21;

    if (q.a12 <= M) {
        bool case1 = N <= M + q.max_direct();
        const char* c = case1 ? "strong/case1" : "strong/case2";
        if (pi <= q.a12 - q.a21)
            return strong_first_low(q, b, pi, std::string(c) + "/first-bound");
        if (case1 || pi <= Rat(2) * M - N)
            return strong_second_12(q, b, pi, std::string(c) + "/second-bound");
        return strong_third_2(q, b, pi, "strong/case2/third-bound", false);
    }
    if (q.a21 <= M) {
        if (pi <= q.a12 - q.a21)
            return strong_case3_first(q, b, pi, "strong/case3/first-bound");
        return strong_case3_second(q, b, pi, "strong/case3/second-bound", false);
    }
    if (pi <= q.a21 - M) return strong_case4_a(q, b, pi, "strong/case4/first-bound-a");
    if (pi <= N - Rat(2) * M)
        return strong_case4_b(q, b, pi + M - q.a21, q.a21 - M, "strong/case4/first-bound-b");
    return strong_case4_c(q, b, pi, "strong/case4/second-bound", false);
}

Scheme synth_strong_full(const ChannelParams& q, const CoopBudget& b) {
    Rat pi = min(b.pi, pi_plus(q));
    Rat h = pi / Rat(2);
    Rat M = q.a11 + q.a22, N = q.a12 + q.a21;
    Rat mx = q.max_direct(), mn = q.min_direct();

    if (q.a12 <= M) {
        bool narrow = Rat(2) * q.a21 <= M + mx;  // reverse direction never binds
        const char* c = narrow ? "strong-fd/case1or2-narrow" : "strong-fd/case2-wide";
        if (N <= M + mx) c = "strong-fd/case1";
        if (h <= q.a12 - q.a21)
            return strong_first_low(q, b, h, std::string(c) + "/first-bound-low");
        if (h <= M - q.a21)
            return strong_full_first_high(q, b, h, std::string(c) + "/first-bound-high");
        if (narrow || h <= M + q.a12 - Rat(2) * q.a21)
            return strong_full_case2_high(q, b, h, std::string(c) + "/first-bound-top");
        return strong_third_2(q, b, pi, "strong-fd/case2-wide/third-bound", true);
    }
    if (q.a21 <= M) {
        bool narrow = q.a12 >= Rat(2) * q.a21 - mx;
        const char* c = narrow ? "strong-fd/case3-narrow" : "strong-fd/case3-wide";
        if (h <= q.a12 - q.a21)
            return strong_case3_first(q, b, h, std::string(c) + "/first-bound-low");
        if (narrow || h <= Rat(2) * (q.a12 - q.a21))
            return strong_full_case3_high(q, b, h, std::string(c) + "/first-bound-high");
        return strong_case3_second(q, b, pi, "strong-fd/case3-wide/second-bound", true);
    }
    bool narrow = q.a12 >= q.a21 + mn;
    const char* c = narrow ? "strong-fd/case4-narrow" : "strong-fd/case4-wide";
    if (h <= q.a21 - M)
        return strong_case4_b(q, b, h, h, std::string(c) + "/first-bound");
    if (h <= q.a12 - M)
        return strong_case4_b(q, b, h, q.a21 - M, std::string(c) + "/second-bound-low");
    if (narrow || h <= Rat(2) * q.a12 - q.a21 - M)
        return strong_full_case4_high(q, b, h, std::string(c) + "/second-bound-high");
    return strong_case4_c(q, b, pi, "strong-fd/case4-wide/third-bound", true);
}

}  // namespace

Scheme synthesize(const ChannelParams& p, const CoopBudget& b) {
    if (!p.valid() || !b.valid()) throw std::invalid_argument("invalid parameters");
    Regime r = classify_regime(p);
    bool swap = r == Regime::Strong ? p.a12 < p.a21 : p.a11 < p.a22;
    ChannelParams q = swap ? p.swapped() : p;

    Scheme s;
    switch (r) {
        case Regime::Weak: s = synth_weak(q, b); break;
        case Regime::Mixed: s = synth_mixed(q, b); break;
        case Regime::Strong:
            s = b.mode == Duplex::Half ? synth_strong_half(q, b) : synth_strong_full(q, b);
            break;
    }
    if (swap) {
        s = s.swapped();
        s.provenance += ":swapped";
    }
    return s;
}

std::string case_id(const ChannelParams& p, const CoopBudget& b) {
    return synthesize(p, b).provenance;
}

}  // namespace iclc
