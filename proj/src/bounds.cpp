#include "iclc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace iclc {

namespace {

// Lines value = offset + slope * pi, used for both bound sets and curves.
struct Line {
    std::string id;
    Rat offset;
    Rat slope;
};

std::vector<Line> bound_lines(const ChannelParams& p, Duplex mode, Regime r) {
    std::vector<Line> lines;
    Rat ic = d_ic(p), bc = d_bc(p);
    switch (r) {
        case Regime::Weak:
            lines.push_back({"IC+pi", ic, Rat(1)});
            break;
        case Regime::Mixed:
            if (mode == Duplex::Half)
                lines.push_back({"IC+pi", ic, Rat(1)});
            else
                lines.push_back({"IC+pi/2", ic, Rat(1, 2)});
            break;
        case Regime::Strong:
            lines.push_back({"IC+pi", ic, Rat(1)});
            if (mode == Duplex::Half)
                lines.push_back({"(D2e+pi)/2", d_2e(p) / Rat(2), Rat(1, 2)});
            else
                lines.push_back({"min(a12,a21)+pi/2", p.min_cross(), Rat(1, 2)});
            lines.push_back({"(D3e+pi)/3", d_3e(p) / Rat(3), Rat(1, 3)});
            break;
    }
    lines.push_back({"BC", bc, Rat(0)});
    return lines;
}

}  // namespace

BoundSet bound_set_for_regime(const ChannelParams& p, const CoopBudget& b, Regime r) {
    if (!p.valid() || !b.valid()) throw std::invalid_argument("invalid parameters");
    BoundSet set;
    for (const auto& l : bound_lines(p, b.mode, r))
        set.bounds.push_back({l.id, l.offset + l.slope * b.pi, false});
    set.flag_active();
    return set;
}

std::pair<Rat, BoundSet> sum_gdof(const ChannelParams& p, const CoopBudget& b) {
    BoundSet set = bound_set_for_regime(p, b, classify_regime(p));
    return {set.min_value(), set};
}

Rat general_converse_for_regime(const ChannelParams& p, const SplitBudget& s, Regime r) {
    if (!p.valid() || !s.valid()) throw std::invalid_argument("invalid parameters");
    Rat total = s.pi01 + s.pi02;
    Rat v = min(d_ic(p) + total, d_bc(p));
    if (r == Regime::Mixed || r == Regime::Strong) {
        Rat lambda1 = max(p.a21, p.a22) + pos(p.a11 - p.a21);
        Rat lambda2 = max(p.a12, p.a11) + pos(p.a22 - p.a12);
        v = min(v, min(lambda1 + s.pi01, lambda2 + s.pi02));
    }
    if (r == Regime::Strong) v = min(v, (d_3e(p) + total) / Rat(3));
    return v;
}

Rat general_converse(const ChannelParams& p, const SplitBudget& s) {
    return general_converse_for_regime(p, s, classify_regime(p));
}

Rat pi_star(const ChannelParams& p) {
    if (!p.valid()) throw std::invalid_argument("invalid parameters");
    if (classify_regime(p) != Regime::Strong) return d_bc(p) - d_ic(p);
    // Strong regime, a12 >= a21 labeling.
    ChannelParams q = p.a12 >= p.a21 ? p : p.swapped();
    Rat M = q.a11 + q.a22, N = q.a12 + q.a21, mx = q.max_direct();
    if (q.a12 <= M && q.a21 <= M) {
        if (N <= M + mx) return N - Rat(2) * mx;
        return Rat(2) * N - M - Rat(3) * mx;
    }
    if (q.a12 >= M && q.a21 <= M) return N + q.a21 - Rat(3) * mx;
    return N + M - Rat(3) * mx;
}

Rat pi_plus(const ChannelParams& p) {
    if (!p.valid()) throw std::invalid_argument("invalid parameters");
    Regime r = classify_regime(p);
    if (r == Regime::Weak) return d_bc(p) - d_ic(p);
    if (r == Regime::Mixed) return Rat(2) * (d_bc(p) - d_ic(p));
    // Strong regime, a21 <= a12 labeling.
    ChannelParams q = p.a12 >= p.a21 ? p : p.swapped();
    Rat M = q.a11 + q.a22, N = q.a12 + q.a21, mx = q.max_direct();
    if (q.a12 <= M && q.a21 <= M && Rat(2) * q.a21 >= M + mx)
        return Rat(2) * N - M - Rat(3) * mx;
    if (q.a12 >= M && q.a21 <= M && q.a12 <= Rat(2) * q.a21 - mx)
        return N + q.a21 - Rat(3) * mx;
    if (q.a12 >= M && q.a21 >= M && q.a12 <= q.a21 + q.min_direct())
        return N + M - Rat(3) * mx;
    return Rat(2) * q.a12 - Rat(2) * mx;
}

Rat PiecewiseCurve::value_at(const Rat& pi) const {
    if (!pi.is_nonneg()) throw std::invalid_argument("negative pi");
    // Find the segment containing pi; beyond the last breakpoint the curve is flat.
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (pi <= breakpoints[i + 1].first)
            return breakpoints[i].second + slopes[i] * (pi - breakpoints[i].first);
    }
    return breakpoints.back().second;
}

PiecewiseCurve curve(const ChannelParams& p, Duplex mode) {
    if (!p.valid()) throw std::invalid_argument("invalid parameters");
    std::vector<Line> lines = bound_lines(p, mode, classify_regime(p));

    // Lower envelope on pi >= 0, walked left to right. At each point the
    // envelope follows, among the lines that attain the current minimum, the
    // one with the smallest slope.
    PiecewiseCurve c;
    c.saturation = d_bc(p);

    Rat pi(0);
    Rat value = lines.front().offset;
    for (const auto& l : lines) value = min(value, l.offset);

    auto active_slope = [&](const Rat& at_pi, const Rat& at_value) {
        Rat s(2);  // larger than any real slope
        for (const auto& l : lines)
            if (l.offset + l.slope * at_pi == at_value) s = min(s, l.slope);
        return s;
    };

    c.breakpoints.push_back({pi, value});
    Rat slope = active_slope(pi, value);
    while (!slope.is_zero()) {
        // Next crossing: smallest pi' > pi where some line dips below the
        // current segment value + slope * (pi' - pi).
        Rat next_pi(-1);
        for (const auto& l : lines) {
            if (l.slope >= slope) continue;
            // value + slope*(x - pi) = l.offset + l.slope*x
            Rat x = (l.offset - value + slope * pi) / (slope - l.slope);
            if (x < pi) continue;  // already below; cannot happen on the envelope
            if (next_pi.is_negative() || x < next_pi) next_pi = x;
        }
        if (next_pi.is_negative()) break;  // no flatter line (unreachable: BC has slope 0)
        Rat next_value = value + slope * (next_pi - pi);
        c.slopes.push_back(slope);
        pi = next_pi;
        value = next_value;
        c.breakpoints.push_back({pi, value});
        slope = active_slope(pi, value);
    }
    c.slopes.push_back(Rat(0));
    return c;
}

}  // namespace iclc
