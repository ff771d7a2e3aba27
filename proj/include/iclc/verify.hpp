#pragma once

#include <string>
#include <vector>

#include "iclc/scheme.hpp"

namespace iclc {

// One checked constraint. Violations have negative margin; receiver 0 marks
// scheme-global checks (budget, accounting, band structure).
struct Finding {
    int receiver = 0;
    int step = -1;
    std::string constraint;
    Rat lhs, rhs;      // constraint is lhs <= rhs
    Rat margin;        // rhs - lhs
    bool violated = false;
};

struct VerificationReport {
    bool ok = false;             // all checks hold
    bool structural_ok = true;   // scheme is well-formed (bands, plans, coverage)
    std::vector<Finding> findings;
    ClaimedTuple totals;

    std::vector<const Finding*> violations() const {
        std::vector<const Finding*> v;
        for (const auto& f : findings)
            if (f.violated) v.push_back(&f);
        return v;
    }
};

// GDoF-level decoding check: per receiver and per plan step, with U the
// codewords not yet decoded there, z = max(0, max over interfering U of the
// received top),
//   successive step:  gdof <= received_top - z
//   joint MAC step:   for every nonempty subset T, sum of gdofs over T
//                     <= (max received top over T - z)^+
// plus band disjointness per transmitter, budget accounting, and decodability
// coverage (common parts at both receivers, private parts at the intended
// receiver only). Structural defects are reported with structural_ok = false,
// distinct from a decoding-constraint failure.
VerificationReport verify(const Scheme& s, const ChannelParams& p, const CoopBudget& b);

inline VerificationReport verify(const Scheme& s) { return verify(s, s.params, s.budget); }

// Polymatroid membership for one joint-decoding step: demands[i] against
// received tops[i] over interference floor z.
bool mac_region_contains(const std::vector<Rat>& demands, const std::vector<Rat>& tops,
                         const Rat& z);

}  // namespace iclc
