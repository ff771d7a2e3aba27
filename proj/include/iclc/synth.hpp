#pragma once

#include <string>

#include "iclc/scheme.hpp"

namespace iclc {

// Constructs the explicit achievable scheme for any parameter point and
// budget: sub-message split, GDoF allocation, per-transmitter power bands and
// per-receiver decoding plans. The budget is clamped internally to the
// saturation point (pi_star / pi_plus); beyond it the scheme is unchanged.
// The claimed sum always equals sum_gdof(p, b) and verify() accepts the result.
Scheme synthesize(const ChannelParams& p, const CoopBudget& b);

// The dispatch tag (table row or case and budget sub-range) a synthesis of
// (p, b) resolves to, e.g. "strong/case3/second-bound". A ":swapped" suffix
// marks points handled through the user-relabeling symmetry. At sub-range
// boundaries the lower tag wins.
std::string case_id(const ChannelParams& p, const CoopBudget& b);

}  // namespace iclc
