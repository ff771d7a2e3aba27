#pragma once

#include <array>
#include <string>
#include <vector>

#include "iclc/bounds.hpp"
#include "iclc/channel.hpp"

namespace iclc {

// Sub-message taxonomy: a 0 subscript marks cooperative messages (they count
// against the conference budget); superscript p parts are decoded only at the
// intended receiver, superscript c parts at both. The plain tags W11..W02 are
// the undivided messages.
enum class Msg {
    W11, W22, W01, W02,
    W11p, W11c, W22p, W22c,
    W01p, W02p,
    W0c,
};

inline const char* msg_name(Msg m) {
    switch (m) {
        case Msg::W11: return "W11";
        case Msg::W22: return "W22";
        case Msg::W01: return "W01";
        case Msg::W02: return "W02";
        case Msg::W11p: return "W11p";
        case Msg::W11c: return "W11c";
        case Msg::W22p: return "W22p";
        case Msg::W22c: return "W22c";
        case Msg::W01p: return "W01p";
        case Msg::W02p: return "W02p";
        case Msg::W0c: return "W0c";
    }
    return "?";
}

bool msg_from_name(const std::string& name, Msg& out);

inline bool msg_cooperative(Msg m) {
    switch (m) {
        case Msg::W01: case Msg::W02: case Msg::W01p: case Msg::W02p: case Msg::W0c:
            return true;
        default:
            return false;
    }
}

// Receiver(s) that must decode the message. Undivided messages are required
// only at their intended receiver but may additionally be decoded at the
// other one (several schemes strip a neighbor's undivided message that way).
inline bool msg_required_at(Msg m, int rx) {
    switch (m) {
        case Msg::W11: case Msg::W11p: case Msg::W01: case Msg::W01p: return rx == 1;
        case Msg::W22: case Msg::W22p: case Msg::W02: case Msg::W02p: return rx == 2;
        case Msg::W11c: case Msg::W22c: case Msg::W0c: return true;
    }
    return false;
}

inline bool msg_allowed_at(Msg m, int rx) {
    switch (m) {
        case Msg::W11p: case Msg::W01p: return rx == 1;  // private: intended receiver only
        case Msg::W22p: case Msg::W02p: return rx == 2;
        default: return true;
    }
}

// Swap of user labels, matching ChannelParams::swapped().
Msg msg_swapped(Msg m);

struct Placement {
    int tx = 1;  // 1 or 2
    LevelBand band;
};

// One superposition layer: a message part carrying `gdof`, transmitted in the
// given band(s). The jointly encoded W0c codeword has one placement per
// transmitter; everything else has exactly one.
struct Codeword {
    Msg msg;
    Rat gdof;
    std::vector<Placement> placements;
};

struct DecodeStep {
    bool joint = false;          // joint multiple-access decoding of all msgs
    std::vector<Msg> msgs;       // one entry unless joint
};

struct DecodingPlan {
    int receiver = 1;
    std::vector<DecodeStep> steps;
};

struct ClaimedTuple {
    Rat d11, d22, d01, d02;
    Rat sum() const { return d11 + d22 + d01 + d02; }
};

struct Scheme {
    ChannelParams params;
    CoopBudget budget;
    std::string provenance;  // case id, e.g. "strong/case3/second-bound"
    std::vector<Codeword> codewords;
    std::array<DecodingPlan, 2> plans;  // plans[0] = receiver 1, plans[1] = receiver 2
    ClaimedTuple claimed;

    const Codeword* find(Msg m) const {
        for (const auto& c : codewords)
            if (c.msg == m) return &c;
        return nullptr;
    }

    // Same scheme with the user labels exchanged.
    Scheme swapped() const;
};

}  // namespace iclc
