#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "iclc/document.hpp"
#include "iclc/synth.hpp"
#include "iclc/verify.hpp"
#include "support.hpp"

using namespace iclc;
using nlohmann::json;
using testsupport::default_dens;
using testsupport::random_params_in;
using testsupport::random_rat;

namespace {
bool schemes_equal(const Scheme& a, const Scheme& b) {
    if (!(a.params == b.params) || a.budget.mode != b.budget.mode ||
        a.budget.pi != b.budget.pi || a.provenance != b.provenance)
        return false;
    if (a.codewords.size() != b.codewords.size()) return false;
    for (std::size_t i = 0; i < a.codewords.size(); ++i) {
        const auto& ca = a.codewords[i];
        const auto& cb = b.codewords[i];
        if (ca.msg != cb.msg || ca.gdof != cb.gdof ||
            ca.placements.size() != cb.placements.size())
            return false;
        for (std::size_t k = 0; k < ca.placements.size(); ++k)
            if (ca.placements[k].tx != cb.placements[k].tx ||
                !(ca.placements[k].band == cb.placements[k].band))
                return false;
    }
    for (int r = 0; r < 2; ++r) {
        if (a.plans[r].steps.size() != b.plans[r].steps.size()) return false;
        for (std::size_t k = 0; k < a.plans[r].steps.size(); ++k)
            if (a.plans[r].steps[k].joint != b.plans[r].steps[k].joint ||
                a.plans[r].steps[k].msgs != b.plans[r].steps[k].msgs)
                return false;
    }
    return a.claimed.d11 == b.claimed.d11 && a.claimed.d22 == b.claimed.d22 &&
           a.claimed.d01 == b.claimed.d01 && a.claimed.d02 == b.claimed.d02;
}
}  // namespace

TEST_CASE("document round-trip identity across a sweep") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 400; ++i) {
        Regime r = static_cast<Regime>(i % 3);
        ChannelParams p = random_params_in(rng, r, default_dens());
        Duplex mode = (i & 1) ? Duplex::Half : Duplex::Full;
        Rat pi = random_rat(rng, 4, default_dens());
        Scheme s = synthesize(p, {mode, pi});
        json j = scheme_to_json(s);
        // Through text, as the CLI does.
        Scheme back = scheme_from_json(json::parse(j.dump()));
        CHECK(schemes_equal(s, back));
        CHECK(scheme_to_json(back) == j);
    }
}

TEST_CASE("rationals are serialized as integer pairs") {
    Scheme s = synthesize({2, 2, 5, 3}, {Duplex::Half, Rat(5)});
    json j = scheme_to_json(s);
    CHECK(j["schema"] == 1);
    CHECK(j["params"]["a11"] == json::array({2, 1}));
    CHECK(j["codewords"][0]["gdof"].is_array());
}

TEST_CASE("schema violations carry the offending path") {
    Scheme s = synthesize({2, 2, 5, 3}, {Duplex::Half, Rat(5)});
    json good = scheme_to_json(s);

    json bad = good;
    bad.erase("schema");
    CHECK_THROWS_WITH_AS(scheme_from_json(bad),
                         doctest::Contains("$.schema"), DocumentError);

    bad = good;
    bad["params"]["a12"] = "5";
    CHECK_THROWS_WITH_AS(scheme_from_json(bad),
                         doctest::Contains("$.params.a12"), DocumentError);

    bad = good;
    bad["budget"]["mode"] = "duplex";
    CHECK_THROWS_WITH_AS(scheme_from_json(bad),
                         doctest::Contains("$.budget.mode"), DocumentError);

    bad = good;
    bad["codewords"][1]["msg"] = "W33";
    CHECK_THROWS_WITH_AS(scheme_from_json(bad),
                         doctest::Contains("$.codewords[1].msg"), DocumentError);

    bad = good;
    bad["codewords"][0]["gdof"] = json::array({1, 0});
    CHECK_THROWS_WITH_AS(scheme_from_json(bad),
                         doctest::Contains("$.codewords[0].gdof"), DocumentError);

    bad = good;
    bad["plans"][0]["steps"][0]["type"] = "sequential";
    CHECK_THROWS_WITH_AS(scheme_from_json(bad),
                         doctest::Contains("$.plans[0].steps[0].type"), DocumentError);
}

TEST_CASE("mutated documents fail cleanly or parse") {
    std::mt19937_64 rng(107);
    std::string good = scheme_to_json(synthesize({2, 2, 5, 3}, {Duplex::Half, Rat(5)})).dump();
    const char replacements[] = "{}[]:,\"0123456789eE+-. aW";
    for (int i = 0; i < 3000; ++i) {
        std::string text = good;
        std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
        std::uniform_int_distribution<std::size_t> rep(0, sizeof(replacements) - 2);
        int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) text[pos(rng)] = replacements[rep(rng)];
        // Must either produce a scheme or throw a typed error; never crash.
        try {
            Scheme s = scheme_from_json(json::parse(text));
            (void)verify(s);
        } catch (const DocumentError&) {
        } catch (const json::exception&) {
        } catch (const std::domain_error&) {
        }
        CHECK(true);
    }
}

TEST_CASE("random strings never crash the rational parser") {
    std::mt19937_64 rng(109);
    const char chars[] = "0123456789/.-+e x";
    for (int i = 0; i < 5000; ++i) {
        std::string text;
        std::uniform_int_distribution<int> len(0, 24);
        std::uniform_int_distribution<std::size_t> pick(0, sizeof(chars) - 2);
        int n = len(rng);
        for (int k = 0; k < n; ++k) text += chars[pick(rng)];
        auto r = Rat::parse(text);
        if (r) CHECK(r->den() > 0);
    }
    // Overflow guards: absurdly long digit strings are rejected, not wrapped.
    CHECK(!Rat::parse("99999999999999999999999").has_value());
    CHECK(!Rat::parse("1.00000000000000000000001").has_value());
}

TEST_CASE("verification reports serialize") {
    Scheme s = synthesize({2, 2, 5, 3}, {Duplex::Half, Rat(5)});
    VerificationReport rep = verify(s);
    json j = report_to_json(rep);
    CHECK(j["ok"] == true);
    CHECK(j["structural_ok"] == true);
    CHECK(j["findings"].is_array());
    CHECK(!j["findings"].empty());
    CHECK(j["totals"]["d01"] == json::array({4, 1}));
}
