#include "iclc/document.hpp"

#include <nlohmann/json.hpp>

namespace iclc {

using nlohmann::json;

namespace {

json rat_to_json(const Rat& r) { return json::array({r.num(), r.den()}); }

Rat rat_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw DocumentError(path, "expected [num, den] integer pair");
    std::int64_t den = j[1].get<std::int64_t>();
    if (den <= 0) throw DocumentError(path, "denominator must be positive");
    return Rat(j[0].get<std::int64_t>(), den);
}

json band_to_json(const LevelBand& b) {
    json j;
    j["hi"] = rat_to_json(b.hi);
    j["lo"] = b.lo ? rat_to_json(*b.lo) : json(nullptr);
    return j;
}

LevelBand band_from_json(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("hi") || !j.contains("lo"))
        throw DocumentError(path, "expected band object {hi, lo}");
    LevelBand b;
    b.hi = rat_from_json(j.at("hi"), path + ".hi");
    if (!j.at("lo").is_null()) b.lo = rat_from_json(j.at("lo"), path + ".lo");
    return b;
}

}  // namespace

json scheme_to_json(const Scheme& s) {
    json j;
    j["schema"] = 1;
    j["params"] = {{"a11", rat_to_json(s.params.a11)},
                   {"a22", rat_to_json(s.params.a22)},
                   {"a12", rat_to_json(s.params.a12)},
                   {"a21", rat_to_json(s.params.a21)}};
    j["budget"] = {{"mode", duplex_name(s.budget.mode)}, {"pi", rat_to_json(s.budget.pi)}};
    j["provenance"] = s.provenance;
    json cws = json::array();
    for (const auto& c : s.codewords) {
        json cw;
        cw["msg"] = msg_name(c.msg);
        cw["gdof"] = rat_to_json(c.gdof);
        json pls = json::array();
        for (const auto& pl : c.placements)
            pls.push_back({{"tx", pl.tx}, {"band", band_to_json(pl.band)}});
        cw["placements"] = pls;
        cws.push_back(cw);
    }
    j["codewords"] = cws;
    json plans = json::array();
    for (const auto& plan : s.plans) {
        json pj;
        pj["receiver"] = plan.receiver;
        json steps = json::array();
        for (const auto& st : plan.steps) {
            json sj;
            sj["type"] = st.joint ? "joint" : "successive";
            json ms = json::array();
            for (Msg m : st.msgs) ms.push_back(msg_name(m));
            sj["codewords"] = ms;
            steps.push_back(sj);
        }
        pj["steps"] = steps;
        plans.push_back(pj);
    }
    j["plans"] = plans;
    j["claimed"] = {{"d11", rat_to_json(s.claimed.d11)},
                    {"d22", rat_to_json(s.claimed.d22)},
                    {"d01", rat_to_json(s.claimed.d01)},
                    {"d02", rat_to_json(s.claimed.d02)}};
    return j;
}

Scheme scheme_from_json(const json& j) {
    if (!j.is_object()) throw DocumentError("$", "document must be an object");
    if (!j.contains("schema") || j.at("schema") != 1)
        throw DocumentError("$.schema", "unsupported or missing schema version");
    Scheme s;
    if (!j.contains("params") || !j.at("params").is_object())
        throw DocumentError("$.params", "missing params");
    const json& pj = j.at("params");
    for (const char* f : {"a11", "a22", "a12", "a21"})
        if (!pj.contains(f)) throw DocumentError(std::string("$.params.") + f, "missing");
    s.params.a11 = rat_from_json(pj.at("a11"), "$.params.a11");
    s.params.a22 = rat_from_json(pj.at("a22"), "$.params.a22");
    s.params.a12 = rat_from_json(pj.at("a12"), "$.params.a12");
    s.params.a21 = rat_from_json(pj.at("a21"), "$.params.a21");

    if (!j.contains("budget") || !j.at("budget").is_object())
        throw DocumentError("$.budget", "missing budget");
    const json& bj = j.at("budget");
    if (!bj.contains("mode") || !bj.at("mode").is_string())
        throw DocumentError("$.budget.mode", "missing mode");
    std::string mode = bj.at("mode").get<std::string>();
    if (mode == "half") s.budget.mode = Duplex::Half;
    else if (mode == "full") s.budget.mode = Duplex::Full;
    else throw DocumentError("$.budget.mode", "mode must be 'half' or 'full'");
    if (!bj.contains("pi")) throw DocumentError("$.budget.pi", "missing pi");
    s.budget.pi = rat_from_json(bj.at("pi"), "$.budget.pi");

    s.provenance = j.value("provenance", std::string());

    if (!j.contains("codewords") || !j.at("codewords").is_array())
        throw DocumentError("$.codewords", "missing codeword list");
    int ci = 0;
    for (const auto& cj : j.at("codewords")) {
        std::string path = "$.codewords[" + std::to_string(ci++) + "]";
        if (!cj.is_object() || !cj.contains("msg") || !cj.contains("gdof") ||
            !cj.contains("placements"))
            throw DocumentError(path, "codeword needs msg, gdof, placements");
        Codeword c;
        if (!cj.at("msg").is_string() ||
            !msg_from_name(cj.at("msg").get<std::string>(), c.msg))
            throw DocumentError(path + ".msg", "unknown message tag");
        c.gdof = rat_from_json(cj.at("gdof"), path + ".gdof");
        if (!cj.at("placements").is_array() || cj.at("placements").empty())
            throw DocumentError(path + ".placements", "expected nonempty array");
        int pi = 0;
        for (const auto& plj : cj.at("placements")) {
            std::string ppath = path + ".placements[" + std::to_string(pi++) + "]";
            if (!plj.is_object() || !plj.contains("tx") || !plj.contains("band"))
                throw DocumentError(ppath, "placement needs tx and band");
            Placement pl;
            if (!plj.at("tx").is_number_integer())
                throw DocumentError(ppath + ".tx", "tx must be 1 or 2");
            pl.tx = plj.at("tx").get<int>();
            if (pl.tx != 1 && pl.tx != 2) throw DocumentError(ppath + ".tx", "tx must be 1 or 2");
            pl.band = band_from_json(plj.at("band"), ppath + ".band");
            c.placements.push_back(pl);
        }
        s.codewords.push_back(std::move(c));
    }

    if (!j.contains("plans") || !j.at("plans").is_array() || j.at("plans").size() != 2)
        throw DocumentError("$.plans", "expected exactly two plans");
    int pli = 0;
    for (const auto& pj2 : j.at("plans")) {
        std::string path = "$.plans[" + std::to_string(pli) + "]";
        if (!pj2.is_object() || !pj2.contains("receiver") || !pj2.contains("steps"))
            throw DocumentError(path, "plan needs receiver and steps");
        DecodingPlan plan;
        if (!pj2.at("receiver").is_number_integer())
            throw DocumentError(path + ".receiver", "receiver must be 1 or 2");
        plan.receiver = pj2.at("receiver").get<int>();
        if (plan.receiver != pli + 1)
            throw DocumentError(path + ".receiver", "plans must list receivers 1 then 2");
        if (!pj2.at("steps").is_array()) throw DocumentError(path + ".steps", "expected array");
        int si = 0;
        for (const auto& sj : pj2.at("steps")) {
            std::string spath = path + ".steps[" + std::to_string(si++) + "]";
            if (!sj.is_object() || !sj.contains("type") || !sj.contains("codewords"))
                throw DocumentError(spath, "step needs type and codewords");
            DecodeStep st;
            std::string type = sj.at("type").get<std::string>();
            if (type == "joint") st.joint = true;
            else if (type == "successive") st.joint = false;
            else throw DocumentError(spath + ".type", "type must be 'successive' or 'joint'");
            if (!sj.at("codewords").is_array() || sj.at("codewords").empty())
                throw DocumentError(spath + ".codewords", "expected nonempty array");
            for (const auto& mj : sj.at("codewords")) {
                Msg m;
                if (!mj.is_string() || !msg_from_name(mj.get<std::string>(), m))
                    throw DocumentError(spath + ".codewords", "unknown message tag");
                st.msgs.push_back(m);
            }
            plan.steps.push_back(std::move(st));
        }
        s.plans[pli] = std::move(plan);
        ++pli;
    }

    if (!j.contains("claimed") || !j.at("claimed").is_object())
        throw DocumentError("$.claimed", "missing claimed tuple");
    const json& tj = j.at("claimed");
    for (const char* f : {"d11", "d22", "d01", "d02"})
        if (!tj.contains(f)) throw DocumentError(std::string("$.claimed.") + f, "missing");
    s.claimed.d11 = rat_from_json(tj.at("d11"), "$.claimed.d11");
    s.claimed.d22 = rat_from_json(tj.at("d22"), "$.claimed.d22");
    s.claimed.d01 = rat_from_json(tj.at("d01"), "$.claimed.d01");
    s.claimed.d02 = rat_from_json(tj.at("d02"), "$.claimed.d02");
    return s;
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["schema"] = 1;
    j["ok"] = r.ok;
    j["structural_ok"] = r.structural_ok;
    json fs = json::array();
    for (const auto& f : r.findings) {
        json fj;
        fj["receiver"] = f.receiver;
        fj["step"] = f.step;
        fj["constraint"] = f.constraint;
        fj["lhs"] = rat_to_json(f.lhs);
        fj["rhs"] = rat_to_json(f.rhs);
        fj["margin"] = rat_to_json(f.margin);
        fj["violated"] = f.violated;
        fs.push_back(fj);
    }
    j["findings"] = fs;
    j["totals"] = {{"d11", rat_to_json(r.totals.d11)},
                   {"d22", rat_to_json(r.totals.d22)},
                   {"d01", rat_to_json(r.totals.d01)},
                   {"d02", rat_to_json(r.totals.d02)}};
    return j;
}

}  // namespace iclc
