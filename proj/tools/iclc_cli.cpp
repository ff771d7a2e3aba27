// Command-line surface: evaluate sum-GDoF bounds, synthesize/verify/simulate
// coding schemes, and emit the data behind the survey figures.
//
// Exit codes: 0 success, 2 usage error, 3 verification failure, 4 simulation
// mismatch.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "iclc/bounds.hpp"
#include "iclc/detsim.hpp"
#include "iclc/document.hpp"
#include "iclc/synth.hpp"
#include "iclc/verify.hpp"

using namespace iclc;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitSim = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& tok) {
    auto r = Rat::parse(tok);
    if (!r) throw UsageError("malformed rational '" + tok + "'");
    if (r->is_negative()) throw UsageError("negative value '" + tok + "'");
    return *r;
}

ChannelParams parse_alpha(const std::string& csv) {
    std::vector<std::string> toks;
    std::stringstream ss(csv);
    std::string t;
    while (std::getline(ss, t, ',')) toks.push_back(t);
    if (toks.size() != 4)
        throw UsageError("--alpha expects a11,a22,a12,a21 (got '" + csv + "')");
    return ChannelParams{parse_rat(toks[0]), parse_rat(toks[1]), parse_rat(toks[2]),
                         parse_rat(toks[3])};
}

Duplex parse_mode(const std::string& m) {
    if (m == "half") return Duplex::Half;
    if (m == "full") return Duplex::Full;
    throw UsageError("--mode must be 'half' or 'full' (got '" + m + "')");
}

json rat_json(const Rat& r) {
    json j;
    j["rational"] = r.str();
    j["value"] = r.to_double();
    return j;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write output '" + path + "'");
    out << text;
}

int worker_count() {
    if (const char* env = std::getenv("ICLC_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n) on the worker pool; results are collected in
// index order so the output stays byte-stable.
template <typename Fn>
std::vector<std::string> parallel_rows(std::size_t n, Fn fn) {
    std::vector<std::string> rows(n);
    int workers = worker_count();
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    rows[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return rows;
}

int cmd_compute(const std::string& alpha, const std::string& pi_s, const std::string& mode_s,
                const std::string& split_s, const std::string& format,
                const std::string& out) {
    ChannelParams p = parse_alpha(alpha);
    Rat pi = parse_rat(pi_s);
    Duplex mode = parse_mode(mode_s);
    auto [value, set] = sum_gdof(p, {mode, pi});
    Rat ps = pi_star(p), pp = pi_plus(p);

    std::optional<Rat> split_value;
    std::optional<SplitBudget> split;
    if (!split_s.empty()) {
        std::stringstream ss(split_s);
        std::string t1, t2;
        if (!std::getline(ss, t1, ',') || !std::getline(ss, t2, ','))
            throw UsageError("--split expects p01,p02");
        split = SplitBudget{parse_rat(t1), parse_rat(t2)};
        split_value = general_converse(p, *split);
    }

    if (format == "json") {
        json j;
        j["regime"] = regime_name(classify_regime(p));
        j["mode"] = duplex_name(mode);
        j["pi"] = rat_json(pi);
        json bounds = json::array();
        for (const auto& bd : set.bounds) {
            json bj = rat_json(bd.value);
            bj["id"] = bd.id;
            bj["active"] = bd.active;
            bounds.push_back(bj);
        }
        j["bounds"] = bounds;
        j["sum_gdof"] = rat_json(value);
        j["pi_star"] = rat_json(ps);
        j["pi_plus"] = rat_json(pp);
        if (split_value) {
            j["split"] = {{"pi01", rat_json(split->pi01)}, {"pi02", rat_json(split->pi02)}};
            j["general_converse"] = rat_json(*split_value);
        }
        write_output(out, j.dump(2) + "\n");
    } else if (format == "csv") {
        std::ostringstream os;
        os << "field,rational,float\n";
        os << "regime," << regime_name(classify_regime(p)) << ",\n";
        os << "sum_gdof," << value.str() << "," << value.to_double() << "\n";
        for (const auto& bd : set.bounds)
            os << "bound[" << bd.id << (bd.active ? "*" : "") << "]," << bd.value.str()
               << "," << bd.value.to_double() << "\n";
        os << "pi_star," << ps.str() << "," << ps.to_double() << "\n";
        os << "pi_plus," << pp.str() << "," << pp.to_double() << "\n";
        if (split_value)
            os << "general_converse," << split_value->str() << ","
               << split_value->to_double() << "\n";
        write_output(out, os.str());
    } else {
        throw UsageError("--format must be json or csv");
    }
    return 0;
}

int cmd_synth(const std::string& alpha, const std::string& pi_s, const std::string& mode_s,
              const std::string& out) {
    ChannelParams p = parse_alpha(alpha);
    CoopBudget b{parse_mode(mode_s), parse_rat(pi_s)};
    Scheme s = synthesize(p, b);
    write_output(out, scheme_to_json(s).dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& in, const std::string& out) {
    json j = json::parse(read_input(in), nullptr, true, true);
    Scheme s = scheme_from_json(j);
    VerificationReport rep = verify(s);
    write_output(out, report_to_json(rep).dump(2) + "\n");
    return rep.ok ? 0 : kExitVerify;
}

int cmd_sim(const std::string& in, std::int64_t grain, const std::string& out) {
    json j = json::parse(read_input(in), nullptr, true, true);
    Scheme s = scheme_from_json(j);
    VerificationReport rep = verify(s);
    if (!rep.ok) {
        std::cerr << "scheme fails verification; not simulating\n";
        return kExitVerify;
    }
    std::int64_t g = grain > 0 ? grain : scheme_grain_lcm(s);
    SimResult r = simulate(s, s.params, g);
    if (!r.grid_ok) throw UsageError("grain " + std::to_string(g) + " misses the rational grid");
    json rj;
    rj["schema"] = 1;
    rj["grain"] = g;
    rj["ok"] = r.ok;
    json ds = json::array();
    for (const auto& d : r.deliveries)
        ds.push_back({{"receiver", d.receiver},
                      {"msg", msg_name(d.msg)},
                      {"delivered", d.delivered},
                      {"required", d.required}});
    rj["deliveries"] = ds;
    write_output(out, rj.dump(2) + "\n");
    return r.ok ? 0 : kExitSim;
}

void append_cell(std::ostringstream& os, const Rat& v) {
    os << "," << v.str() << "," << v.to_double();
}

int cmd_figures(const std::string& which, const std::string& out) {
    std::ostringstream os;
    if (which == "fig1") {
        // Symmetric setting (1, 1, a, a) over a in [0, 3] at budgets
        // {0, 1/3, 2/3, 1, pi_star(a)}; half and full duplex agree here.
        os << "alpha,alpha_f";
        for (const char* tag : {"pi0", "pi1_3", "pi2_3", "pi1", "pistar"})
            os << ",half_" << tag << ",half_" << tag << "_f,full_" << tag << ",full_"
               << tag << "_f";
        os << "\n";
        auto rows = parallel_rows(181, [&](std::size_t k) {
            Rat a(static_cast<std::int64_t>(k), 60);
            ChannelParams p{Rat(1), Rat(1), a, a};
            std::ostringstream row;
            row << a.str() << "," << a.to_double();
            std::vector<Rat> budgets = {Rat(0), Rat(1, 3), Rat(2, 3), Rat(1), pi_star(p)};
            for (const Rat& pi : budgets) {
                Rat h = sum_gdof_value(p, {Duplex::Half, pi});
                Rat f = sum_gdof_value(p, {Duplex::Full, pi});
                if (h != f) throw std::logic_error("symmetric half/full mismatch");
                append_cell(row, h);
                append_cell(row, f);
            }
            row << "\n";
            return row.str();
        });
        for (const auto& r : rows) os << r;
    } else if (which == "fig2") {
        ChannelParams p{Rat(6, 5), Rat(1), Rat(2), Rat(9, 5)};
        os << "pi,pi_f,half,half_f,full,full_f\n";
        auto rows = parallel_rows(251, [&](std::size_t k) {
            Rat pi(static_cast<std::int64_t>(k), 100);
            std::ostringstream row;
            row << pi.str() << "," << pi.to_double();
            append_cell(row, sum_gdof_value(p, {Duplex::Half, pi}));
            append_cell(row, sum_gdof_value(p, {Duplex::Full, pi}));
            row << "\n";
            return row.str();
        });
        for (const auto& r : rows) os << r;
    } else {
        throw UsageError("--which must be fig1 or fig2");
    }
    write_output(out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sum-GDoF of the 2-user interference channel with limited transmitter "
                 "cooperation: bounds, schemes, verification, simulation"};
    app.require_subcommand(1);

    std::string alpha, pi_s = "0", mode_s = "half", split_s, format = "json", out;
    std::string in = "-";
    std::int64_t grain = 0;
    std::string which;

    auto* compute = app.add_subcommand("compute", "evaluate bounds and sum-GDoF");
    compute->add_option("--alpha", alpha, "a11,a22,a12,a21")->required();
    compute->add_option("--pi", pi_s, "total cooperation GDoF");
    compute->add_option("--mode", mode_s, "half|full");
    compute->add_option("--split", split_s, "p01,p02 directional budgets");
    compute->add_option("--format", format, "json|csv");
    compute->add_option("--out", out, "output path (default stdout)");

    auto* synth = app.add_subcommand("synth", "synthesize an achievable scheme");
    synth->add_option("--alpha", alpha, "a11,a22,a12,a21")->required();
    synth->add_option("--pi", pi_s, "total cooperation GDoF");
    synth->add_option("--mode", mode_s, "half|full");
    synth->add_option("--out", out, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "check a scheme document");
    verify_cmd->add_option("--in", in, "scheme document path or '-'");
    verify_cmd->add_option("--out", out, "report path (default stdout)");

    auto* sim = app.add_subcommand("sim", "run a scheme on the deterministic channel");
    sim->add_option("--in", in, "scheme document path or '-'");
    sim->add_option("--grain", grain, "digits per unit exponent (default: exact lcm)");
    sim->add_option("--out", out, "result path (default stdout)");

    auto* figures = app.add_subcommand("figures", "emit figure data as CSV");
    figures->add_option("--which", which, "fig1|fig2")->required();
    figures->add_option("--out", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(alpha, pi_s, mode_s, split_s, format, out);
        if (synth->parsed()) return cmd_synth(alpha, pi_s, mode_s, out);
        if (verify_cmd->parsed()) return cmd_verify(in, out);
        if (sim->parsed()) return cmd_sim(in, grain, out);
        if (figures->parsed()) return cmd_figures(which, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DocumentError& e) {
        std::cerr << "document error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
