// One line per acceptance criterion: "[PASS|FAIL] <n> <name>: <details> (<seconds>s)".
// Usage: nevmaj_acceptance [--cli PATH] [--only N[,N...]] [--workdir DIR]
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nevmaj/constants.hpp"
#include "nevmaj/constructions.hpp"
#include "nevmaj/harmonic.hpp"
#include "nevmaj/hypgeo.hpp"
#include "nevmaj/io.hpp"
#include "nevmaj/majorant.hpp"
#include "nevmaj/suites.hpp"
#include "nevmaj/transfer.hpp"

using namespace nevmaj;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string join_masses(const SweepRecord& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.rows.size(); ++i) s += (i ? ", " : "") + fmt(r.rows[i].mass);
    return s + "]";
}

// Shared experiment settings; the CLI defaults mirror these so the determinism check reruns them.
constexpr int kSweepPerSquare = 16;
constexpr int kThm2Depth = 24;

Outcome from_suite(const SuiteReport& r) { return {r.pass(), r.summary()}; }

// ---------------------------------------------------------------------------------------------
Outcome single_point() {
    ConstraintSet cs;
    cs.add(DiskPoint(0.5), 1.0);
    const auto rep = min_mass(cs);
    const double err = std::abs(rep.optimal_mass - 1.0 / 3.0);
    return {rep.ok() && err <= 1e-9, "mass " + io::format_double(rep.optimal_mass) + ", |mass - 1/3| = " + fmt(err)};
}

// ---------------------------------------------------------------------------------------------
ZeroSet radial_geometric(int depth) {
    ZeroSet zs;
    for (int j = 1; j <= depth; ++j) zs.add(DiskPoint(1.0 - std::ldexp(1.0, -j)));
    return zs;
}

Outcome theorem2() {
    // Each Lemma 3 selection sits 4 to 6 levels below the previous one, so depth 24 is the smallest
    // that shows four selections.
    const auto zeros = radial_geometric(kThm2Depth);
    const auto t2 = thm2_weights(zeros, kThm2Depth);
    SweepOptions so;
    so.sample.per_square = kSweepPerSquare;
    const auto rec = majorant_diagnostic(zeros, t2.lemma3.h, {6, 8, 10, 12}, so);
    bool grow = t2.sups_increase;
    for (std::size_t i = 0; i < t2.lemma3.steps.size(); ++i)
        if (t2.lemma3.selected_sups[i] < constants::kHq * t2.lemma3.steps[i].coefficient) grow = false;
    const bool pass = grow && t2.lemma3.steps.size() >= 3 && rec.ok() && rec.classification == Classification::bounded;
    std::string sups = "[";
    for (std::size_t i = 0; i < t2.lemma3.selected_sups.size(); ++i) sups += (i ? ", " : "") + fmt(t2.lemma3.selected_sups[i]);
    return {pass, "selected sups " + sups + "], masses " + join_masses(rec) + " -> " + to_string(rec.classification)};
}

// ---------------------------------------------------------------------------------------------
Thm5bParams thm5b_params() {
    Thm5bParams p;
    p.h = HarmonicFn::poisson_atom(0.0, 1.0);
    p.eta0 = 1.0;
    p.eta = 0.5;
    p.max_depth = 14;
    return p;
}

Outcome theorem5b() {
    const auto params = thm5b_params();
    const auto built = thm5b_build(params);
    const auto acc = built.accepted();
    SweepOptions s1;
    s1.sample.per_square = kSweepPerSquare;
    SweepOptions s2 = s1;
    s2.sample.filter_scale = 1.0 + params.eta0;
    const std::vector<int> depths{6, 8, 10, 12, 14};
    const auto r1 = majorant_diagnostic(built.zeros, params.h, depths, s1);
    const auto r2 = majorant_diagnostic(built.zeros, params.h, depths, s2);
    const auto claims = claims_suite(built, params);
    const bool claims_ok = claims.pass();
    const bool all = r1.ok() && r2.ok() && r1.classification == Classification::bounded &&
                     r2.classification == Classification::growth && claims_ok;
    std::string lv = "[";
    for (std::size_t i = 0; i < acc.size(); ++i) lv += (i ? "," : "") + std::to_string(acc[i]->k);
    return {all, "gamma " + fmt(built.gamma) + ", accepted levels " + lv + "], s=1 masses " + join_masses(r1) + " -> " +
                     to_string(r1.classification) + ", s=2 masses " + join_masses(r2) + " -> " +
                     to_string(r2.classification) + ", claims " + (claims_ok ? "pass" : "fail: " + claims.failures())};
}

// ---------------------------------------------------------------------------------------------
Outcome theorem5a() {
    const auto h1 = HarmonicFn::poisson_atom(0.0, 1.0);
    const auto h2 = HarmonicFn::constant(1.0);
    const auto built = thm5a_build(h1, h2, 7);
    SweepOptions so;
    so.sample.per_square = kSweepPerSquare;
    const std::vector<int> depths{6, 8, 10, 12};
    const auto r1 = wep_gap(built.zeros, h1, depths, so);
    const auto r2 = wep_gap(built.zeros, h2, depths, so);
    const bool pass = r1.ok() && r2.ok() && r1.classification == Classification::growth &&
                      r2.classification == Classification::bounded;
    return {pass, std::to_string(built.zeros.size()) + " zeros, filter H1 masses " + join_masses(r1) + " -> " +
                      to_string(r1.classification) + ", filter H2 masses " + join_masses(r2) + " -> " +
                      to_string(r2.classification)};
}

// ---------------------------------------------------------------------------------------------
std::string cli_path;
fs::path workdir = "acceptance_runs";

int run(const std::string& cmd) {
    const int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

bool same_tree(const fs::path& a, const fs::path& b, std::string& why) {
    std::set<std::string> names;
    for (const auto& e : fs::directory_iterator(a)) names.insert(e.path().filename().string());
    for (const auto& e : fs::directory_iterator(b)) names.insert(e.path().filename().string());
    for (const auto& n : names) {
        if (n == "manifest.ini") continue;
        if (!fs::exists(a / n) || !fs::exists(b / n)) {
            why = n + " missing";
            return false;
        }
        if (io::read_file(a / n) != io::read_file(b / n)) {
            why = n + " differs";
            return false;
        }
    }
    return true;
}

// One CLI job per criterion; "{W}" expands to the absolute work directory so later jobs can read
// the zero sets written by earlier ones.
Outcome determinism() {
    if (cli_path.empty()) return {false, "no --cli given"};
    const std::string ps = " --per-square " + std::to_string(kSweepPerSquare);
    const std::vector<std::pair<std::string, std::string>> jobs{
        {"verify_geometry", "verify geometry"},
        {"verify_harmonic", "verify harmonic"},
        {"verify_lp", "verify lp"},
        {"majorant_single", "majorant --zeros-single 0.5 --h-const 0.6931471805599453 --depths 4,6,8"},
        {"verify_lemma1", "verify lemma1"},
        {"verify_lemma3", "verify lemma3"},
        {"gen_thm2", "gen thm2 --depth " + std::to_string(kThm2Depth)},
        {"majorant_thm2", "majorant --zeros {W}/gen_thm2_a/zeros.json --h-measure {W}/gen_thm2_a/measure.json" + ps},
        {"gen_thm5b", "gen thm5b --depth 14"},
        {"majorant_thm5b_s1", "majorant --zeros {W}/gen_thm5b_a/zeros.json --h-atoms 0:1 --depths 6,8,10,12,14" + ps},
        {"majorant_thm5b_s2",
         "majorant --zeros {W}/gen_thm5b_a/zeros.json --h-atoms 0:1 --depths 6,8,10,12,14 --filter-scale 2" + ps},
        {"verify_claims", "verify claims --artifact {W}/gen_thm5b_a"},
        {"gen_thm5a", "gen thm5a --count 7"},
        {"majorant_thm5a_h1", "majorant --zeros {W}/gen_thm5a_a/zeros.json --h-atoms 0:1" + ps},
        {"majorant_thm5a_h2", "majorant --zeros {W}/gen_thm5a_a/zeros.json --h-const 1" + ps},
        {"verify_thm3", "verify thm3"},
        {"verify_thm4", "verify thm4 --depth 10"},
        {"eval_logb", "eval logB --zeros {W}/gen_thm2_a/zeros.json --depth 6 --per-square 8"},
    };
    fs::create_directories(workdir);
    const std::string w = fs::absolute(workdir).string();
    std::size_t ok = 0;
    std::string failures;
    for (const auto& [name, raw] : jobs) {
        std::string args = raw;
        for (std::size_t at; (at = args.find("{W}")) != std::string::npos;) args.replace(at, 3, w);
        const auto a = workdir / (name + "_a"), b = workdir / (name + "_b");
        fs::remove_all(a);
        fs::remove_all(b);
        const int rc1 = run(cli_path + " " + args + " --out " + a.string());
        const int rc2 = run(cli_path + " --config " + (a / "manifest.ini").string() + " --out " + b.string());
        std::string why;
        if (rc1 != rc2 || rc1 > 1 || !fs::exists(a / "manifest.ini")) {
            failures += " " + name + "(exit " + std::to_string(rc1) + "/" + std::to_string(rc2) + ")";
        } else if (!same_tree(a, b, why)) {
            failures += " " + name + "(" + why + ")";
        } else {
            ++ok;
        }
    }
    return {ok == jobs.size(), std::to_string(ok) + "/" + std::to_string(jobs.size()) +
                                   " manifest reruns byte-identical" + (failures.empty() ? "" : ";" + failures)};
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc) {
            cli_path = argv[++i];
        } else if (a == "--workdir" && i + 1 < argc) {
            workdir = argv[++i];
        } else if (a == "--only" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) only.insert(std::stoi(tok));
        } else {
            std::fprintf(stderr, "usage: %s [--cli PATH] [--only N,..] [--workdir DIR]\n", argv[0]);
            return 2;
        }
    }
    const std::vector<Criterion> criteria{
        {1, "geometry suite", 5, [] { return from_suite(geometry_suite()); }},
        {2, "harmonic suite", 60, [] { return from_suite(harmonic_suite()); }},
        {3, "LP suite", 30, [] { return from_suite(lp_suite()); }},
        {4, "single-point optimum", 1, single_point},
        {5, "Lemma 1 at scale", 120, [] { return from_suite(lemma1_suite()); }},
        {6, "Lemma 3 certificate", 120, [] { return from_suite(lemma3_suite()); }},
        {7, "Theorem 2(a) realized", 300, theorem2},
        {8, "Theorem 5(b) dichotomy", 900, theorem5b},
        {9, "Theorem 5(a) realized", 300, theorem5a},
        {10, "Theorem 3 transfer", 120, [] { return from_suite(thm3_suite()); }},
        {11, "Theorem 4 majorant", 120, [] { return from_suite(thm4_suite()); }},
        {12, "determinism", 1e9, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.budget_s;
        const bool pass = o.pass && in_time;
        if (!pass) ++failed;
        std::printf("[%s] %2d %s: %s (%.1fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                    in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
