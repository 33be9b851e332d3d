// nevmaj: constructions, evaluation, majorant sweeps and verification suites.
//
// Every run writes manifest.ini into --out; `nevmaj --config DIR/manifest.ini --out OTHER` repeats it.
// Exit codes: 0 success, 1 verification failure, 2 input or parameter error, 3 solver failure.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nevmaj/calibration.hpp"
#include "nevmaj/constants.hpp"
#include "nevmaj/constructions.hpp"
#include "nevmaj/harmonic.hpp"
#include "nevmaj/io.hpp"
#include "nevmaj/majorant.hpp"
#include "nevmaj/suites.hpp"

using namespace nevmaj;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kSolverFailure = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string command;
    std::string target;  // gen kind, eval quantity or verify suite
    std::string out = ".";
    std::uint64_t seed = 0;
    int depth = 0;       // 0 selects the command default
    int per_square = 0;  // 0 selects the command default

    std::string zeros;         // ZeroSet JSON file
    std::string zeros_single;  // "re" or "re,im": one simple zero
    std::string points;        // "re,im[,mult];..." inline zeros
    std::string points_file;   // eval: explicit point list
    std::string h_const;
    std::string h_atoms;  // "theta:mass;..."
    std::string h_measure;

    // majorant
    std::string depths = "6,8,10,12";
    double filter_scale = 1.0;
    int grid_n = 256;
    bool timing = false;

    // gen thm5b
    double eta0 = 1.0;
    double eta = 0.5;
    std::int64_t cap = 100000;
    // gen thm5a
    int count = 7;
    std::string h2_const = "1";

    // eval hQ and kernel
    double theta = 0.0;
    int level = 1;
    std::int64_t index = 0;

    // verify claims
    std::string artifact;
};

// ---------------------------------------------------------------------------------------------
// Parsing helpers

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("cannot read " + what + " from \"" + s + "\"");
    }
}

std::vector<int> parse_depths(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) out.push_back(static_cast<int>(to_double(t, "depth")));
    if (out.empty()) throw InputError("--depths is empty");
    return out;
}

ZeroSet resolve_zeros(const Settings& st, bool required) {
    ZeroSet zs;
    if (!st.zeros.empty()) zs.append(io::zero_set_from_json(io::read_file(st.zeros)));
    if (!st.zeros_single.empty()) {
        const auto parts = split(st.zeros_single, ',');
        if (parts.empty() || parts.size() > 2) throw InputError("--zeros-single takes re or re,im");
        zs.add(DiskPoint(to_double(parts[0], "zero"), parts.size() > 1 ? to_double(parts[1], "zero") : 0.0));
    }
    for (const auto& p : split(st.points, ';')) {
        const auto parts = split(p, ',');
        if (parts.size() < 2 || parts.size() > 3) throw InputError("--points entries are re,im or re,im,mult");
        const double mult = parts.size() == 3 ? to_double(parts[2], "multiplicity") : 1.0;
        if (mult < 1.0 || mult != std::floor(mult)) throw InputError("multiplicities must be integers >= 1");
        zs.add(DiskPoint(to_double(parts[0], "zero"), to_double(parts[1], "zero")), static_cast<std::int64_t>(mult));
    }
    if (required && zs.empty()) throw InputError("no zeros given (use --zeros, --zeros-single or --points)");
    return zs;
}

HarmonicFn resolve_h(const Settings& st, const HarmonicFn& fallback) {
    if (st.h_const.empty() && st.h_atoms.empty() && st.h_measure.empty()) return fallback;
    BoundaryMeasure m;
    if (!st.h_measure.empty()) m.append(io::measure_from_json(io::read_file(st.h_measure)));
    for (const auto& a : split(st.h_atoms, ';')) {
        const auto parts = split(a, ':');
        if (parts.size() != 2) throw InputError("--h-atoms entries are theta:mass");
        m.add_atom(to_double(parts[0], "atom angle"), to_double(parts[1], "atom mass"));
    }
    HarmonicFn h(m);
    if (!st.h_const.empty()) h = h + HarmonicFn::constant(to_double(st.h_const, "--h-const"));
    return h;
}

// ---------------------------------------------------------------------------------------------
// Manifest

class Manifest {
public:
    void add(const std::string& key, const std::string& value) { entries_.push_back({key, "\"" + value + "\""}); }
    void add(const std::string& key, double value) { entries_.push_back({key, io::format_double(value)}); }
    void add(const std::string& key, std::int64_t value) { entries_.push_back({key, std::to_string(value)}); }
    void add(const std::string& key, int value) { entries_.push_back({key, std::to_string(value)}); }
    void add(const std::string& key, bool value) { entries_.push_back({key, value ? "true" : "false"}); }

    std::string str() const {
        std::string s = "# nevmaj run manifest; rerun with: nevmaj --config manifest.ini --out DIR\n";
        for (const auto& [k, v] : entries_) s += k + " = " + v + "\n";
        return s;
    }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

void add_h(Manifest& m, const Settings& st) {
    m.add("h-const", st.h_const);
    m.add("h-atoms", st.h_atoms);
    m.add("h-measure", st.h_measure);
}

void add_zeros(Manifest& m, const Settings& st) {
    m.add("zeros", st.zeros);
    m.add("zeros-single", st.zeros_single);
    m.add("points", st.points);
}

Manifest base_manifest(const Settings& st) {
    Manifest m;
    m.add("command", st.command);
    m.add("target", st.target);
    m.add("seed", static_cast<std::int64_t>(st.seed));
    m.add("depth", st.depth);
    m.add("per-square", st.per_square);
    return m;
}

struct Output {
    fs::path dir;
    void write(const std::string& name, const std::string& content) const { io::write_file_atomic(dir / name, content); }
};

Output open_out(const Settings& st) {
    std::error_code ec;
    fs::create_directories(st.out, ec);
    if (ec) throw InputError("cannot create output directory " + st.out + ": " + ec.message());
    return {st.out};
}

std::string csv_join(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s + "\n";
}

// ---------------------------------------------------------------------------------------------
// gen

Thm5bParams thm5b_params(const Settings& st) {
    Thm5bParams p;
    p.h = resolve_h(st, HarmonicFn::poisson_atom(0.0, 1.0));
    p.eta0 = st.eta0;
    p.eta = st.eta;
    p.max_depth = st.depth;
    p.cap = st.cap;
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return p;
}

int cmd_gen(Settings st) {
    Manifest m = base_manifest(st);
    if (st.target == "family") {
        const auto zs = resolve_zeros(st, true);
        std::vector<DiskPoint> pts;
        std::vector<std::int64_t> mults;
        for (const auto& z : zs.zeros()) {
            pts.push_back(z.point);
            mults.push_back(z.mult);
        }
        const auto fam = family_blaschke(pts, mults);
        add_zeros(m, st);
        const auto out = open_out(st);
        out.write("manifest.ini", m.str());
        out.write("zeros.json", io::zero_set_to_json(fam.zeros));
        nlohmann::ordered_json info{{"separation", fam.separation},
                                    {"disk_radius", fam.disk_radius},
                                    {"disjoint", fam.disjoint},
                                    {"blaschke_sum", blaschke_sum(fam.zeros)}};
        out.write("family.json", info.dump(1) + "\n");
        std::printf("family: %zu zeros, separation %s, disks %s\n", fam.zeros.size(),
                    io::format_double(fam.separation).c_str(), fam.disjoint ? "disjoint" : "overlap");
        return kOk;
    }
    if (st.target == "thm2") {
        if (st.depth == 0) st.depth = 24;
        m = base_manifest(st);
        ZeroSet zs = resolve_zeros(st, false);
        if (zs.empty())
            for (int j = 1; j <= st.depth; ++j) zs.add(DiskPoint(1.0 - std::ldexp(1.0, -j)));
        const auto t2 = thm2_weights(zs, st.depth);
        add_zeros(m, st);
        const auto out = open_out(st);
        out.write("manifest.ini", m.str());
        out.write("zeros.json", io::zero_set_to_json(zs));
        out.write("measure.json", io::measure_to_json(t2.lemma3.h.measure()));
        std::string w = "level,index,m,tail,weight,bound,sup\n";
        for (std::size_t j = 0; j < t2.squares.size(); ++j) {
            w += csv_join({std::to_string(t2.squares[j].level), std::to_string(t2.squares[j].index),
                           std::to_string(t2.m[j]), io::format_double(t2.tail[j]), io::format_double(t2.weights[j]),
                           io::format_double(t2.bounds[j]), io::format_double(t2.lemma3.final_sups[j])});
        }
        out.write("weights.csv", w);
        std::string s = "step,level,index,coefficient,threshold_r,kernel_bound,partial_constant,worst_slack,sup\n";
        for (std::size_t i = 0; i < t2.lemma3.steps.size(); ++i) {
            const auto& step = t2.lemma3.steps[i];
            const auto& q = t2.squares[step.square];
            s += csv_join({std::to_string(i + 1), std::to_string(q.level), std::to_string(q.index),
                           io::format_double(step.coefficient), io::format_double(step.threshold_r),
                           io::format_double(step.kernel_bound), io::format_double(step.partial_constant),
                           io::format_double(step.worst_slack), io::format_double(t2.lemma3.selected_sups[i])});
        }
        out.write("selections.csv", s);
        std::printf("thm2: %zu squares, %zu selections (%s), bound check %s, sups increase %s\n", t2.squares.size(),
                    t2.lemma3.steps.size(), t2.lemma3.stop_reason.c_str(), t2.bound_check ? "pass" : "fail",
                    t2.sups_increase ? "yes" : "no");
        return kOk;
    }
    if (st.target == "thm5a") {
        const auto h1 = resolve_h(st, HarmonicFn::poisson_atom(0.0, 1.0));
        const auto h2 = HarmonicFn::constant(to_double(st.h2_const, "--h2-const"));
        const auto built = thm5a_build(h1, h2, st.count);
        add_h(m, st);
        m.add("h2-const", st.h2_const);
        m.add("count", st.count);
        const auto out = open_out(st);
        out.write("manifest.ini", m.str());
        out.write("zeros.json", io::zero_set_to_json(built.zeros));
        out.write("log.jsonl", io::construction_log_to_jsonl(built.log));
        std::printf("thm5a: %zu zeros along theta = %s\n", built.zeros.size(), io::format_double(built.theta).c_str());
        return kOk;
    }
    if (st.target == "thm5b") {
        if (st.depth == 0) st.depth = 14;
        m = base_manifest(st);
        const auto p = thm5b_params(st);
        const auto built = thm5b_build(p);
        add_h(m, st);
        m.add("eta0", st.eta0);
        m.add("eta", st.eta);
        m.add("cap", st.cap);
        const auto out = open_out(st);
        out.write("manifest.ini", m.str());
        out.write("zeros.json", io::zero_set_to_json(built.zeros));
        out.write("log.jsonl", io::construction_log_to_jsonl(built.log));
        std::printf("thm5b: gamma %s, %zu accepted squares, %zu zeros\n", io::format_double(built.gamma).c_str(),
                    built.accepted().size(), built.zeros.size());
        return kOk;
    }
    throw InputError("unknown gen kind \"" + st.target + "\" (family, thm2, thm5a, thm5b)");
}

// ---------------------------------------------------------------------------------------------
// eval

std::vector<DiskPoint> eval_points(const Settings& st) {
    if (!st.points_file.empty()) return io::points_from_json(io::read_file(st.points_file));
    std::vector<DiskPoint> pts{DiskPoint(0.0)};
    for (int k = 1; k <= st.depth; ++k) {
        const std::int64_t n = std::int64_t{1} << k;
        for (std::int64_t j = 0; j < n; ++j)
            for (const auto& z : square_samples(WhitneySquare{k, j}, st.per_square)) pts.push_back(z);
    }
    return pts;
}

int cmd_eval(Settings st) {
    if (st.depth == 0) st.depth = 6;
    if (st.per_square == 0) st.per_square = 8;
    Manifest m = base_manifest(st);
    m.add("points-file", st.points_file);
    const auto pts = eval_points(st);
    std::vector<double> values;
    values.reserve(pts.size());
    if (st.target == "logB" || st.target == "HLambda") {
        const auto zs = resolve_zeros(st, false);
        add_zeros(m, st);
        for (const auto& z : pts) values.push_back(st.target == "logB" ? log_modulus(zs, z) : h_lambda(zs, z));
    } else if (st.target == "hQ") {
        const WhitneySquare q{st.level, st.index};
        if (!q.valid()) throw InputError("--level/--index do not name a Whitney square");
        m.add("level", st.level);
        m.add("index", st.index);
        for (const auto& z : pts) values.push_back(h_square(q, z));
    } else if (st.target == "kernel") {
        m.add("theta", st.theta);
        for (const auto& z : pts) values.push_back(poisson_kernel(z, st.theta));
    } else {
        throw InputError("unknown eval quantity \"" + st.target + "\" (logB, HLambda, hQ, kernel)");
    }
    const auto out = open_out(st);
    out.write("manifest.ini", m.str());
    out.write("eval.csv", io::eval_to_csv(pts, values));
    std::printf("eval %s: %zu points\n", st.target.c_str(), pts.size());
    return kOk;
}

// ---------------------------------------------------------------------------------------------
// majorant

int cmd_majorant(Settings st) {
    if (st.per_square == 0) st.per_square = 16;
    Manifest m = base_manifest(st);
    const auto zs = resolve_zeros(st, false);
    if (st.h_const.empty() && st.h_atoms.empty() && st.h_measure.empty())
        throw InputError("majorant needs H (--h-const, --h-atoms or --h-measure)");
    const auto h = resolve_h(st, HarmonicFn());
    const auto depths = parse_depths(st.depths);
    add_zeros(m, st);
    add_h(m, st);
    m.add("depths", st.depths);
    m.add("filter-scale", st.filter_scale);
    m.add("grid-n", st.grid_n);
    m.add("timing", st.timing);

    SweepOptions so;
    so.sample.per_square = st.per_square;
    so.sample.filter_scale = st.filter_scale;
    so.sample.seed = st.seed;
    so.solver.grid_n = st.grid_n;
    so.timing = st.timing;
    SweepRecord rec;
    try {
        rec = majorant_diagnostic(zs, h, depths, so);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    for (const auto& r : rec.rows)
        std::fprintf(stderr, "depth %d: %zu points, mass %s, %s\n", r.depth, r.count,
                     io::format_double(r.mass).c_str(), to_string(r.status).c_str());
    const auto out = open_out(st);
    out.write("manifest.ini", m.str());
    out.write("sweep.csv", io::sweep_to_csv(rec));
    const std::string line = to_string(rec.classification) + " growth_exponent=" +
                             io::format_double(rec.growth_exponent) + "\n";
    out.write("classification.txt", line);
    std::printf("%s", line.c_str());
    if (!rec.ok()) throw SolverFailure("the LP solver did not reach an optimum at some depth");
    return kOk;
}

// ---------------------------------------------------------------------------------------------
// verify

std::map<std::string, std::string> read_manifest(const fs::path& path);

int cmd_verify(Settings st) {
    Manifest m = base_manifest(st);
    SuiteReport rep;
    const std::uint64_t s = st.seed;
    if (st.target == "geometry") {
        rep = geometry_suite(1 + s);
    } else if (st.target == "harmonic") {
        rep = harmonic_suite(2 + s);
    } else if (st.target == "lp") {
        rep = lp_suite(3 + s);
    } else if (st.target == "lemma1") {
        rep = lemma1_suite(100 + s);
    } else if (st.target == "lemma3") {
        rep = lemma3_suite();
    } else if (st.target == "thm3") {
        rep = thm3_suite(s);
    } else if (st.target == "thm4") {
        if (st.depth == 0) st.depth = 10;
        m = base_manifest(st);
        rep = thm4_suite(st.depth);
    } else if (st.target == "claims") {
        if (st.artifact.empty()) throw InputError("verify claims needs --artifact DIR from gen thm5b");
        m.add("artifact", st.artifact);
        const auto cfg = read_manifest(fs::path(st.artifact) / "manifest.ini");
        Settings gen;
        gen.depth = std::stoi(cfg.at("depth"));
        gen.eta0 = std::stod(cfg.at("eta0"));
        gen.eta = std::stod(cfg.at("eta"));
        gen.cap = std::stoll(cfg.at("cap"));
        gen.h_const = cfg.at("h-const");
        gen.h_atoms = cfg.at("h-atoms");
        gen.h_measure = cfg.at("h-measure");
        const auto p = thm5b_params(gen);
        const auto built = thm5b_build(p);
        const auto stored = io::read_file(fs::path(st.artifact) / "zeros.json");
        if (stored != io::zero_set_to_json(built.zeros))
            throw InputError("the artifact zeros do not match a rebuild from its manifest");
        rep = claims_suite(built, p);
    } else {
        throw InputError("unknown suite \"" + st.target +
                         "\" (geometry, harmonic, lp, lemma1, lemma3, thm3, thm4, claims)");
    }
    nlohmann::ordered_json props = nlohmann::ordered_json::array();
    for (const auto& p : rep.properties) {
        props.push_back({{"name", p.name},
                         {"measured", std::isfinite(p.measured) ? nlohmann::ordered_json(p.measured)
                                                               : nlohmann::ordered_json(io::format_double(p.measured))},
                         {"relation", p.relation},
                         {"threshold", p.threshold},
                         {"pass", p.pass}});
    }
    const nlohmann::ordered_json doc{{"suite", rep.suite}, {"pass", rep.pass()}, {"properties", props}};
    const auto out = open_out(st);
    out.write("manifest.ini", m.str());
    out.write("report.json", doc.dump(1) + "\n");
    for (const auto& p : rep.properties)
        std::printf("%s %s: %s\n", p.pass ? "PASS" : "FAIL", p.name.c_str(), io::format_double(p.measured).c_str());
    if (!rep.pass()) {
        std::fprintf(stderr, "verify %s failed: %s\n", rep.suite.c_str(), rep.failures().c_str());
        return kVerifyFailed;
    }
    return kOk;
}

// ---------------------------------------------------------------------------------------------
// Config files

std::map<std::string, std::string> read_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read config " + path.string());
    std::map<std::string, std::string> out;
    try {
        for (const auto& item : CLI::ConfigINI().from_config(in)) {
            if (!item.parents.empty()) throw InputError("config files are flat; sections are not allowed");
            std::string v;
            for (std::size_t i = 0; i < item.inputs.size(); ++i) v += (i ? "," : "") + item.inputs[i];
            out[item.name] = v;
        }
    } catch (const CLI::Error& e) {
        throw InputError(std::string("bad config ") + path.string() + ": " + e.what());
    }
    return out;
}

const std::set<std::string> kCommands{"gen", "eval", "majorant", "verify"};

// Merges a --config file into argv: its command and target are used when the command line has no
// subcommand, and its keys fill in every option the command line leaves unset.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::string config;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (config.empty()) return args;
    auto cfg = read_manifest(config);
    std::set<std::string> given;
    for (const auto& a : rest) {
        if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos
                                                                                               : a.find('=') - 2));
    }
    // The command and its positional target, from the command line or else from the file.
    std::size_t head = 0;
    std::vector<std::string> merged;
    if (!rest.empty() && kCommands.count(rest.front())) {
        head = rest.size() > 1 && rest[1].rfind("--", 0) != 0 ? 2 : 1;
        merged.assign(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(head));
    } else {
        if (!cfg.count("command") || !kCommands.count(cfg["command"])) throw InputError("config has no valid command");
        merged.push_back(cfg["command"]);
        if (cfg.count("target") && !cfg["target"].empty()) merged.push_back(cfg["target"]);
    }
    for (const auto& [k, v] : cfg) {
        if (k == "command" || k == "target" || given.count(k) || v.empty()) continue;
        merged.push_back("--" + k + "=" + v);
    }
    merged.insert(merged.end(), rest.begin() + static_cast<std::ptrdiff_t>(head), rest.end());
    return merged;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blaschke products, harmonic majorants and the constructions around them"};
    app.require_subcommand(1);
    Settings st;
    app.add_option("--out", st.out, "output directory");
    app.add_option("--seed", st.seed, "seed for the sampling shift and the verify suites");
    app.add_option("--depth", st.depth, "Whitney depth (default depends on the command)");
    app.add_option("--per-square", st.per_square, "samples per Whitney square (default depends on the command)");
    app.add_option("--config", "flat key = value file, for example a manifest.ini");

    auto add_zero_inputs = [&](CLI::App* c) {
        c->add_option("--zeros", st.zeros, "ZeroSet JSON file");
        c->add_option("--zeros-single", st.zeros_single, "one simple zero: re or re,im");
        c->add_option("--points", st.points, "inline zeros: re,im[,mult];...");
    };
    auto add_h_inputs = [&](CLI::App* c) {
        c->add_option("--h-const", st.h_const, "constant part of H");
        c->add_option("--h-atoms", st.h_atoms, "Poisson atoms of H: theta:mass;...");
        c->add_option("--h-measure", st.h_measure, "boundary measure JSON of H");
    };

    auto* gen = app.add_subcommand("gen", "build a zero set: family, thm2, thm5a or thm5b");
    gen->add_option("kind", st.target)->required();
    add_zero_inputs(gen);
    add_h_inputs(gen);
    gen->add_option("--eta0", st.eta0);
    gen->add_option("--eta", st.eta);
    gen->add_option("--cap", st.cap, "thm5b: packed points per square");
    gen->add_option("--count", st.count, "thm5a: number of points");
    gen->add_option("--h2-const", st.h2_const, "thm5a: constant H2");

    auto* eval = app.add_subcommand("eval", "evaluate logB, HLambda, hQ or kernel on a grid");
    eval->add_option("what", st.target)->required();
    add_zero_inputs(eval);
    eval->add_option("--points-file", st.points_file, "JSON {\"points\": [...]} instead of the Whitney grid");
    eval->add_option("--theta", st.theta, "kernel: boundary angle");
    eval->add_option("--level", st.level, "hQ: square level");
    eval->add_option("--index", st.index, "hQ: square index");

    auto* maj = app.add_subcommand("majorant", "minimal majorant mass per depth and its classification");
    add_zero_inputs(maj);
    add_h_inputs(maj);
    maj->add_option("--depths", st.depths, "increasing depths, comma separated");
    maj->add_option("--filter-scale", st.filter_scale, "keep rho(z, Lambda) >= exp(-s H(z))");
    maj->add_option("--grid-n", st.grid_n, "uniform boundary grid size");
    maj->add_flag("--timing", st.timing, "record wall-clock times in sweep.csv");

    auto* ver = app.add_subcommand("verify", "run a property suite");
    ver->add_option("suite", st.target)->required();
    ver->add_option("--artifact", st.artifact, "claims: output directory of gen thm5b");

    for (auto* c : {gen, eval, maj, ver}) c->fallthrough();

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = merge_config(args);
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (gen->parsed()) st.command = "gen";
        if (eval->parsed()) st.command = "eval";
        if (maj->parsed()) st.command = "majorant";
        if (ver->parsed()) st.command = "verify";
        if (st.depth < 0 || st.per_square < 0) throw InputError("--depth and --per-square must be >= 0");
        if (st.command == "gen") return cmd_gen(st);
        if (st.command == "eval") return cmd_eval(st);
        if (st.command == "majorant") return cmd_majorant(st);
        return cmd_verify(st);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    } catch (const io::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    } catch (const SolverFailure& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return kSolverFailure;
    } catch (const std::exception& e) {
        // Generators report impossible requests as runtime errors; everything else is a solver problem.
        std::fprintf(stderr, "error: %s\n", e.what());
        return st.command == "gen" ? kInputError : kSolverFailure;
    }
}
