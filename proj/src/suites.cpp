#include "nevmaj/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "nevmaj/calibration.hpp"
#include "nevmaj/constants.hpp"
#include "nevmaj/harmonic.hpp"
#include "nevmaj/hypgeo.hpp"
#include "nevmaj/majorant.hpp"
#include "nevmaj/oracles.hpp"
#include "nevmaj/transfer.hpp"

namespace nevmaj {

namespace {

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

DiskPoint random_point(std::mt19937_64& rng, double rmax) {
    const double r = rmax * std::sqrt(uniform(rng));
    return DiskPoint::polar(r, kTwoPi * uniform(rng));
}

Property at_most(std::string name, double measured, double threshold) {
    return {std::move(name), measured, "<=", threshold, measured <= threshold};
}

Property at_least(std::string name, double measured, double threshold) {
    return {std::move(name), measured, ">=", threshold, measured >= threshold};
}

Property finite(std::string name, double measured) {
    return {std::move(name), measured, "finite", 0.0, std::isfinite(measured)};
}

ConstraintSet random_constraints(std::mt19937_64& rng, int count) {
    ConstraintSet cs;
    for (int i = 0; i < count; ++i) cs.add(random_point(rng, 0.97), 0.1 + 3.0 * uniform(rng));
    return cs;
}

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const Property& p) { return p.pass; });
}

std::string SuiteReport::failures() const {
    std::string s;
    for (const auto& p : properties)
        if (!p.pass) s += (s.empty() ? "" : ", ") + p.name;
    return s;
}

std::string SuiteReport::summary() const {
    std::string s;
    char buf[160];
    for (const auto& p : properties) {
        if (p.relation == "finite")
            std::snprintf(buf, sizeof buf, "%s%s %.6g", s.empty() ? "" : ", ", p.name.c_str(), p.measured);
        else
            std::snprintf(buf, sizeof buf, "%s%s %.6g %s %.6g", s.empty() ? "" : ", ", p.name.c_str(), p.measured,
                          p.relation.c_str(), p.threshold);
        s += buf;
    }
    return s;
}

SuiteReport geometry_suite(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst_inv = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto a = random_point(rng, 0.99), z = random_point(rng, 0.99), w = random_point(rng, 0.99);
        worst_inv = std::max(worst_inv, std::abs(pseudo_dist(mobius(a, z), mobius(a, w)) - pseudo_dist(z, w)));
    }
    int tiling_fail = 0;
    for (int i = 0; i < 10000; ++i) {
        const double gap = 0.5 * std::pow(2.0, -20.0 * uniform(rng));
        const auto z = DiskPoint::polar(1.0 - gap, kTwoPi * uniform(rng));
        const auto q = whitney_index(z);
        if (!q || !q->contains(z)) {
            ++tiling_fail;
            continue;
        }
        const std::int64_t n = std::int64_t{1} << q->level;
        for (std::int64_t d : {std::int64_t{-1}, std::int64_t{1}}) {
            const WhitneySquare other{q->level, ((q->index + d) % n + n) % n};
            if (other != *q && other.contains(z)) ++tiling_fail;
        }
        const double t = z.arg();
        if (!(z.gap() >= q->side() && z.gap() < 2.0 * q->side() && t >= q->theta_lo() && t < q->theta_hi()))
            ++tiling_fail;
    }
    double worst_disk = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto z0 = random_point(rng, 0.95);
        const double t = 0.05 + 0.9 * uniform(rng);
        const auto disk = pseudo_disk(z0, t);
        for (const auto& p : oracle::pseudo_circle(z0, t, 20))
            worst_disk = std::max(worst_disk, std::abs(std::abs(p.value() - disk.center) - disk.radius));
    }
    return {"geometry",
            {at_most("mobius_invariance", worst_inv, 1e-12), at_most("tiling_failures", tiling_fail, 0),
             at_most("pseudo_disk_boundary", worst_disk, 1e-12)}};
}

SuiteReport harmonic_suite(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst_q = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto z = random_point(rng, 0.999);
        const double lo = kTwoPi * uniform(rng);
        const double len = kTwoPi * uniform(rng);
        if (len <= 0.0) continue;
        const BoundaryArc arc(lo, lo + len);
        worst_q = std::max(worst_q, std::abs(harmonic_measure(z, arc) - oracle::harmonic_measure_quadrature(z, arc)));
    }
    const auto cal = calibrate_hq(12, 200);
    const double c = constants::kHq;
    double min_inside = 1.0, max_scaled = 0.0, max_value = 0.0, lo4 = 1.0, hi4 = 0.0;
    for (const auto& row : cal.levels) {
        min_inside = std::min(min_inside, row.min_inside);
        max_scaled = std::max(max_scaled, row.max_scaled);
        max_value = std::max(max_value, row.max_value);
        if (row.level >= 4) {
            lo4 = std::min(lo4, row.min_inside);
            hi4 = std::max(hi4, row.min_inside);
        }
    }
    double worst_mv = 0.0;
    for (int i = 0; i < 20; ++i) {
        BoundaryMeasure m;
        for (int a = 0; a < 3; ++a) m.add_atom(kTwoPi * uniform(rng), uniform(rng));
        const double lo = kTwoPi * uniform(rng);
        m.add_arc(BoundaryArc(lo, lo + 0.1 + 3.0 * uniform(rng)), 2.0 * uniform(rng));
        const HarmonicFn h(m);
        for (double r : {0.3, 0.9, 0.99}) {
            double s = 0.0;
            const int n = 1 << 12;
            for (int k = 0; k < n; ++k) s += h(DiskPoint::polar(r, kTwoPi * k / n));
            worst_mv = std::max(worst_mv, std::abs(s / n - h(DiskPoint(0.0))));
        }
    }
    return {"harmonic",
            {at_most("quadrature_agreement", worst_q, 1e-8), at_most("hq_at_most_one", max_value, 1.0),
             at_least("hq_lower_bound_on_square", min_inside, c), at_most("hq_decay_bound", max_scaled, 1.0 / c),
             at_most("hq_level_min_spread", (hi4 - lo4) / lo4, 0.10), at_most("mean_value", worst_mv, 1e-8)}};
}

SuiteReport lp_suite(std::uint64_t seed, int instances) {
    std::mt19937_64 rng(seed);
    int mono_fail = 0, oracle_fail = 0, cert_fail = 0, solver_fail = 0;
    double worst_oracle = 0.0, worst_dual = 0.0;
    auto certify = [&](const ConstraintSet& cs, const SolveReport& rep) {
        if (!rep.ok()) {
            ++solver_fail;
            return;
        }
        const HarmonicFn h(rep.measure);
        double vy = 0.0;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const double v = cs.constraints[i].value;
            if (h(cs.constraints[i].z) - v < -1e-9 * std::max(1.0, v)) ++cert_fail;
            if (rep.dual[i] < 0.0) worst_dual = std::max(worst_dual, -rep.dual[i]);
            vy += rep.dual[i] * v;
        }
        double worst_col = 0.0;
        for (double xi : rep.grid) {
            double s = 0.0;
            for (std::size_t i = 0; i < cs.size(); ++i) s += rep.dual[i] * poisson_kernel(cs.constraints[i].z, xi);
            worst_col = std::max(worst_col, s - 1.0);
        }
        const double gap = std::abs(vy - rep.optimal_mass) / std::max(1.0, rep.optimal_mass);
        worst_dual = std::max({worst_dual, gap, worst_col});
    };
    for (int inst = 0; inst < instances; ++inst) {
        // Nested constraint sets on a common grid.
        const int big = 20 + static_cast<int>(rng() % 60);
        const auto full = random_constraints(rng, big);
        ConstraintSet part;
        for (int i = 0; i < big / 2; ++i) part.constraints.push_back(full.constraints[static_cast<std::size_t>(i)]);
        const auto grid = boundary_grid(full, 64);
        const auto ra = min_mass(part, grid), rb = min_mass(full, grid);
        certify(part, ra);
        certify(full, rb);
        if (ra.optimal_mass > rb.optimal_mass * (1.0 + 1e-12)) ++mono_fail;
        // Nested grids: every other angle of the fine grid.
        std::vector<double> coarse;
        for (std::size_t j = 0; j < grid.size(); j += 2) coarse.push_back(grid[j]);
        const auto rc = min_mass(full, coarse);
        certify(full, rc);
        if (rb.optimal_mass > rc.optimal_mass * (1.0 + 1e-12)) ++mono_fail;
        // Oracle comparison on small instances.
        const int m = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto small = random_constraints(rng, m);
        std::vector<double> g;
        for (int j = 0; j < n; ++j) g.push_back(kTwoPi * uniform(rng));
        std::sort(g.begin(), g.end());
        const auto rs = min_mass(small, g);
        certify(small, rs);
        const double ref = oracle::min_mass_by_vertices(small, g);
        const double err = std::abs(rs.optimal_mass - ref) / std::max(1.0, ref);
        worst_oracle = std::max(worst_oracle, err);
        if (err > 1e-9) ++oracle_fail;
    }
    return {"lp",
            {at_most("monotonicity_failures", mono_fail, 0), at_most("oracle_relative_error", worst_oracle, 1e-9),
             at_most("certificate_failures", cert_fail, 0), at_most("duality_residual", worst_dual, 1e-8),
             at_most("solver_failures", solver_fail, 0)}};
}

SuiteReport lemma1_suite(std::uint64_t seed, int sets) {
    double worst_change = 0.0, worst_ratio = 0.0;
    for (int s = 0; s < sets; ++s) {
        const double r8 = lemma1_ratio(geometric_zero_set(8, seed + static_cast<std::uint64_t>(s)), 8);
        const double r16 = lemma1_ratio(geometric_zero_set(16, seed + static_cast<std::uint64_t>(s)), 16);
        if (!std::isfinite(r8) || !std::isfinite(r16) || r8 <= 0.0) {
            worst_change = std::numeric_limits<double>::infinity();
            worst_ratio = std::numeric_limits<double>::infinity();
            break;
        }
        worst_change = std::max(worst_change, std::abs(r16 - r8) / r8);
        worst_ratio = std::max({worst_ratio, r8, r16});
    }
    return {"lemma1",
            {finite("max_sup_ratio", worst_ratio),
             {"relative_change_8_to_16", worst_change, "<", 0.20, worst_change < 0.20}}};
}

std::pair<std::vector<WhitneySquare>, std::vector<double>> lemma3_input() {
    std::vector<WhitneySquare> sq;
    std::vector<double> m;
    for (int k = 3; k <= 12; ++k) {
        const std::int64_t n = std::int64_t{1} << k;
        for (int a = 0; a < 5; ++a) {
            sq.push_back({k, (n * a) / 5 + (n / 16)});
            m.push_back(std::pow(2.0, 0.5 * k) * (1.0 + 0.1 * a));
        }
    }
    return {sq, m};
}

SuiteReport lemma3_suite() {
    const auto [sq, m] = lemma3_input();
    const auto res = lemma3_build(sq, m);
    double worst_lower = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < res.steps.size(); ++i)
        worst_lower = std::min(worst_lower, res.selected_sups[i] / res.steps[i].coefficient);
    double worst_slack = std::numeric_limits<double>::infinity();
    for (const auto& s : res.steps) worst_slack = std::min(worst_slack, s.worst_slack);
    return {"lemma3",
            {at_least("selections", static_cast<double>(res.steps.size()), 1.0),
             {"partial_sum_certificate", worst_slack, ">=", 0.0, res.certificate_holds() && worst_slack >= 0.0},
             at_least("selected_sup_over_coefficient", worst_lower, constants::kHq)}};
}

SuiteReport thm3_suite(std::uint64_t seed) {
    ZeroSet zeros;
    zeros.add(DiskPoint(0.6, 0.0));
    zeros.add(DiskPoint(-0.3, 0.5));
    const auto h = HarmonicFn::constant(4.0);
    const double c0 = constants::kLemma4C0;
    const auto a = theorem3_transfer_check(zeros, h, 2.0, transfer_samples(zeros, h, 2.0, c0, 250, seed), c0);
    const auto b = theorem3_transfer_check(zeros, h, 2.0, transfer_samples(zeros, h, 2.0, c0, 1000, seed), c0);
    const double change = std::abs(b.max_ratio - a.max_ratio) / a.max_ratio;
    return {"thm3",
            {finite("max_ratio_250", a.max_ratio),
             finite("max_ratio_1000", b.max_ratio),
             at_most("ratio_change", change, 0.25)}};
}

SuiteReport thm4_suite(int depth) {
    std::vector<DiskPoint> pts;
    std::vector<std::int64_t> mult;
    for (int j = 1; j <= 10; ++j) {
        pts.push_back(DiskPoint::polar(1.0 - std::ldexp(1.0, -j), 0.7 * j));
        mult.push_back(1 + j % 3);
    }
    const auto fam = family_blaschke(pts, mult);
    const auto h = HarmonicFn::constant(1.0);
    const auto h1 = corollary_h1(fam.zeros, h).scaled(1.0 / constants::kHq);
    const auto rep = theorem4_check(fam.zeros, h, h1, depth);
    return {"thm4",
            {{"hypothesis", rep.hypothesis ? 1.0 : 0.0, ">=", 1.0, rep.hypothesis},
             finite("corollary_sum", rep.corollary_sum),
             at_least("sample_size", static_cast<double>(rep.sample_size), 1.0),
             {"majorant_margin", rep.worst_margin, ">=", 0.0, rep.majorant_checked && rep.majorant_holds}}};
}

SuiteReport claims_suite(const Thm5bResult& built, const Thm5bParams& params) {
    const auto claims = claims_check(built.zeros, built, params);
    SuiteReport rep{"claims", {}};
    for (std::size_t i = claims.size() / 2; i < claims.size(); ++i) {
        const auto& c = claims[i];
        if (c.capped) continue;
        const std::string tag = "square_" + std::to_string(c.k) + "_" + std::to_string(c.index);
        rep.properties.push_back({tag + "_claim1", c.claim1 ? 1.0 : 0.0, ">=", 1.0, c.claim1});
        rep.properties.push_back({tag + "_claim3", c.lower_bound_margin, ">=", 0.0, c.claim3});
    }
    if (rep.properties.empty()) rep.properties.push_back({"uncapped_squares_checked", 0.0, ">=", 1.0, false});
    return rep;
}

}  // namespace nevmaj
