#include "nevmaj/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "nevmaj/harmonic.hpp"
#include "nevmaj/majorant.hpp"

namespace nevmaj {

namespace {

double halton(std::uint64_t i, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

}  // namespace

std::vector<DiskPoint> square_samples(const WhitneySquare& q, int count) {
    std::vector<DiskPoint> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double u = halton(static_cast<std::uint64_t>(i) + 1, 2);
        const double v = halton(static_cast<std::uint64_t>(i) + 1, 3);
        const double gap = q.level == 1 ? 0.5 : q.side() * std::exp2(u);
        out.push_back(DiskPoint::polar(1.0 - gap, q.theta_lo() + q.width() * v));
    }
    return out;
}

HqCalibration calibrate_hq(int max_level, int samples) {
    HqCalibration cal;
    double worst_scaled = 0.0;
    for (int k = 1; k <= max_level; ++k) {
        HqLevel row;
        row.level = k;
        const std::int64_t n = std::int64_t{1} << k;
        for (std::int64_t j = 0; j < n; ++j) {
            const WhitneySquare q{k, j};
            const auto arc = q.arc();
            for (const auto& z : square_samples(q, samples)) {
                const double v = harmonic_measure(z, arc);
                row.min_inside = std::min(row.min_inside, v);
                row.max_value = std::max(row.max_value, v);
                row.max_scaled = std::max(row.max_scaled, v * z.gap() / q.side());
            }
        }
        // The upper bound is a statement on the whole disc; it is tightest near I(Q), so probe the
        // neighbors of one square and the radius through its center.
        const WhitneySquare q0{k, 0};
        const auto arc = q0.arc();
        for (const auto& nb : whitney_neighbors(q0).squares) {
            for (const auto& z : square_samples(nb, samples)) {
                const double v = harmonic_measure(z, arc);
                row.max_value = std::max(row.max_value, v);
                row.max_scaled = std::max(row.max_scaled, v * z.gap() / q0.side());
            }
        }
        for (int i = 0; i <= 400; ++i) {
            const DiskPoint z = DiskPoint::polar(1.0 - std::pow(10.0, -6.0 * i / 400.0), arc.mid());
            const double v = harmonic_measure(z, arc);
            row.max_value = std::max(row.max_value, v);
            row.max_scaled = std::max(row.max_scaled, v * z.gap() / q0.side());
        }
        cal.c_lower = std::min(cal.c_lower, row.min_inside);
        worst_scaled = std::max(worst_scaled, row.max_scaled);
        cal.levels.push_back(row);
    }
    cal.c_upper = 1.0 / worst_scaled;
    cal.c = std::min(cal.c_lower, cal.c_upper);
    return cal;
}

ZeroSet geometric_zero_set(int depth, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ZeroSet zs;
    for (int j = 1; j <= depth; ++j) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        zs.add(DiskPoint::polar(1.0 - std::ldexp(1.0, -j), kTwoPi * u));
    }
    return zs;
}

double lemma1_ratio(const ZeroSet& zeros, int depth, int per_square) {
    SampleOptions so;
    so.per_square = per_square;
    so.filter_scale = 1.0;
    const auto h = HarmonicFn::constant(std::log(2.0));
    const auto hl = HarmonicFn::h_lambda(zeros);
    double best = 0.0;
    for (const auto& p : sample_target_set(zeros, h, depth, so)) {
        const double d = hl(p.z);
        if (d > 0.0) best = std::max(best, p.value / d);
    }
    return best;
}

double calibrate_lemma1(int sets, int depth, std::uint64_t seed) {
    double best = 0.0;
    for (int s = 0; s < sets; ++s) best = std::max(best, lemma1_ratio(geometric_zero_set(depth, seed + s), depth));
    return best;
}

NeighborCalibration calibrate_neighbors() {
    NeighborCalibration out;
    double worst_r = 0.0;
    for (int k = 1; k <= 10; ++k) {
        const WhitneySquare q{k, 0};
        for (const auto& z : square_samples(q, 64)) {
            std::set<std::pair<int, std::int64_t>> cells;
            for (int a = 1; a <= 24; ++a) {
                const double t = 0.5 * a / 24.0;
                for (int b = 0; b < 96; ++b) {
                    const DiskPoint w(mobius(z.value(), std::polar(t, kTwoPi * b / 96.0)));
                    const auto c = whitney_index(w);
                    cells.insert(c ? std::make_pair(c->level, c->index) : std::make_pair(0, std::int64_t{0}));
                }
            }
            out.count = std::max(out.count, static_cast<int>(cells.size()));
            for (const auto& [lv, idx] : cells) {
                const DiskPoint center = lv == 0 ? DiskPoint(0.0) : WhitneySquare{lv, idx}.center();
                worst_r = std::max(worst_r, pseudo_dist(z, center));
            }
        }
    }
    out.harnack = (1.0 + worst_r) / (1.0 - worst_r);
    return out;
}

}  // namespace nevmaj
