#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "nevmaj/majorant.hpp"

namespace nevmaj {

namespace {

double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

double unit_from_bits(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

double shift(double u, double s) {
    const double t = u + s;
    return t >= 1.0 ? t - 1.0 : t;
}

struct Filter {
    const ZeroSet& zeros;
    const HarmonicFn& h;
    double scale;

    // Local variant for points known only through their anchor frame.
    bool keep(double neg_log_dist, const DiskPoint& z) const { return neg_log_dist <= scale * h(z); }
};

}  // namespace

std::vector<TargetPoint> sample_target_set(const ZeroSet& zeros, const HarmonicFn& h, int depth,
                                           const SampleOptions& options) {
    if (depth < 1) throw std::invalid_argument("sample_target_set needs depth >= 1");
    if (depth > 40) throw std::invalid_argument("sample_target_set depth is limited to 40");
    if (options.per_square < 1) throw std::invalid_argument("per_square must be >= 1");
    if (!(options.filter_scale >= 0.0)) throw std::invalid_argument("filter scale must be >= 0");

    // Cranley-Patterson rotation of the Halton points, derived from the seed.
    std::mt19937_64 rng(options.seed);
    const double s1 = options.seed == 0 ? 0.0 : unit_from_bits(rng());
    const double s2 = options.seed == 0 ? 0.0 : unit_from_bits(rng());
    const Filter filter{zeros, h, options.filter_scale};

    std::vector<TargetPoint> out;
    // Extremal bookkeeping: per square, index of the best retained point and whether it meets the
    // set rho(., Lambda) <= 1/2.
    struct Best {
        std::size_t index;
        double value;
        bool near;
    };
    std::map<std::pair<int, std::int64_t>, Best> best;
    const double near_level = std::log(2.0);

    auto push = [&](const DiskPoint& z, double value, double nld, int level, std::int64_t square, PointKind kind) {
        out.push_back({z, value, level, kind, false});
        auto key = std::make_pair(level, square);
        auto it = best.find(key);
        const bool near = nld >= near_level;
        if (it == best.end()) {
            best.emplace(key, Best{out.size() - 1, value, near});
        } else {
            if (value > it->second.value) {
                it->second.index = out.size() - 1;
                it->second.value = value;
            }
            it->second.near = it->second.near || near;
        }
    };

    auto consider = [&](const DiskPoint& z, int level, std::int64_t square) {
        const double nld = neg_log_distance(zeros, z);
        if (!filter.keep(nld, z)) return;
        push(z, -log_modulus(zeros, z), nld, level, square, PointKind::uniform);
    };

    const int n = options.per_square;
    for (int i = 0; i < n; ++i) {
        const double u = shift(radical_inverse(static_cast<std::uint64_t>(i) + 1, 2), s1);
        const double v = shift(radical_inverse(static_cast<std::uint64_t>(i) + 1, 3), s2);
        consider(DiskPoint::polar(0.5 * std::sqrt(u), kTwoPi * v), 0, 0);
    }
    for (int k = 1; k <= depth; ++k) {
        const WhitneySquare q0{k, 0};
        const double width = q0.width();
        const std::int64_t count = std::int64_t{1} << k;
        for (std::int64_t j = 0; j < count; ++j) {
            const double lo = width * static_cast<double>(j);
            for (int i = 0; i < n; ++i) {
                const double u = shift(radical_inverse(static_cast<std::uint64_t>(i) + 1, 2), s1);
                const double v = shift(radical_inverse(static_cast<std::uint64_t>(i) + 1, 3), s2);
                const double gap = k == 1 ? 0.5 : std::ldexp(std::exp2(u), -k);
                const double r = 1.0 - std::min(gap, std::ldexp(1.0, -k + 1) * (1.0 - 0x1.0p-52));
                consider(DiskPoint::polar(r, lo + width * v), k, j);
            }
        }
    }

    if (options.probes && !zeros.empty() && options.probe_rings >= 1 && options.probe_directions >= 1) {
        // Heaviest zeros per occupied cell, ties by input order.
        std::map<std::pair<int, std::int64_t>, std::vector<std::size_t>> cells;
        for (std::size_t idx = 0; idx < zeros.size(); ++idx) {
            const auto q = whitney_index(zeros[idx].point);
            const auto key = q ? std::make_pair(q->level, q->index) : std::make_pair(0, std::int64_t{0});
            if (key.first <= depth) cells[key].push_back(idx);
        }
        for (auto& [key, list] : cells) {
            std::stable_sort(list.begin(), list.end(),
                             [&](std::size_t a, std::size_t b) { return zeros[a].mult > zeros[b].mult; });
            const std::size_t take = std::min<std::size_t>(list.size(), static_cast<std::size_t>(options.anchors_per_square));
            for (std::size_t t = 0; t < take; ++t) {
                const DiskPoint& anchor = zeros[list[t]].point;
                const double tau_lo = std::log(2.0);
                const double tau_hi = std::max(tau_lo, options.filter_scale * h(anchor));
                const int rings = tau_hi > tau_lo ? options.probe_rings : 1;
                for (int ring = 0; ring < rings; ++ring) {
                    const double tau = rings == 1 ? tau_lo : tau_lo * std::pow(tau_hi / tau_lo, static_cast<double>(ring) / (rings - 1));
                    const double u = std::exp(-tau);
                    for (int d = 0; d < options.probe_directions; ++d) {
                        const double phi = kTwoPi * (d + 0.5 * (ring % 2)) / options.probe_directions;
                        const Complex w = mobius(anchor.value(), std::polar(u, phi));
                        if (std::norm(w) >= 1.0) continue;
                        const DiskPoint z(w);
                        const auto loc = evaluate_local(zeros, anchor, tau, phi);
                        if (!filter.keep(loc.neg_log_distance, z)) continue;
                        push(z, loc.neg_log_modulus, loc.neg_log_distance, key.first, key.second, PointKind::probe);
                    }
                }
            }
        }
    }

    for (const auto& [key, b] : best) {
        if (b.near && key.first >= 1) out[b.index].extremal = true;
    }
    return out;
}

}  // namespace nevmaj
