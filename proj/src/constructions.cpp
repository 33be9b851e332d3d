#include "nevmaj/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace nevmaj {

namespace {

constexpr double kGoldenAngle = 2.399963229728653;

Complex spiral_point(double radius, std::size_t i, std::size_t count) {
    return std::polar(radius * std::sqrt((static_cast<double>(i) + 0.5) / static_cast<double>(count)),
                      kGoldenAngle * static_cast<double>(i));
}

double min_square_distance(const WhitneySquare& a, const WhitneySquare& b) {
    double best = 1.0;
    for (const auto& p : square_grid(a, 6))
        for (const auto& q : square_grid(b, 6)) best = std::min(best, pseudo_dist(p, q));
    return best;
}

// Greedy separated packing of {|u| <= radius} in local coordinates, starting from u = 0.
// Neighbor candidates are found through a hash grid: rho(u, v) < s forces |u - v| < s (1 + radius^2).
struct Packing {
    std::vector<Complex> points;
    bool capped = false;
};

Packing greedy_packing(double radius, double sep, std::int64_t cap, int factor) {
    Packing out;
    out.points.push_back(Complex(0.0, 0.0));
    if (sep >= 1.0 || radius <= 0.0) return out;
    const double ratio = radius / sep;
    const double want = static_cast<double>(factor) * ratio * ratio + 1.0;
    const double limit = static_cast<double>(cap) * factor + 1.0;
    const auto count = static_cast<std::size_t>(std::min(want, limit));
    if (want > limit) out.capped = true;
    const double cell = sep * (1.0 + radius * radius);
    std::unordered_map<std::int64_t, std::vector<std::size_t>> grid;
    auto key = [&](std::int64_t a, std::int64_t b) { return a * 4000037 + b; };
    auto cell_of = [&](Complex u) {
        return std::make_pair(static_cast<std::int64_t>(std::floor(u.real() / cell)),
                              static_cast<std::int64_t>(std::floor(u.imag() / cell)));
    };
    grid[key(0, 0)].push_back(0);
    for (std::size_t i = 1; i < count; ++i) {
        const Complex u = spiral_point(radius, i, count);
        const auto [cx, cy] = cell_of(u);
        bool ok = true;
        for (std::int64_t dx = -1; dx <= 1 && ok; ++dx) {
            for (std::int64_t dy = -1; dy <= 1 && ok; ++dy) {
                auto it = grid.find(key(cx + dx, cy + dy));
                if (it == grid.end()) continue;
                for (std::size_t p : it->second) {
                    if (pseudo_dist(u, out.points[p]) < sep) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (!ok) continue;
        if (static_cast<std::int64_t>(out.points.size()) - 1 >= cap) {
            out.capped = true;
            break;
        }
        grid[key(cx, cy)].push_back(out.points.size());
        out.points.push_back(u);
    }
    return out;
}

}  // namespace

FamilyResult family_blaschke(const std::vector<DiskPoint>& points, const std::vector<std::int64_t>& mults) {
    if (points.size() != mults.size()) throw std::invalid_argument("family_blaschke: points and multiplicities differ in length");
    if (points.empty()) throw std::invalid_argument("family_blaschke needs at least one point");
    FamilyResult res;
    std::vector<Zero> zs;
    for (std::size_t i = 0; i < points.size(); ++i) zs.push_back({points[i], mults[i]});
    res.zeros = ZeroSet(std::move(zs));
    if (points.size() >= 2) {
        res.separation = separation(points);
        if (!(res.separation > 0.0)) throw std::invalid_argument("family_blaschke: points are not separated");
    }
    res.disk_radius = res.separation / 4.0;
    // Two pseudo-disks of radius t are disjoint iff the centers are farther apart than 2t / (1 + t^2).
    const double t = res.disk_radius;
    const double need = 2.0 * t / (1.0 + t * t);
    for (std::size_t a = 0; a < points.size() && res.disjoint; ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
            if (pseudo_dist(points[a], points[b]) <= need) {
                res.disjoint = false;
                break;
            }
    return res;
}

Thm2Result thm2_weights(const ZeroSet& zeros, int depth, const Lemma3Options& options) {
    const auto cen = census(zeros);
    Thm2Result res;
    for (const auto& [q, c] : cen.squares) {
        if (c.m > 0 && q.level <= depth) {
            res.squares.push_back(q);
            res.m.push_back(c.m);
        }
    }
    if (res.squares.empty()) throw std::invalid_argument("thm2_weights: no occupied squares");
    // The census map is ordered by (level, index), which is decreasing side length.
    const std::size_t n = res.squares.size();
    res.tail.assign(n, 0.0);
    double acc = 0.0;
    for (std::size_t j = n; j-- > 0;) {
        acc += static_cast<double>(res.m[j]) * res.squares[j].side();
        res.tail[j] = acc;
    }
    for (std::size_t j = 0; j < n; ++j) {
        res.weights.push_back(static_cast<double>(res.m[j]) / std::sqrt(res.tail[j]));
        res.bounds.push_back(1.0 / std::sqrt(res.tail[j]));
    }
    res.lemma3 = lemma3_build(res.squares, res.bounds, options);
    const double c0 = res.lemma3.steps.back().partial_constant;
    res.bound_check = true;
    for (std::size_t j = 0; j < n; ++j)
        if (res.lemma3.final_sups[j] > res.bounds[j] + c0) res.bound_check = false;
    res.sups_increase = true;
    for (std::size_t i = 1; i < res.lemma3.selected_sups.size(); ++i)
        if (!(res.lemma3.selected_sups[i] > res.lemma3.selected_sups[i - 1])) res.sups_increase = false;
    return res;
}

Thm5aResult thm5a_build(const HarmonicFn& h1, const HarmonicFn& h2, int count, const Thm5aOptions& options) {
    if (count < 1) throw std::invalid_argument("thm5a_build needs count >= 1");
    if (options.rays < 1 || options.scan_steps < 2) throw std::invalid_argument("thm5a_build: bad scan options");
    auto ratio_at = [&](const DiskPoint& z) {
        const double b = h2(z);
        if (!(b > 0.0)) throw std::invalid_argument("thm5a_build: H2 must be positive");
        return h1(z) / b;
    };
    double best_growth = 0.0;
    int best_ray = -1;
    for (int i = 0; i < options.rays; ++i) {
        const double th = kTwoPi * i / options.rays;
        const double first = ratio_at(DiskPoint::polar(1.0 - 0.25, th));
        const double last = ratio_at(DiskPoint::polar(1.0 - std::ldexp(1.0, -2 * options.scan_steps), th));
        const double g = last / first;
        if (g > best_growth) {
            best_growth = g;
            best_ray = i;
        }
    }
    if (best_ray < 0 || best_growth < options.min_growth) {
        throw std::runtime_error("thm5a_build: H1/H2 grows by at most " + std::to_string(best_growth) +
                                 " on every scanned ray; the ratio looks bounded");
    }
    Thm5aResult res;
    res.theta = kTwoPi * best_ray / options.rays;
    std::vector<Zero> zs;
    double prev_ratio = 0.0, prev_small = std::numeric_limits<double>::infinity(), prev_big = 0.0;
    int accepted = 0;
    double partial = 0.0;
    for (int j = 1; j <= count; ++j) {
        const double l = std::ldexp(1.0, -2 * j);
        const DiskPoint a = DiskPoint::polar(1.0 - l, res.theta);
        ConstructionRecord rec;
        rec.z = a;
        const auto q = whitney_index(a);
        rec.k = q ? q->level : 0;
        rec.index = q ? q->index : 0;
        rec.branch = "ray";
        const double v1 = h1(a), v2 = h2(a);
        rec.h = v1;
        const double ratio = v1 / v2;
        const double nr = std::ceil(1.0 / (l * std::sqrt(v1 * v2)));
        rec.n = static_cast<std::int64_t>(std::max(1.0, nr));
        const double small = static_cast<double>(rec.n) * l * v2;
        const double big = static_cast<double>(rec.n) * l * v1;
        rec.checks["ratio"] = {ratio, ratio > prev_ratio};
        rec.checks["vanish_h2"] = {small, small < prev_small};
        rec.checks["blowup_h1"] = {big, big > prev_big};
        rec.checks["sumN"] = {small, small <= std::ldexp(1.0, -accepted)};
        if (!(ratio > prev_ratio)) {
            rec.note = "ratio H1/H2 not increasing";
        } else if (!(small <= std::ldexp(1.0, -accepted))) {
            rec.note = "term exceeds 2^-accepted";
        } else {
            rec.accepted = true;
            rec.placed = 1;
            ++accepted;
            partial += small;
            prev_ratio = ratio;
            prev_small = small;
            prev_big = big;
            zs.push_back({a, rec.n});
        }
        rec.checks["sumN_partial"] = {partial, true};
        res.log.push_back(rec);
    }
    res.zeros = ZeroSet(std::move(zs));
    return res;
}

void Thm5bParams::validate() const {
    if (!(eta0 > 0.0)) throw std::invalid_argument("eta0 must be positive");
    if (!(eta > 0.0 && eta < eta0)) throw std::invalid_argument("eta must lie in (0, eta0)");
    if (max_depth < 1 || max_depth > 40) throw std::invalid_argument("max_depth must lie in [1, 40]");
    if (cap < 0) throw std::invalid_argument("cap must be >= 0");
    if (spiral_factor < 1) throw std::invalid_argument("spiral_factor must be >= 1");
}

std::vector<const ConstructionRecord*> Thm5bResult::accepted() const {
    std::vector<const ConstructionRecord*> out;
    for (const auto& r : log)
        if (r.accepted) out.push_back(&r);
    return out;
}

Thm5bResult thm5b_build(const Thm5bParams& params) {
    params.validate();
    const HarmonicFn& h = params.h;
    Thm5bResult res;
    res.gamma = whitney_gamma();
    const double g = res.gamma;
    const double eta = params.eta;
    std::vector<Zero> zs;
    std::vector<WhitneySquare> kept;
    std::map<std::string, double> prev;
    int accepted = 0;

    for (int k = 1; k <= params.max_depth; ++k) {
        const double l = std::ldexp(1.0, -k);
        const double logl = std::log(1.0 / l);
        const double upper_max = g / (2.0 * (1.0 + eta)) * logl;
        const double band_lo = g * g * g / (2.0 * (1.0 + eta)) * logl;
        const double band_hi = g * g / (2.0 * (1.0 + eta)) * logl;
        const std::int64_t count = std::int64_t{1} << k;

        ConstructionRecord rec;
        rec.k = k;
        double circle_max = -1.0;
        std::int64_t circle_arg = 0;
        for (std::int64_t j = 0; j < count; ++j) {
            const WhitneySquare q{k, j};
            const double v = h(DiskPoint::polar(q.r_outer(), 0.5 * (q.theta_lo() + q.theta_hi())));
            if (v > circle_max) {
                circle_max = v;
                circle_arg = j;
            }
        }
        std::int64_t chosen = -1;
        if (circle_max <= upper_max) {
            chosen = circle_arg;
            rec.branch = "max";
        } else {
            rec.branch = "band";
            double best = -1.0;
            for (std::int64_t j = 0; j < count; ++j) {
                const double v = h(WhitneySquare{k, j}.center());
                if (v >= band_lo && v <= band_hi && v > best) {
                    best = v;
                    chosen = j;
                }
            }
        }
        if (chosen < 0) {
            rec.note = "no square in the band";
            res.log.push_back(rec);
            continue;
        }
        const WhitneySquare q{k, chosen};
        rec.index = chosen;
        rec.z = q.center();
        const double hz = h(rec.z);
        rec.h = hz;
        const double log_r = std::sqrt(hz);  // log(1/R)
        rec.r = std::exp(-log_r);
        const double nraw = 1.0 / (l * std::sqrt(hz * log_r));
        rec.n = std::isfinite(nraw) ? static_cast<std::int64_t>(std::min(nraw, 9.0e15)) : 0;
        const double nn = static_cast<double>(rec.n);
        const double ex = std::exp(2.0 * (1.0 + eta) * hz);
        const double theory = rec.r * rec.r * ex;
        const double term = l * (nn * log_r + ex * rec.r * rec.r * log_r);

        auto monotone = [&](const std::string& name, double v, bool decreasing) {
            auto it = prev.find(name);
            const bool pass = it == prev.end() || (decreasing ? v < it->second : v > it->second);
            rec.checks[name] = {v, pass};
        };
        const bool in_band = hz >= band_lo && hz <= band_hi;
        rec.checks["gamma"] = {hz, rec.branch == "max" ? hz <= upper_max : in_band};
        monotone("defR", log_r / hz, true);
        monotone("vanishlog", l * nn * log_r, true);
        monotone("blowupH", l * nn * hz, false);
        monotone("vanishexp", l * ex * rec.r * rec.r * log_r, true);
        rec.checks["summable"] = {term, term <= std::ldexp(1.0, -accepted)};
        rec.checks["theory_count"] = {theory, true};

        double sep_min = 1.0;
        for (const auto& other : kept) sep_min = std::min(sep_min, min_square_distance(q, other));
        rec.checks["separation"] = {sep_min, sep_min >= 0.5};

        if (rec.n < 1) {
            rec.note = "N = 0";
        } else if (sep_min < 0.5) {
            rec.note = "closer than 1/2 to an accepted square";
        } else if (!(term <= std::ldexp(1.0, -accepted))) {
            rec.note = "summable term exceeds 2^-accepted";
        } else {
            rec.accepted = true;
        }
        if (rec.accepted) {
            ++accepted;
            kept.push_back(q);
            for (const auto& [name, cv] : rec.checks) prev[name] = cv.value;
            zs.push_back({rec.z, rec.n});
            const double sep = std::exp(-(1.0 + eta) * hz);
            const auto pack = greedy_packing(rec.r, sep, params.cap, params.spiral_factor);
            rec.capped = pack.capped;
            for (std::size_t i = 1; i < pack.points.size(); ++i) {
                const Complex w = mobius(rec.z.value(), pack.points[i]);
                if (std::norm(w) < 1.0) zs.push_back({DiskPoint(w), 1});
            }
            rec.placed = static_cast<std::int64_t>(pack.points.size());
        }
        res.log.push_back(rec);
    }
    res.zeros = ZeroSet(std::move(zs));
    return res;
}

std::vector<ClaimRow> claims_check(const ZeroSet& zeros, const Thm5bResult& built, const Thm5bParams& params,
                                   const ClaimsOptions& options) {
    params.validate();
    const HarmonicFn& h = params.h;
    std::vector<ClaimRow> rows;
    for (const auto* rec : built.accepted()) {
        ClaimRow row;
        row.k = rec->k;
        row.index = rec->index;
        row.capped = rec->capped;
        const WhitneySquare q{rec->k, rec->index};

        // Claim 1: every sampled point of D_rho(z_k, R_k) is within e^{-H} of the zeros.
        bool any_kept = false;
        const auto m = static_cast<std::size_t>(std::max(options.claim1_samples, 1));
        for (std::size_t i = 0; i < m; ++i) {
            const Complex u = spiral_point(rec->r, i, m);
            const double tau = -std::log(std::abs(u));
            const Complex w = mobius(rec->z.value(), u);
            if (std::norm(w) >= 1.0) continue;
            const DiskPoint zeta(w);
            const auto loc = evaluate_local(zeros, rec->z, tau, std::arg(u));
            ++row.claim1_samples;
            if (loc.neg_log_distance <= h(zeta)) {
                any_kept = true;
                break;
            }
        }
        row.claim1 = !any_kept && row.claim1_samples > 0;

        // Claim 3 and the lower bound, searched on the circle rho(z_k, zeta) = e^{-(1+eta)H(z_k)}.
        const double tau = (1.0 + params.eta) * rec->h;
        const double s = std::exp(-tau);
        const double need = static_cast<double>(rec->n) * tau;
        for (int d = 0; d < options.claim3_directions; ++d) {
            const double phi = kTwoPi * d / options.claim3_directions;
            const Complex w = mobius(rec->z.value(), std::polar(s, phi));
            if (std::norm(w) >= 1.0) continue;
            const DiskPoint zeta(w);
            const bool inside = q.contains(zeta);
            row.claim3_in_square = row.claim3_in_square || inside;
            const auto loc = evaluate_local(zeros, rec->z, tau, phi);
            if (loc.neg_log_distance > (1.0 + params.eta0) * h(zeta)) continue;
            const double margin = loc.neg_log_modulus - need;
            if (inside && !row.claim3) {
                row.claim3 = true;
                row.lower_bound_margin = margin;
            } else if (!row.claim3) {
                row.lower_bound_margin = std::max(row.lower_bound_margin, margin);
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace nevmaj
