#include "nevmaj/majorant.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nevmaj {

namespace {

struct KernelRow {
    double r;
    double phi;
    double gap;
    double w;  // 1 - |z|^2, also the row scale
};

KernelRow kernel_row(const DiskPoint& z) {
    return {z.abs(), std::arg(z.value()), z.gap(), z.gap2()};
}

// w * P(z, xi): the Poisson kernel multiplied by the row scale 1 - |z|^2, bounded by (1 + |z|)^2.
double scaled_kernel(const KernelRow& k, double xi) {
    const double s = std::sin(0.5 * (xi - k.phi));
    return k.w * k.w / (k.gap * k.gap + 4.0 * k.r * s * s);
}

double kernel(const KernelRow& k, double xi) {
    const double s = std::sin(0.5 * (xi - k.phi));
    return k.w / (k.gap * k.gap + 4.0 * k.r * s * s);
}

// Indices of the `limit` largest scores above zero, ties broken by lower index.
std::vector<std::size_t> top_violators(const std::vector<std::pair<double, std::size_t>>& scored,
                                       std::size_t limit) {
    auto v = scored;
    const std::size_t k = std::min(limit, v.size());
    std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end(), [](const auto& a, const auto& b) {
        return a.first > b.first || (a.first == b.first && a.second < b.second);
    });
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(v[i].second);
    return out;
}

}  // namespace

void ConstraintSet::add(const DiskPoint& z, double value) {
    if (!std::isfinite(value) || value < 0.0) throw std::invalid_argument("constraint values must be finite and >= 0");
    constraints.push_back({z, value});
}

std::vector<double> boundary_grid(const ConstraintSet& constraints, int n) {
    if (n < 1) throw std::invalid_argument("boundary grid needs n >= 1");
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n) + constraints.size());
    for (int j = 0; j < n; ++j) g.push_back(kTwoPi * j / n);
    for (const auto& c : constraints.constraints) {
        if (c.z.value() != Complex(0.0, 0.0)) g.push_back(c.z.arg());
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

SolveReport min_mass(const ConstraintSet& constraints, const MinMassOptions& options) {
    return min_mass(constraints, boundary_grid(constraints, options.grid_n), options);
}

SolveReport min_mass(const ConstraintSet& constraints, const std::vector<double>& grid,
                     const MinMassOptions& options) {
    SolveReport rep;
    rep.grid = grid;
    const std::size_t m_all = constraints.size();
    rep.slack.assign(m_all, 0.0);
    rep.dual.assign(m_all, 0.0);
    if (grid.empty()) throw std::invalid_argument("min_mass needs a nonempty boundary grid");

    std::vector<KernelRow> rows(m_all);
    std::vector<double> vhat(m_all);
    std::vector<std::size_t> live;  // constraints with positive demand
    for (std::size_t i = 0; i < m_all; ++i) {
        const auto& c = constraints.constraints[i];
        if (!std::isfinite(c.value) || c.value < 0.0) throw std::invalid_argument("constraint values must be finite and >= 0");
        rows[i] = kernel_row(c.z);
        vhat[i] = rows[i].w * c.value;
        if (c.value > 0.0) live.push_back(i);
    }

    std::vector<double> weights(grid.size(), 0.0);
    if (!live.empty()) {
        const double tol = options.tolerance;
        std::vector<char> in_s(m_all, 0), in_g(grid.size(), 0);
        std::vector<std::size_t> s_idx, g_idx;

        auto nearest_grid = [&](double theta) {
            auto it = std::lower_bound(grid.begin(), grid.end(), theta);
            std::size_t j = it == grid.end() ? grid.size() - 1 : static_cast<std::size_t>(it - grid.begin());
            if (j > 0 && std::abs(grid[j - 1] - theta) < std::abs(grid[j] - theta)) --j;
            return j;
        };
        auto add_s = [&](std::size_t i) {
            if (!in_s[i]) { in_s[i] = 1; s_idx.push_back(i); }
        };
        auto add_g = [&](std::size_t j) {
            if (!in_g[j]) { in_g[j] = 1; g_idx.push_back(j); }
        };

        {
            std::vector<std::pair<double, std::size_t>> scored;
            for (std::size_t i : live) scored.push_back({vhat[i], i});
            for (std::size_t i : top_violators(scored, options.batch)) {
                add_s(i);
                add_g(nearest_grid(normalize_angle(rows[i].phi)));
            }
            const std::size_t stride = std::max<std::size_t>(1, grid.size() / 16);
            for (std::size_t j = 0; j < grid.size(); j += stride) add_g(j);
        }

        std::vector<double> ys;
        for (;;) {
            if (++rep.rounds > options.max_rounds) {
                rep.status = LpStatus::infeasible_numerics;
                rep.message = "row/column generation did not converge";
                break;
            }
            std::sort(s_idx.begin(), s_idx.end());
            std::sort(g_idx.begin(), g_idx.end());
            DenseMatrix a(s_idx.size(), g_idx.size());
            std::vector<double> v(s_idx.size());
            for (std::size_t p = 0; p < s_idx.size(); ++p) {
                v[p] = vhat[s_idx[p]];
                for (std::size_t q = 0; q < g_idx.size(); ++q) a(p, q) = scaled_kernel(rows[s_idx[p]], grid[g_idx[q]]);
            }
            const auto sol = solve_covering(a, v, options.simplex);
            rep.pivots += sol.pivots;
            if (sol.status != LpStatus::optimal) {
                rep.status = sol.status;
                rep.message = sol.message;
                break;
            }
            std::fill(weights.begin(), weights.end(), 0.0);
            for (std::size_t q = 0; q < g_idx.size(); ++q) weights[g_idx[q]] = sol.primal[q];
            ys.assign(m_all, 0.0);
            for (std::size_t p = 0; p < s_idx.size(); ++p) ys[s_idx[p]] = sol.dual[p];

            std::vector<std::size_t> support;
            for (std::size_t j = 0; j < grid.size(); ++j)
                if (weights[j] > 0.0) support.push_back(j);
            std::vector<std::pair<double, std::size_t>> bad_rows;
            for (std::size_t i : live) {
                if (in_s[i]) continue;
                double s = 0.0;
                for (std::size_t j : support) s += weights[j] * scaled_kernel(rows[i], grid[j]);
                const double gap = vhat[i] - s;
                if (gap > tol * vhat[i]) bad_rows.push_back({gap / vhat[i], i});
            }
            std::vector<std::size_t> ysupport;
            for (std::size_t i : s_idx)
                if (ys[i] > 0.0) ysupport.push_back(i);
            std::vector<std::pair<double, std::size_t>> bad_cols;
            for (std::size_t j = 0; j < grid.size(); ++j) {
                if (in_g[j]) continue;
                double s = 0.0;
                for (std::size_t i : ysupport) s += ys[i] * scaled_kernel(rows[i], grid[j]);
                if (s > 1.0 + tol) bad_cols.push_back({s, j});
            }
            if (bad_rows.empty() && bad_cols.empty()) break;
            for (std::size_t i : top_violators(bad_rows, options.batch)) add_s(i);
            for (std::size_t j : top_violators(bad_cols, options.batch)) add_g(j);
        }
        for (std::size_t i = 0; i < m_all && i < ys.size(); ++i) rep.dual[i] = ys[i] * rows[i].w;
    }

    for (std::size_t j = 0; j < grid.size(); ++j) {
        if (weights[j] > 0.0) rep.measure.add_atom(grid[j], weights[j]);
    }
    rep.optimal_mass = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < grid.size(); ++j)
        if (weights[j] > 0.0) support.push_back(j);
    for (std::size_t i = 0; i < m_all; ++i) {
        double s = 0.0;
        for (std::size_t j : support) s += weights[j] * kernel(rows[i], grid[j]);
        rep.slack[i] = s - constraints.constraints[i].value;
    }
    return rep;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::bounded: return "bounded";
        case Classification::growth: return "growth";
        case Classification::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Classification classify(const std::vector<double>& masses) {
    if (!masses.empty() && std::all_of(masses.begin(), masses.end(), [](double m) { return m == 0.0; })) {
        return Classification::bounded;
    }
    if (masses.size() < 3) return Classification::inconclusive;
    const double a = masses[masses.size() - 3];
    const double b = masses[masses.size() - 2];
    const double c = masses[masses.size() - 1];
    const double hi = std::max({a, b, c});
    const double lo = std::min({a, b, c});
    if (hi <= 1.5 * lo) return Classification::bounded;
    if (a < b && b < c && c >= 2.0 * a) return Classification::growth;
    return Classification::inconclusive;
}

std::vector<double> SweepRecord::masses() const {
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r.mass);
    return out;
}

bool SweepRecord::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.status == LpStatus::optimal; });
}

SweepRecord majorant_diagnostic(const ZeroSet& zeros, const HarmonicFn& h, const std::vector<int>& depths,
                                const SweepOptions& options) {
    if (depths.empty()) throw std::invalid_argument("majorant_diagnostic needs at least one depth");
    for (std::size_t i = 0; i < depths.size(); ++i) {
        if (depths[i] < 1 || (i > 0 && depths[i] <= depths[i - 1])) {
            throw std::invalid_argument("depths must be positive and strictly increasing");
        }
    }
    const auto sample = sample_target_set(zeros, h, depths.back(), options.sample);
    ConstraintSet all;
    for (const auto& p : sample) all.add(p.z, p.value);
    const auto grid = boundary_grid(all, options.solver.grid_n);

    SweepRecord rec;
    for (int d : depths) {
        const auto t0 = std::chrono::steady_clock::now();
        ConstraintSet cs;
        for (const auto& p : sample)
            if (p.level <= d) cs.add(p.z, p.value);
        const auto rep = min_mass(cs, grid, options.solver);
        const auto t1 = std::chrono::steady_clock::now();
        SweepRow row;
        row.depth = d;
        row.count = cs.size();
        row.mass = rep.optimal_mass;
        row.status = rep.status;
        row.runtime_ms = options.timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
        rec.rows.push_back(row);
    }

    std::vector<double> xs, ys;
    for (const auto& r : rec.rows) {
        if (r.mass > 0.0) {
            xs.push_back(r.depth * std::log(2.0));
            ys.push_back(std::log(r.mass));
        }
    }
    if (xs.size() >= 2) {
        const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
        const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        rec.growth_exponent = sxy / sxx;
    }
    rec.classification = classify(rec.masses());
    return rec;
}

SweepRecord wep_gap(const ZeroSet& zeros, const HarmonicFn& h1, const std::vector<int>& depths,
                    const SweepOptions& options) {
    return majorant_diagnostic(zeros, h1, depths, options);
}

CoronaData corona_data(const ZeroSet& b, const std::vector<ZeroSet>& witnesses, const std::vector<DiskPoint>& grid) {
    if (witnesses.empty()) throw std::invalid_argument("corona_data needs at least one witness");
    CoronaData out;
    for (const auto& z : grid) {
        // log(|B| + sum |f_i|) by log-sum-exp over the individual log moduli.
        std::vector<double> logs{log_modulus(b, z)};
        for (const auto& w : witnesses) logs.push_back(log_modulus(w, z));
        const double top = *std::max_element(logs.begin(), logs.end());
        if (top == -std::numeric_limits<double>::infinity()) {
            ++out.dropped;
            continue;
        }
        double s = 0.0;
        for (double l : logs) s += std::exp(l - top);
        out.constraints.add(z, std::max(0.0, -(top + std::log(s))));
    }
    return out;
}

}  // namespace nevmaj
