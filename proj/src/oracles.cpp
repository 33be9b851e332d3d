#include "nevmaj/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nevmaj::oracle {

double harmonic_measure_quadrature(const DiskPoint& z, const BoundaryArc& arc, double tol) {
    using boost::math::quadrature::gauss_kronrod;
    const double w = z.gap2();
    const Complex zc = z.value();
    auto f = [&](double t) { return w / std::norm(std::polar(1.0, t) - zc) / kTwoPi; };
    // The kernel has width about 1 - |z| around arg z; cut at geometric distances from the peak so
    // every panel sees a smooth integrand.
    std::vector<double> cuts{arc.lo(), arc.hi()};
    if (z.abs() > 0.0) {
        double peak = z.arg();
        while (peak > arc.lo()) peak -= kTwoPi;
        for (double p = peak; p < arc.hi() + kTwoPi; p += kTwoPi) {
            cuts.push_back(p);
            for (double d = z.gap(); d < kTwoPi; d *= 2.0) {
                cuts.push_back(p - d);
                cuts.push_back(p + d);
            }
        }
        std::erase_if(cuts, [&](double c) { return c < arc.lo() || c > arc.hi(); });
        std::sort(cuts.begin(), cuts.end());
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] <= cuts[i]) continue;
        total += gauss_kronrod<double, 61>::integrate(f, cuts[i], cuts[i + 1], 12, tol);
    }
    return total;
}

namespace {

// Gaussian elimination with partial pivoting; false when singular.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (std::abs(a[p][c]) < 1e-13) return false;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return true;
}

}  // namespace

double min_mass_by_vertices(const ConstraintSet& constraints, const std::vector<double>& grid) {
    const std::size_t m = constraints.size();
    if (m == 0) return 0.0;
    if (m > 6) throw std::invalid_argument("vertex enumeration is limited to 6 constraints");
    // Halfspaces g . y <= h: grid rows first, then -y_i <= 0.
    std::vector<std::vector<double>> g;
    std::vector<double> h;
    for (double xi : grid) {
        std::vector<double> row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = poisson_kernel(constraints.constraints[i].z, xi);
        g.push_back(row);
        h.push_back(1.0);
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> row(m, 0.0);
        row[i] = -1.0;
        g.push_back(row);
        h.push_back(0.0);
    }
    const std::size_t total = g.size();
    double best = 0.0;
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    for (;;) {
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (std::size_t k : pick) {
            a.push_back(g[k]);
            b.push_back(h[k]);
        }
        std::vector<double> y;
        if (solve_dense(a, b, y)) {
            bool feasible = true;
            for (std::size_t k = 0; k < total && feasible; ++k) {
                double s = 0.0;
                for (std::size_t i = 0; i < m; ++i) s += g[k][i] * y[i];
                if (s > h[k] + 1e-12 * std::max(1.0, std::abs(h[k]))) feasible = false;
            }
            if (feasible) {
                double val = 0.0;
                for (std::size_t i = 0; i < m; ++i) val += constraints.constraints[i].value * y[i];
                best = std::max(best, val);
            }
        }
        // Next m-combination of [0, total).
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == total - m + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t k = i; k < m; ++k) pick[k] = pick[k - 1] + 1;
    }
    return best;
}

std::vector<DiskPoint> pseudo_circle(const DiskPoint& z0, double t, int count) {
    std::vector<DiskPoint> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(DiskPoint(mobius(z0.value(), std::polar(t, kTwoPi * i / count))));
    }
    return out;
}

}  // namespace nevmaj::oracle
