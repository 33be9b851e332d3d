#include "nevmaj/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace nevmaj {

namespace {

// arg(1 - conj(z) e^{i theta}); the real part is positive, so this is continuous in theta.
double boundary_phase(double r, double gap, double phi, double theta) {
    const double delta = theta - phi;
    const double s = std::sin(0.5 * delta);
    return std::atan2(-r * std::sin(delta), gap + 2.0 * r * s * s);
}

}  // namespace

double poisson_kernel(const DiskPoint& z, double theta) {
    const double r = z.abs();
    const double gap = z.gap();
    const double s = std::sin(0.5 * (theta - std::arg(z.value())));
    return z.gap2() / (gap * gap + 4.0 * r * s * s);
}

double harmonic_measure(const DiskPoint& z, const BoundaryArc& arc) {
    if (arc.is_full()) return 1.0;
    const double r = z.abs();
    const double gap = z.gap();
    const double phi = std::arg(z.value());
    const double a = boundary_phase(r, gap, phi, arc.lo());
    const double b = boundary_phase(r, gap, phi, arc.hi());
    const double w = arc.length() / kTwoPi - (b - a) / std::numbers::pi;
    return std::clamp(w, 0.0, 1.0);
}

BoundaryMeasure::BoundaryMeasure(std::vector<Atom> atoms, std::vector<ArcPiece> arcs) {
    for (const auto& a : atoms) add_atom(a.theta, a.mass);
    for (const auto& p : arcs) add_arc(p.arc, p.density);
}

void BoundaryMeasure::add_atom(double theta, double mass) {
    if (!(mass >= 0.0) || !std::isfinite(mass)) throw std::invalid_argument("atom mass must be finite and >= 0");
    atoms_.push_back({normalize_angle(theta), mass});
}

void BoundaryMeasure::add_arc(const BoundaryArc& arc, double density) {
    if (!(density >= 0.0) || !std::isfinite(density)) {
        throw std::invalid_argument("arc density must be finite and >= 0");
    }
    arcs_.push_back({arc, density});
}

void BoundaryMeasure::append(const BoundaryMeasure& other, double scale) {
    for (const auto& a : other.atoms_) add_atom(a.theta, a.mass * scale);
    for (const auto& p : other.arcs_) add_arc(p.arc, p.density * scale);
}

double BoundaryMeasure::total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.mass;
    for (const auto& p : arcs_) s += p.density * p.arc.length() / kTwoPi;
    return s;
}

double BoundaryMeasure::poisson_integral(const DiskPoint& z) const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.mass * poisson_kernel(z, a.theta);
    for (const auto& p : arcs_) s += p.density * harmonic_measure(z, p.arc);
    return s;
}

HarmonicFn HarmonicFn::constant(double c) {
    BoundaryMeasure m;
    if (c > 0.0) m.add_arc(BoundaryArc::full_circle(), c);
    else if (c < 0.0) throw std::invalid_argument("positive harmonic constant must be >= 0");
    return HarmonicFn(std::move(m));
}

HarmonicFn HarmonicFn::poisson_atom(double theta, double mass) {
    BoundaryMeasure m;
    m.add_atom(theta, mass);
    return HarmonicFn(std::move(m));
}

HarmonicFn HarmonicFn::h_square(const WhitneySquare& q) {
    BoundaryMeasure m;
    m.add_arc(q.arc(), 1.0);
    return HarmonicFn(std::move(m));
}

HarmonicFn HarmonicFn::h_lambda(const ZeroSet& zeros) {
    BoundaryMeasure m;
    for (const auto& z : zeros.zeros()) {
        m.add_arc(privalov_shadow(z.point), kTwoPi * static_cast<double>(z.mult));
    }
    return HarmonicFn(std::move(m));
}

HarmonicFn HarmonicFn::scaled(double s) const {
    if (!(s >= 0.0)) throw std::invalid_argument("scale must be >= 0");
    BoundaryMeasure m;
    m.append(measure_, s);
    return HarmonicFn(std::move(m));
}

HarmonicFn HarmonicFn::operator+(const HarmonicFn& other) const {
    BoundaryMeasure m = measure_;
    m.append(other.measure_);
    return HarmonicFn(std::move(m));
}

double h_square(const WhitneySquare& q, const DiskPoint& z) { return harmonic_measure(z, q.arc()); }

double h_lambda(const ZeroSet& zeros, const DiskPoint& z) {
    double s = 0.0;
    for (const auto& zero : zeros.zeros()) {
        s += static_cast<double>(zero.mult) * harmonic_measure(z, privalov_shadow(zero.point));
    }
    return kTwoPi * s;
}

HarnackBounds harnack_bounds(const DiskPoint& z, const DiskPoint& w) {
    const double r = pseudo_dist(z, w);
    return {r, (1.0 - r) / (1.0 + r), (1.0 + r) / (1.0 - r)};
}

double whitney_gamma() {
    const double d = whitney_diameter_bound();
    return (1.0 - d) / (1.0 + d);
}

std::vector<DiskPoint> square_grid(const WhitneySquare& q, int n) {
    if (n < 2) throw std::invalid_argument("square grid needs n >= 2");
    std::vector<DiskPoint> pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    const double gap_in = q.level == 1 ? 0.5 : 1.0 - q.r_inner();
    const double gap_out = q.side();
    for (int a = 0; a < n; ++a) {
        const double gap = gap_in + (gap_out - gap_in) * a / (n - 1);
        for (int b = 0; b < n; ++b) {
            const double t = q.theta_lo() + q.width() * b / (n - 1);
            pts.push_back(DiskPoint::polar(1.0 - gap, t));
        }
    }
    return pts;
}

std::vector<std::size_t> Lemma3Result::selected() const {
    std::vector<std::size_t> out;
    for (const auto& s : steps) out.push_back(s.square);
    return out;
}

std::vector<double> Lemma3Result::coefficients() const {
    std::vector<double> out;
    for (const auto& s : steps) out.push_back(s.coefficient);
    return out;
}

bool Lemma3Result::certificate_holds() const {
    return std::all_of(steps.begin(), steps.end(), [](const Lemma3Step& s) { return s.worst_slack >= 0.0; });
}

Lemma3Result lemma3_build(const std::vector<WhitneySquare>& squares, const std::vector<double>& bounds,
                          const Lemma3Options& options) {
    const std::size_t n = squares.size();
    if (n == 0 || bounds.size() != n) throw std::invalid_argument("lemma3_build needs matching non-empty inputs");
    std::set<WhitneySquare> seen;
    for (std::size_t j = 0; j < n; ++j) {
        if (!squares[j].valid()) throw std::invalid_argument("invalid Whitney square in lemma3 input");
        if (!seen.insert(squares[j]).second) throw std::invalid_argument("lemma3 input squares must be distinct");
        if (!(bounds[j] > 0.0) || !std::isfinite(bounds[j])) throw std::invalid_argument("lemma3 bounds must be positive");
        if (j > 0 && squares[j].level < squares[j - 1].level) {
            throw std::invalid_argument("lemma3 input must have non-increasing side length");
        }
    }

    std::vector<std::vector<DiskPoint>> grids(n);
    for (std::size_t j = 0; j < n; ++j) grids[j] = square_grid(squares[j], options.grid);
    std::vector<std::vector<double>> values(n);
    for (std::size_t j = 0; j < n; ++j) values[j].assign(grids[j].size(), 0.0);
    std::vector<double> sups(n, 0.0);

    // kernel_max[c][j] = max over the grid of Q_j of h_{Q_c}; filled lazily.
    std::vector<std::vector<double>> kernel_max(n, std::vector<double>(n, -1.0));
    auto kmax = [&](std::size_t c, std::size_t j) {
        double& slot = kernel_max[c][j];
        if (slot < 0.0) {
            double m = 0.0;
            const auto arc = squares[c].arc();
            for (const auto& p : grids[j]) m = std::max(m, harmonic_measure(p, arc));
            slot = m;
        }
        return slot;
    };

    Lemma3Result res;
    BoundaryMeasure measure;
    double partial = 0.0;
    int prev_level = -1;
    std::size_t next_index = 0;
    const int max_level = squares.back().level;

    for (int k = 0; k < options.max_steps; ++k) {
        const double mu = std::pow(2.0, 0.5 * (k + 1));
        // R = 2^{-m}: the largest dyadic radius below the previous selection such that every
        // square with l(Q) <= R still has room mu under its bound.
        int m = prev_level < 0 ? 0 : prev_level + 1;
        for (;; ++m) {
            const double r = std::ldexp(1.0, -m);
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) {
                if (squares[j].side() <= r && bounds[j] - sups[j] < mu) ok = false;
            }
            if (ok || m > max_level) break;
        }
        const double big_r = std::ldexp(1.0, -m);

        // First square with l(Q) <= R/2 whose kernel stays below 2^{-k-1} on every square with l >= R.
        const double kernel_cap = std::ldexp(1.0, -k - 1);
        std::size_t chosen = n;
        double chosen_bound = 0.0;
        for (std::size_t c = next_index; c < n; ++c) {
            if (squares[c].side() > 0.5 * big_r) continue;
            double worst = 0.0;
            for (std::size_t j = 0; j < n && worst < kernel_cap; ++j) {
                if (squares[j].side() >= big_r) worst = std::max(worst, kmax(c, j));
            }
            if (worst < kernel_cap) {
                chosen = c;
                chosen_bound = worst;
                break;
            }
        }
        if (chosen == n) {
            res.exhausted = true;
            res.stop_reason = "input exhausted at step " + std::to_string(k + 1) +
                              ": no square with l(Q) <= R/2 = " + std::to_string(0.5 * big_r) +
                              " keeps h_Q below 2^-" + std::to_string(k + 1) + " on the larger squares";
            break;
        }

        measure.add_arc(squares[chosen].arc(), mu);
        partial += std::pow(2.0, -0.5 * (k + 1));
        const auto arc = squares[chosen].arc();
        double worst_slack = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t p = 0; p < grids[j].size(); ++p) {
                values[j][p] += mu * harmonic_measure(grids[j][p], arc);
                s = std::max(s, values[j][p]);
            }
            sups[j] = s;
            worst_slack = std::min(worst_slack, bounds[j] + partial - s);
        }
        res.steps.push_back({chosen, mu, big_r, chosen_bound, partial, worst_slack});
        prev_level = squares[chosen].level;
        next_index = chosen + 1;
    }
    if (res.steps.empty()) {
        throw std::runtime_error("lemma3_build: " + res.stop_reason);
    }
    if (!res.exhausted) res.stop_reason = "step limit reached";

    res.h = HarmonicFn(std::move(measure));
    res.final_sups = sups;
    for (const auto& s : res.steps) res.selected_sups.push_back(sups[s.square]);
    return res;
}

}  // namespace nevmaj
