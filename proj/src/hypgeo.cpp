#include "nevmaj/hypgeo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace nevmaj {

namespace {

std::int64_t wrap_index(std::int64_t j, int level) {
    const std::int64_t n = std::int64_t{1} << level;
    return ((j % n) + n) % n;
}

}  // namespace

DiskPoint::DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

DiskPoint::DiskPoint(Complex z) : z_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::norm(z) >= 1.0) {
        throw std::domain_error("point outside the open unit disc: (" + std::to_string(z.real()) +
                                ", " + std::to_string(z.imag()) + ")");
    }
}

DiskPoint DiskPoint::polar(double r, double theta) {
    return DiskPoint(std::polar(r, theta));
}

double DiskPoint::gap2() const { return 1.0 - std::norm(z_); }

double DiskPoint::gap() const { return gap2() / (1.0 + std::abs(z_)); }

double DiskPoint::arg() const { return normalize_angle(std::arg(z_)); }

double normalize_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

BoundaryArc::BoundaryArc(double lo, double hi) {
    if (!(hi > lo) || hi - lo > kTwoPi * (1.0 + 1e-15)) {
        throw std::invalid_argument("boundary arc needs lo < hi <= lo + 2pi");
    }
    const double len = std::min(hi - lo, kTwoPi);
    lo_ = normalize_angle(lo);
    hi_ = lo_ + len;
}

bool BoundaryArc::contains(double theta) const {
    if (is_full()) return true;
    const double t = normalize_angle(theta);
    return (t >= lo_ && t <= hi_) || (t + kTwoPi >= lo_ && t + kTwoPi <= hi_);
}

double WhitneySquare::side() const { return std::ldexp(1.0, -level); }

double WhitneySquare::theta_lo() const { return kTwoPi * std::ldexp(static_cast<double>(index), -level); }

double WhitneySquare::theta_hi() const {
    return kTwoPi * std::ldexp(static_cast<double>(index + 1), -level);
}

double WhitneySquare::r_inner() const { return 1.0 - std::ldexp(1.0, -level + 1); }

double WhitneySquare::r_outer() const { return 1.0 - side(); }

DiskPoint WhitneySquare::center() const {
    const double r = level == 1 ? 0.5 : 1.0 - 1.5 * side();
    return DiskPoint::polar(r, 0.5 * (theta_lo() + theta_hi()));
}

BoundaryArc WhitneySquare::arc() const { return BoundaryArc(theta_lo(), theta_hi()); }

bool WhitneySquare::valid() const {
    return level >= 1 && level < 62 && index >= 0 && index < (std::int64_t{1} << level);
}

bool WhitneySquare::contains(const DiskPoint& z) const {
    const auto q = whitney_index(z);
    return q && *q == *this;
}

double pseudo_dist(Complex a, Complex b) {
    const Complex den = 1.0 - std::conj(b) * a;
    return std::abs(a - b) / std::abs(den);
}

double pseudo_dist(const DiskPoint& a, const DiskPoint& b) {
    return pseudo_dist(a.value(), b.value());
}

double log_pseudo_dist(Complex a, Complex b) {
    const Complex den = 1.0 - std::conj(b) * a;
    const double den2 = std::norm(den);
    // 1 - rho^2 = (1-|a|^2)(1-|b|^2) / |1 - conj(b) a|^2
    const double q = (1.0 - std::norm(a)) * (1.0 - std::norm(b)) / den2;
    if (q < 0.5) return 0.5 * std::log1p(-q);
    const double num = std::abs(a - b);
    if (num == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(num) - 0.5 * std::log(den2);
}

Complex mobius(Complex a, Complex z) { return (a - z) / (1.0 - std::conj(a) * z); }

DiskPoint mobius(const DiskPoint& a, const DiskPoint& z) {
    return DiskPoint(mobius(a.value(), z.value()));
}

EuclideanDisk pseudo_disk(const DiskPoint& center, double t) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("pseudo_disk radius must lie in (0,1)");
    const double t2 = t * t;
    const double den = 1.0 - t2 * center.norm();
    return {center.value() * ((1.0 - t2) / den), t * center.gap2() / den};
}

double pseudo_disk_area_constant(double t_max) {
    if (!(t_max > 0.0 && t_max < 1.0)) throw std::invalid_argument("t_max must lie in (0,1)");
    // Area / (t^2 (1-|z|)^2) = pi (1+|z|)^2 / (1 - t^2 |z|^2)^2, which lies in [pi, 4 pi / (1-t^2)^2].
    const double den = 1.0 - t_max * t_max;
    return 4.0 * std::numbers::pi / (den * den);
}

std::optional<WhitneySquare> whitney_index(const DiskPoint& z) {
    const double d = 1.0 - z.abs();
    if (d > 0.5) return std::nullopt;
    int k = static_cast<int>(std::ceil(-std::log2(d)));
    k = std::max(k, 1);
    while (d < std::ldexp(1.0, -k)) ++k;
    while (k > 1 && d >= std::ldexp(1.0, -k + 1)) --k;
    const double width = kTwoPi * std::ldexp(1.0, -k);
    const std::int64_t n = std::int64_t{1} << k;
    auto j = static_cast<std::int64_t>(std::floor(z.arg() / width));
    j = std::clamp<std::int64_t>(j, 0, n - 1);
    return WhitneySquare{k, j};
}

Neighborhood whitney_neighbors(const WhitneySquare& q) {
    if (!q.valid()) throw std::invalid_argument("invalid Whitney square");
    std::set<WhitneySquare> out;
    const int k = q.level;
    const std::int64_t j = q.index;
    for (std::int64_t d = -1; d <= 1; ++d) out.insert({k, wrap_index(j + d, k)});
    // Level k+1 squares share the outer circle; 2j, 2j+1 lie below Q, 2j-1 and 2j+2 touch its corners.
    for (std::int64_t d = -1; d <= 2; ++d) out.insert({k + 1, wrap_index(2 * j + d, k + 1)});
    Neighborhood nb;
    if (k == 1) {
        nb.touches_central = true;
    } else {
        const std::int64_t parent = j / 2;
        out.insert({k - 1, parent});
        out.insert({k - 1, wrap_index(j % 2 == 0 ? parent - 1 : parent + 1, k - 1)});
    }
    nb.squares.assign(out.begin(), out.end());
    return nb;
}

double whitney_diameter(int level) {
    const WhitneySquare q{level, 0};
    constexpr int n = 64;
    std::vector<Complex> boundary;
    boundary.reserve(4 * n);
    const double r_in = std::max(q.r_inner(), 0.5);
    const double r_out = q.r_outer();
    for (int i = 0; i <= n; ++i) {
        const double s = static_cast<double>(i) / n;
        const double t = q.theta_lo() + s * q.width();
        boundary.push_back(std::polar(r_in, t));
        boundary.push_back(std::polar(r_out, t));
        const double r = r_in + s * (r_out - r_in);
        boundary.push_back(std::polar(r, q.theta_lo()));
        boundary.push_back(std::polar(r, q.theta_hi()));
    }
    double best = 0.0;
    for (std::size_t a = 0; a < boundary.size(); ++a)
        for (std::size_t b = a + 1; b < boundary.size(); ++b)
            best = std::max(best, pseudo_dist(boundary[a], boundary[b]));
    return best;
}

double whitney_diameter_bound() {
    static const double bound = [] {
        double best = 0.0;
        for (int k = 1; k <= 40; ++k) best = std::max(best, whitney_diameter(k));
        return best;
    }();
    return bound;
}

BoundaryArc privalov_shadow(const DiskPoint& lambda) {
    if (lambda.value() == Complex(0.0, 0.0)) return BoundaryArc::full_circle();
    const double half = 2.0 * std::asin(0.5 * lambda.gap());
    return BoundaryArc(lambda.arg() - half, lambda.arg() + half);
}

double separation(std::span<const DiskPoint> points) {
    if (points.size() < 2) throw std::invalid_argument("separation needs at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
            best = std::min(best, pseudo_dist(points[a], points[b]));
    return best;
}

}  // namespace nevmaj
