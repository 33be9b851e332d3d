#pragma once

#include <complex>
#include <cstdint>
#include <compare>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace nevmaj {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point of the open unit disc. Construction with |z| >= 1 throws std::domain_error.
class DiskPoint {
public:
    DiskPoint() = default;
    DiskPoint(double re, double im);
    explicit DiskPoint(Complex z);
    DiskPoint(double re) : DiskPoint(re, 0.0) {}

    static DiskPoint polar(double r, double theta);

    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    Complex value() const { return z_; }
    double abs() const { return std::abs(z_); }
    double norm() const { return std::norm(z_); }
    /// 1 - |z|, computed as (1 - |z|^2) / (1 + |z|).
    double gap() const;
    /// 1 - |z|^2.
    double gap2() const;
    /// Argument normalized to [0, 2pi).
    double arg() const;

    friend bool operator==(const DiskPoint& a, const DiskPoint& b) { return a.z_ == b.z_; }

private:
    Complex z_{0.0, 0.0};
};

/// Normalizes an angle to [0, 2pi).
double normalize_angle(double theta);

/// Closed boundary arc [lo, hi] with lo in [0, 2pi) and lo < hi <= lo + 2pi.
/// Arcs that cross angle 0 keep hi > 2pi.
class BoundaryArc {
public:
    BoundaryArc(double lo, double hi);
    static BoundaryArc full_circle() { return BoundaryArc(0.0, kTwoPi); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double length() const { return hi_ - lo_; }
    double mid() const { return 0.5 * (lo_ + hi_); }
    bool is_full() const { return length() >= kTwoPi; }
    bool contains(double theta) const;

private:
    double lo_;
    double hi_;
};

/// Dyadic Whitney square Q_{k,j} = {re^{it} : 2^-k <= 1-r < 2^-k+1, j 2pi 2^-k <= t < (j+1) 2pi 2^-k}.
///
/// Levels start at 1. The disc {|z| < 1/2} is the central cell and is not a square; with the
/// half-open radial convention a level-1 square is the arc of the circle |z| = 1/2 over its sector.
struct WhitneySquare {
    int level = 1;
    std::int64_t index = 0;

    double side() const;           ///< l(Q) = 2^-k
    double theta_lo() const;
    double theta_hi() const;
    double width() const { return theta_hi() - theta_lo(); }
    /// Inner and outer radius of the closure.
    double r_inner() const;
    double r_outer() const;
    DiskPoint center() const;      ///< z(Q)
    BoundaryArc arc() const;       ///< I_{k,j}, the radial projection of Q
    bool contains(const DiskPoint& z) const;
    bool valid() const;

    auto operator<=>(const WhitneySquare&) const = default;
};

/// Whitney neighborhood U(Q): squares whose closures meet the closure of Q, Q included.
struct Neighborhood {
    std::vector<WhitneySquare> squares;
    bool touches_central = false;
};

/// Euclidean description of a pseudohyperbolic disk D_rho(z0, t).
struct EuclideanDisk {
    Complex center;
    double radius;
    double area() const { return std::numbers::pi * radius * radius; }
};

double pseudo_dist(const DiskPoint& a, const DiskPoint& b);
/// Pseudohyperbolic distance between plain complex numbers of the disc (no validation).
double pseudo_dist(Complex a, Complex b);
/// log rho(a, b), accurate both for rho near 0 and rho near 1.
double log_pseudo_dist(Complex a, Complex b);

/// (a - z) / (1 - conj(a) z). An involution exchanging a and 0.
DiskPoint mobius(const DiskPoint& a, const DiskPoint& z);
Complex mobius(Complex a, Complex z);

EuclideanDisk pseudo_disk(const DiskPoint& center, double t);
/// Constant C1 with C1^-1 t^2 (1-|z|)^2 <= Area D_rho(z,t) <= C1 t^2 (1-|z|)^2 for t <= t_max.
double pseudo_disk_area_constant(double t_max);

/// The Whitney square containing z, or std::nullopt when z lies in the central cell.
std::optional<WhitneySquare> whitney_index(const DiskPoint& z);
Neighborhood whitney_neighbors(const WhitneySquare& q);

/// Pseudohyperbolic diameter of the closure of a level-k square.
double whitney_diameter(int level);
/// Level-independent bound sup_k diameter(Q_k) for k >= 1.
double whitney_diameter_bound();

/// Privalov shadow {xi : |xi - lambda/|lambda|| <= 1 - |lambda|}; the full circle for lambda = 0.
BoundaryArc privalov_shadow(const DiskPoint& lambda);

/// Minimum pairwise pseudohyperbolic distance; throws std::invalid_argument for fewer than 2 points.
double separation(std::span<const DiskPoint> points);

}  // namespace nevmaj
