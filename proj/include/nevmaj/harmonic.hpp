#pragma once

#include <string>
#include <vector>

#include "nevmaj/blaschke.hpp"
#include "nevmaj/hypgeo.hpp"

namespace nevmaj {

/// (1 - |z|^2) / |e^{i theta} - z|^2
double poisson_kernel(const DiskPoint& z, double theta);

/// Normalized Poisson integral of the indicator of an arc, in [0, 1]. Closed form: the arc is
/// pushed through the automorphism sending z to 0 and its image length is divided by 2pi.
double harmonic_measure(const DiskPoint& z, const BoundaryArc& arc);

struct Atom {
    double theta;
    double mass;
};

struct ArcPiece {
    BoundaryArc arc;
    double density;  ///< per radian; the piece carries mass density * length / 2pi
};

/// Finite positive measure on the circle: atoms plus uniform densities on arcs.
class BoundaryMeasure {
public:
    BoundaryMeasure() = default;
    BoundaryMeasure(std::vector<Atom> atoms, std::vector<ArcPiece> arcs);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<ArcPiece>& arcs() const { return arcs_; }

    void add_atom(double theta, double mass);
    void add_arc(const BoundaryArc& arc, double density);
    void append(const BoundaryMeasure& other, double scale = 1.0);

    double total_mass() const;
    /// Poisson integral at z.
    double poisson_integral(const DiskPoint& z) const;

private:
    std::vector<Atom> atoms_;
    std::vector<ArcPiece> arcs_;
};

/// Positive harmonic function represented by the Poisson integral of its boundary measure.
class HarmonicFn {
public:
    HarmonicFn() = default;
    explicit HarmonicFn(BoundaryMeasure measure) : measure_(std::move(measure)) {}

    static HarmonicFn constant(double c);
    /// mass * P(z, theta)
    static HarmonicFn poisson_atom(double theta, double mass = 1.0);
    static HarmonicFn h_square(const WhitneySquare& q);
    static HarmonicFn h_lambda(const ZeroSet& zeros);

    double operator()(const DiskPoint& z) const { return measure_.poisson_integral(z); }
    double at_origin() const { return measure_.total_mass(); }
    const BoundaryMeasure& measure() const { return measure_; }

    HarmonicFn scaled(double s) const;
    HarmonicFn operator+(const HarmonicFn& other) const;

private:
    BoundaryMeasure measure_;
};

/// h_Q(z): harmonic measure of the radial projection I(Q).
double h_square(const WhitneySquare& q, const DiskPoint& z);

/// H_Lambda(z) = sum_k N_k * int_{I_k} P(z, xi) |d xi|, with the unnormalized arc-length element.
double h_lambda(const ZeroSet& zeros, const DiskPoint& z);

struct HarnackBounds {
    double r;   ///< pseudohyperbolic distance
    double lo;  ///< (1 - r) / (1 + r)
    double hi;  ///< (1 + r) / (1 - r)
};

/// Sharp bounds on H(z) / H(w) over all positive harmonic H.
HarnackBounds harnack_bounds(const DiskPoint& z, const DiskPoint& w);

/// gamma with gamma H(z') <= H(z) <= H(z') / gamma for z, z' in one Whitney square.
double whitney_gamma();

/// n x n closed grid over a Whitney square (radius and angle, endpoints included).
std::vector<DiskPoint> square_grid(const WhitneySquare& q, int n);

struct Lemma3Step {
    std::size_t square;        ///< index into the input list
    double coefficient;        ///< mu_m = 2^{m/2}
    double threshold_r;        ///< R
    double kernel_bound;       ///< max of h over squares with l >= R (must be < 2^{-m})
    double partial_constant;   ///< sum_{i<=m} 2^{-i/2}
    double worst_slack;        ///< min_j (M_j + partial_constant - sup_{Q_j} H^{(m)}), >= 0
};

struct Lemma3Result {
    HarmonicFn h;
    std::vector<Lemma3Step> steps;
    std::vector<double> final_sups;      ///< grid sup of H on each input square
    std::vector<double> selected_sups;   ///< grid sup of H on the m-th selected square
    bool exhausted = false;              ///< stopped because the finite input ran out
    std::string stop_reason;

    std::vector<std::size_t> selected() const;
    std::vector<double> coefficients() const;
    bool certificate_holds() const;
};

struct Lemma3Options {
    int grid = 32;
    int max_steps = 64;
};

/// Inductive builder H = sum_m 2^{m/2} h_{Q_{j_m}} keeping sup_{Q_j} H^{(k)} <= M_j + sum 2^{-m/2}.
/// Squares must be distinct with non-increasing side length and bounds positive.
/// Throws std::invalid_argument on bad input and std::runtime_error if not even one square can be
/// selected; later exhaustion is reported through `exhausted`.
Lemma3Result lemma3_build(const std::vector<WhitneySquare>& squares, const std::vector<double>& bounds,
                          const Lemma3Options& options = {});

}  // namespace nevmaj
