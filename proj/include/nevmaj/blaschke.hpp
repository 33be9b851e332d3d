#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "nevmaj/hypgeo.hpp"

namespace nevmaj {

struct Zero {
    DiskPoint point;
    std::int64_t mult = 1;
};

/// Zero divisor of a finite Blaschke product: points with positive multiplicities.
class ZeroSet {
public:
    ZeroSet() = default;
    explicit ZeroSet(std::vector<Zero> zeros);
    static ZeroSet simple(std::span<const DiskPoint> points);

    const std::vector<Zero>& zeros() const { return zeros_; }
    std::size_t size() const { return zeros_.size(); }
    bool empty() const { return zeros_.empty(); }
    const Zero& operator[](std::size_t i) const { return zeros_[i]; }
    std::int64_t total_multiplicity() const;

    void add(const DiskPoint& p, std::int64_t mult = 1);
    void append(const ZeroSet& other);

private:
    std::vector<Zero> zeros_;
};

double blaschke_sum(const ZeroSet& zeros);

/// log|B(z)| = sum N_k log rho(z, lambda_k); -inf at a zero, never positive.
double log_modulus(const ZeroSet& zeros, const DiskPoint& z);

/// -log rho(z, Lambda), with rho(z, {}) = 1.
double neg_log_distance(const ZeroSet& zeros, const DiskPoint& z);

/// Evaluation at zeta = mobius(anchor, u) where |u| = exp(-tau), carried out in the Mobius frame
/// of the anchor so that zeros can be approached far below double resolution.
struct LocalEvaluation {
    double neg_log_modulus;   ///< -log|B(zeta)|
    double neg_log_distance;  ///< -log rho(zeta, Lambda)
};
LocalEvaluation evaluate_local(const ZeroSet& zeros, const DiskPoint& anchor, double tau, double phi);

struct CarlesonQuantity {
    double value;       ///< prod_{j != k} rho(lambda_k, lambda_j)^{N_j}
    double log_value;
    bool multiple;      ///< lambda_k has multiplicity > 1; value is 0 by convention
};
CarlesonQuantity carleson_quantity(const ZeroSet& zeros, std::size_t k);

struct InterpolationRow {
    double log_carleson;
    double h_value;
    double margin;  ///< log carleson + H(lambda_k)
    bool pass;
};

/// Nevanlinna interpolation test prod_{j!=k} rho(lambda_k, lambda_j) >= exp(-H(lambda_k)).
/// Throws std::invalid_argument when a multiplicity exceeds 1.
std::vector<InterpolationRow> nevanlinna_interp_check(
    const ZeroSet& zeros, const std::function<double(const DiskPoint&)>& h);

struct SquareCounts {
    std::int64_t n = 0;  ///< N(Q): zeros in Q
    std::int64_t m = 0;  ///< M(Q): zeros in U(Q)
};

struct SquareCensus {
    std::map<WhitneySquare, SquareCounts> squares;
    std::int64_t central = 0;

    SquareCounts at(const WhitneySquare& q) const;
    std::int64_t total_n() const;
};

SquareCensus census(const ZeroSet& zeros);

}  // namespace nevmaj
