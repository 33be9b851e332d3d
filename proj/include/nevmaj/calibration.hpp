#pragma once

#include <cstdint>
#include <vector>

#include "nevmaj/blaschke.hpp"
#include "nevmaj/hypgeo.hpp"

namespace nevmaj {

/// Deterministic Halton sample of a Whitney square: 1 - |z| log-uniform over the radial extent,
/// angle uniform over the sector.
std::vector<DiskPoint> square_samples(const WhitneySquare& q, int count);

struct HqLevel {
    int level = 0;
    double min_inside = 1.0;  ///< min of h_Q over the samples of Q
    double max_value = 0.0;   ///< max of h_Q over every probed point
    double max_scaled = 0.0;  ///< max of h_Q(z) (1 - |z|) / l(Q) over samples of Q and its neighbors
};

struct HqCalibration {
    std::vector<HqLevel> levels;
    double c_lower = 1.0;  ///< min over levels of min_inside
    double c_upper = 1.0;  ///< 1 / max over levels of max_scaled
    double c = 1.0;        ///< min(c_lower, c_upper)
};

/// Calibrates c with c <= h_Q on Q and h_Q(z) <= l(Q) / (c (1 - |z|)) over all squares up to
/// `max_level`. The upper bound is probed on Q, its neighbors and the radius through its center.
HqCalibration calibrate_hq(int max_level, int samples);

/// Zeros (1 - 2^{-j}) e^{i theta_j}, j = 1..depth, with seeded uniform angles.
ZeroSet geometric_zero_set(int depth, std::uint64_t seed);

/// sup of -log|B| / H_Lambda over the rho(z, Lambda) >= 1/2 sample up to `depth`.
double lemma1_ratio(const ZeroSet& zeros, int depth, int per_square = 16);

/// max of lemma1_ratio over `sets` geometric zero sets.
double calibrate_lemma1(int sets, int depth, std::uint64_t seed);

struct NeighborCalibration {
    int count = 0;         ///< cells meeting one D_rho(z, 1/2)
    double harnack = 1.0;  ///< max (1 + r) / (1 - r) with r = rho(z, center of such a cell)
};

NeighborCalibration calibrate_neighbors();

}  // namespace nevmaj
