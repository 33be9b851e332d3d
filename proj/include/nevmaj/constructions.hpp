#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "nevmaj/blaschke.hpp"
#include "nevmaj/harmonic.hpp"

namespace nevmaj {

struct FamilyResult {
    ZeroSet zeros;
    double separation = 1.0;   ///< eta; 1 for a single point
    double disk_radius = 0.0;  ///< eta / 4
    bool disjoint = true;      ///< the disks D_rho(lambda_j, eta/4) are pairwise disjoint
};

/// The family B(Lambda, N): separated points with prescribed multiplicities. Throws
/// std::invalid_argument on zero separation, mismatched sizes, or multiplicities below 1.
FamilyResult family_blaschke(const std::vector<DiskPoint>& points, const std::vector<std::int64_t>& mults);

struct Thm2Result {
    std::vector<WhitneySquare> squares;  ///< occupied neighborhoods, decreasing side length
    std::vector<std::int64_t> m;         ///< M(Q_j)
    std::vector<double> tail;            ///< t_j = sum_{i >= j} M(Q_i) l(Q_i)
    std::vector<double> weights;         ///< M~_j = M(Q_j) / sqrt(t_j)
    std::vector<double> bounds;          ///< M~_j / M(Q_j), the Lemma 3 input
    Lemma3Result lemma3;
    bool bound_check = false;  ///< grid sup of H on Q_j <= bound_j + partial constant, every j
    bool sups_increase = false;  ///< sups on the selected squares increase along the selection
};

/// Weights of the sufficiency half of Theorem 2 and the harmonic function built from them by the
/// Lemma 3 builder. Uses squares with M(Q) > 0 up to `depth`.
Thm2Result thm2_weights(const ZeroSet& zeros, int depth, const Lemma3Options& options = {});

struct CheckValue {
    double value = 0.0;
    bool pass = true;
};

/// One accepted or rejected square of a construction, with named inequality margins.
struct ConstructionRecord {
    int k = 0;  ///< level of the square
    std::int64_t index = 0;
    DiskPoint z;
    double h = 0.0;
    double r = 0.0;  ///< R_j (0 when not used)
    std::int64_t n = 0;
    std::int64_t placed = 0;
    bool capped = false;
    bool accepted = false;
    std::string branch;  ///< how the square was found
    std::string note;    ///< reason for rejection, if any
    std::map<std::string, CheckValue> checks;
};

using ConstructionLog = std::vector<ConstructionRecord>;

struct Thm5aOptions {
    int rays = 64;
    int scan_steps = 10;       ///< radii 1 - 4^{-j}, j = 1..scan_steps, in the ray scan
    double min_growth = 4.0;   ///< required growth of H1/H2 along the chosen ray
};

struct Thm5aResult {
    ZeroSet zeros;
    ConstructionLog log;
    double theta = 0.0;  ///< direction of the chosen ray
};

/// Points a_j = (1 - 4^{-j}) e^{i theta} along the ray where H1/H2 grows fastest, multiplicities
/// N_j = ceil(1 / ((1 - |a_j|) sqrt(H1 H2))), thinned so that the sumN terms are summable.
/// Throws std::runtime_error when H1/H2 stays bounded on every scanned ray.
Thm5aResult thm5a_build(const HarmonicFn& h1, const HarmonicFn& h2, int count, const Thm5aOptions& options = {});

struct Thm5bParams {
    HarmonicFn h;
    double eta0 = 1.0;
    double eta = 0.5;
    int max_depth = 14;
    std::int64_t cap = 100000;  ///< per-square limit on packed points
    int spiral_factor = 4;      ///< spiral candidates per unit of (R / separation)^2

    void validate() const;
};

struct Thm5bResult {
    ZeroSet zeros;
    ConstructionLog log;  ///< every scanned level, accepted or not
    double gamma = 0.0;

    std::vector<const ConstructionRecord*> accepted() const;
};

/// The Theorem 5(b) sequence: one square per level by the max/band rule, R = exp(-sqrt(H)), N by the
/// integer-part rule, a multiple zero at the center plus a greedy e^{-(1+eta)H}-separated packing
/// of D_rho(z, R), squares kept 1/2-separated and thinned so the summable terms are <= 2^{-accepted}.
Thm5bResult thm5b_build(const Thm5bParams& params);

struct ClaimRow {
    int k = 0;
    std::int64_t index = 0;
    bool capped = false;
    bool claim1 = false;         ///< no sampled point of D_rho(z_k, R_k) passes the level-H filter
    std::size_t claim1_samples = 0;
    bool claim3 = false;         ///< a point on the e^{-(1+eta)H(z_k)} circle, inside Q_k, passes level (1+eta0)H
    bool claim3_in_square = false;  ///< some circle point lies in Q_k
    double lower_bound_margin = -std::numeric_limits<double>::infinity();  ///< -log|B(zeta)| - N (1+eta) H(z_k)
};

struct ClaimsOptions {
    int claim1_samples = 512;
    int claim3_directions = 256;
};

std::vector<ClaimRow> claims_check(const ZeroSet& zeros, const Thm5bResult& built, const Thm5bParams& params,
                                   const ClaimsOptions& options = {});

}  // namespace nevmaj
