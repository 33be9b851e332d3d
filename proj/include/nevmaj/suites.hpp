#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nevmaj/blaschke.hpp"
#include "nevmaj/constructions.hpp"

namespace nevmaj {

/// One checked property: the measured value, the threshold it is compared against, and the verdict.
struct Property {
    std::string name;
    double measured = 0.0;
    std::string relation;  ///< "<=", ">=", "<" or "finite"
    double threshold = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Property> properties;

    bool pass() const;
    /// Names of the failing properties, comma separated.
    std::string failures() const;
    /// "name measured relation threshold" for every property, for log lines.
    std::string summary() const;
};

/// Mobius invariance of rho on 10^4 random triples, Whitney tiling membership on 10^4 points and the
/// pseudo-disk boundary against sampled pseudo-circles.
SuiteReport geometry_suite(std::uint64_t seed = 1);

/// Closed-form harmonic measure against quadrature on 10^3 pairs, the three h_Q bounds on every
/// square to level 12 with the calibrated c, per-level minimum spread for levels >= 4, and the mean
/// value property.
SuiteReport harmonic_suite(std::uint64_t seed = 2);

/// Constraint and grid monotonicity on nested instances, agreement with vertex enumeration on small
/// instances, feasibility of the returned measure and LP duality.
SuiteReport lp_suite(std::uint64_t seed = 3, int instances = 100);

/// sup of -log|B| / H_Lambda on the rho >= 1/2 sample for geometric zero sets at depths 8 and 16.
SuiteReport lemma1_suite(std::uint64_t seed = 100, int sets = 10);

/// The 50-square Lemma 3 input: squares at levels 3..12, five per level, with bounds growing like
/// 2^{k/2}.
std::pair<std::vector<WhitneySquare>, std::vector<double>> lemma3_input();

/// lemma3_build on lemma3_input: the partial-sum certificate and the lower bound on selected sups.
SuiteReport lemma3_suite();

/// Transfer ratios of the two-zero set {0.6, -0.3 + 0.5i} with H = 4, C = 2, at 250 and 1000 samples.
SuiteReport thm3_suite(std::uint64_t seed = 0);

/// Ten points (1 - 2^{-j}) e^{0.7 i j} with multiplicities 1 + j mod 3: the explicit majorant with
/// H1 = corollary_h1 / c over the level-`depth` filtered sample.
SuiteReport thm4_suite(int depth = 10);

/// Claims 1 and 3 on every uncapped square in the top half of the accepted levels.
SuiteReport claims_suite(const Thm5bResult& built, const Thm5bParams& params);

}  // namespace nevmaj
