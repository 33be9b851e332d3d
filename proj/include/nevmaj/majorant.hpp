#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nevmaj/blaschke.hpp"
#include "nevmaj/harmonic.hpp"
#include "nevmaj/simplex.hpp"

namespace nevmaj {

struct Constraint {
    DiskPoint z;
    double value = 0.0;  ///< required lower bound v_i >= 0 for H(z_i)
};

/// Discretized statement "H(z_i) >= v_i for all i".
struct ConstraintSet {
    std::vector<Constraint> constraints;

    std::size_t size() const { return constraints.size(); }
    bool empty() const { return constraints.empty(); }
    void add(const DiskPoint& z, double value);
};

struct SolveReport {
    double optimal_mass = 0.0;
    BoundaryMeasure measure;           ///< atoms on the boundary grid
    LpStatus status = LpStatus::optimal;
    std::vector<double> slack;         ///< measure(z_i) - v_i, per constraint
    std::vector<double> dual;          ///< y_i >= 0 with sum y_i P(z_i, xi_j) <= 1 and sum y_i v_i = mass
    std::vector<double> grid;          ///< boundary angles offered to the LP
    std::size_t rounds = 0;            ///< row/column generation rounds
    std::size_t pivots = 0;
    std::string message;

    bool ok() const { return status == LpStatus::optimal; }
};

struct MinMassOptions {
    int grid_n = 256;          ///< equispaced boundary angles before adding projections
    std::size_t batch = 48;    ///< violated rows/columns added per generation round
    std::size_t max_rounds = 400;
    double tolerance = 1e-11;  ///< relative violation threshold for generation
    SimplexOptions simplex;
};

/// n equispaced angles plus the radial projections of every nonzero constraint point, sorted and
/// deduplicated.
std::vector<double> boundary_grid(const ConstraintSet& constraints, int n);

/// Minimal total mass of a discrete positive measure on `grid` whose Poisson integral dominates
/// every constraint. Rows are scaled by 1 - |z_i|^2 and solved by row and column generation over
/// the exact simplex; the result is the optimum of the full finite LP.
SolveReport min_mass(const ConstraintSet& constraints, const std::vector<double>& grid,
                     const MinMassOptions& options = {});
SolveReport min_mass(const ConstraintSet& constraints, const MinMassOptions& options = {});

enum class PointKind { uniform, probe };

struct TargetPoint {
    DiskPoint z;
    double value = 0.0;  ///< -log|B(z)|, evaluated in the anchor frame for probes
    int level = 0;       ///< 0 for the central cell
    PointKind kind = PointKind::uniform;
    bool extremal = false;  ///< a(Q): sample argmax of -log|B| on a square meeting rho(., Lambda) <= 1/2
};

struct SampleOptions {
    int per_square = 64;
    double filter_scale = 1.0;  ///< keep z with rho(z, Lambda) >= exp(-s H(z))
    std::uint64_t seed = 0;
    bool probes = true;
    int anchors_per_square = 4;
    int probe_rings = 12;
    int probe_directions = 16;
};

/// Deterministic sample of the set {rho(z, Lambda) >= e^{-sH(z)}} over the central cell and every
/// Whitney square up to `depth`, plus pseudo-circles around the heaviest zeros of each occupied
/// square. Points carry their level so that samples at smaller depth are subsets.
std::vector<TargetPoint> sample_target_set(const ZeroSet& zeros, const HarmonicFn& h, int depth,
                                           const SampleOptions& options = {});

enum class Classification { bounded, growth, inconclusive };
std::string to_string(Classification c);

/// Bounded if the last three masses are within a factor 1.5; growth if they increase monotonically
/// by at least 2x; otherwise inconclusive. Fewer than three values are inconclusive unless all zero.
Classification classify(const std::vector<double>& masses);

struct SweepRow {
    int depth = 0;
    std::size_t count = 0;
    double mass = 0.0;
    double runtime_ms = 0.0;
    LpStatus status = LpStatus::optimal;
};

struct SweepRecord {
    std::vector<SweepRow> rows;
    double growth_exponent = 0.0;  ///< slope of log mass against log(1/l) = depth log 2
    Classification classification = Classification::inconclusive;

    std::vector<double> masses() const;
    bool ok() const;
};

struct SweepOptions {
    SampleOptions sample;
    MinMassOptions solver;
    bool timing = false;  ///< record wall-clock runtimes; off keeps records reproducible
};

/// Mass of the cheapest discretized majorant of -log|B| on the filtered sample, per depth. The
/// sample is built once at the largest depth and restricted by level, and every depth shares one
/// boundary grid, so the masses are nondecreasing.
SweepRecord majorant_diagnostic(const ZeroSet& zeros, const HarmonicFn& h, const std::vector<int>& depths,
                                const SweepOptions& options = {});

/// Same engine with filter level H1; bounded masses are evidence for |B| >= e^{-H2} off the
/// e^{-H1}-neighborhood of the zeros with H2(0) at most the final mass.
SweepRecord wep_gap(const ZeroSet& zeros, const HarmonicFn& h1, const std::vector<int>& depths,
                    const SweepOptions& options = {});

struct CoronaData {
    ConstraintSet constraints;
    std::size_t dropped = 0;  ///< grid points where every input vanishes
};

/// Constraints max(0, -log(|B| + sum_i |f_i|)) over the grid, with each |f_i| a Blaschke modulus.
CoronaData corona_data(const ZeroSet& b, const std::vector<ZeroSet>& witnesses,
                       const std::vector<DiskPoint>& grid);

}  // namespace nevmaj
