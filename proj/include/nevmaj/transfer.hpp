#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nevmaj/blaschke.hpp"
#include "nevmaj/harmonic.hpp"
#include "nevmaj/majorant.hpp"

namespace nevmaj {

struct Lemma4Options {
    std::size_t candidates = 4096;  ///< spiral candidates inside D_rho(z, r0)
};

struct Lemma4Result {
    DiskPoint point;         ///< z~
    double radius = 0.0;     ///< r0 = exp(-H(z) / C0)
    double rho_to_z = 0.0;   ///< rho(z~, z) <= r0
    double neg_log_rho_to_zeros = 0.0;  ///< -log rho(z~, Lambda) <= H(z~)
    double h_value = 0.0;    ///< H(z~)
    std::size_t tried = 0;
    std::size_t packed = 0;
};

/// Finds z~ near z with rho(z~, Lambda) >= e^{-H(z~)} by greedy packing of disjoint disks of radius
/// e^{-H} around spiral candidates in D_rho(z, e^{-H(z)/C0}). Throws std::invalid_argument when the
/// hypothesis e^{H(z)} >= max(C0, #Lambda in D_rho(z, 1/2)) fails and std::runtime_error when no
/// packed disk misses Lambda.
Lemma4Result lemma4_search(const ZeroSet& zeros, const HarmonicFn& h, const DiskPoint& z, double c0,
                           const Lemma4Options& options = {});

struct TransferRow {
    DiskPoint z;
    DiskPoint z_tilde;
    double lhs = 0.0;  ///< -log|B(z)|
    double rhs = 0.0;  ///< -log|B(z~)| + H_Lambda(z~)
    double ratio = 1.0;
};

struct TransferReport {
    std::vector<TransferRow> rows;
    std::size_t skipped = 0;  ///< samples outside C0^{-1} >= rho(z, Lambda) >= e^{-C H(z)}
    double max_ratio = 0.0;
};

/// Evaluates log|B(z)|^{-1} <= C1 (log|B(z~)|^{-1} + H_Lambda(z~)) sample by sample and reports the
/// empirical ratio of the two sides.
TransferReport theorem3_transfer_check(const ZeroSet& zeros, const HarmonicFn& h, double c,
                                       const std::vector<DiskPoint>& samples, double c0,
                                       const Lemma4Options& options = {});

/// Deterministic samples around the zeros with rho(z, Lambda) log-uniform in [e^{-C H}, 1/C0].
std::vector<DiskPoint> transfer_samples(const ZeroSet& zeros, const HarmonicFn& h, double c, double c0,
                                        std::size_t count, std::uint64_t seed = 0);

struct Theorem4Row {
    WhitneySquare square;
    bool central = false;  ///< the central cell, with center 0 and side 1
    std::int64_t n = 0;
    double lhs = 0.0;  ///< N(Q) H(z(Q))
    double rhs = 0.0;  ///< H1(z(Q))
    bool pass = true;
};

struct Theorem4Report {
    std::vector<Theorem4Row> rows;
    bool hypothesis = true;
    double corollary_sum = 0.0;  ///< sum N(Q) H(z(Q)) l(Q)
    bool majorant_checked = false;
    bool majorant_holds = false;
    std::size_t sample_size = 0;
    double worst_margin = 0.0;  ///< min over the sample of majorant - (-log|B|)
    double worst_ratio = 0.0;   ///< max over the sample of -log|B| / majorant
    double c1 = 0.0;
    double c3 = 0.0;
};

/// Checks N(Q) H(z(Q)) <= H1(z(Q)) on occupied squares up to `depth`, the corollary sum, and, when the
/// hypothesis holds, that C1 H_Lambda + C3 H1 dominates -log|B| on the level-H filtered sample.
Theorem4Report theorem4_check(const ZeroSet& zeros, const HarmonicFn& h, const HarmonicFn& h1, int depth,
                              const SampleOptions& sample = {});

/// H1 = sum N(Q) H(z(Q)) h_Q over occupied squares (the central cell contributes N H(0) as a constant).
HarmonicFn corollary_h1(const ZeroSet& zeros, const HarmonicFn& h);

}  // namespace nevmaj
