#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nevmaj {

enum class LpStatus { optimal, infeasible_numerics, unbounded_impossible };

std::string to_string(LpStatus s);

/// Row-major dense matrix.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Solution of the covering LP  min 1.m  s.t.  A m >= v, m >= 0  with A > 0 entrywise.
struct CoveringSolution {
    LpStatus status = LpStatus::optimal;
    double objective = 0.0;
    std::vector<double> primal;  ///< m, one per column of A
    std::vector<double> dual;    ///< y, one per row of A
    std::size_t pivots = 0;
    std::string message;
};

struct SimplexOptions {
    std::size_t max_pivots = 2'000'000;
    double tolerance = 1e-11;
};

/// Solves the covering LP through its packing dual  max v.y  s.t.  A^T y <= 1, y >= 0, whose slack
/// basis is feasible. Dense tableau; the entering variable has the largest reduced cost (lowest index
/// on ties) until 50 consecutive degenerate pivots, then Bland's lowest-index rule until the
/// objective moves again, so the method cannot cycle. Ratio ties leave by lowest basic index. The
/// primal m is read off the reduced costs of the slacks, and both solutions are then recomputed from
/// the final basis by LU to remove tableau drift.
CoveringSolution solve_covering(const DenseMatrix& a, const std::vector<double>& v,
                                const SimplexOptions& options = {});

}  // namespace nevmaj
