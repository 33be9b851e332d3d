#include "nevmaj/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nevmaj {

namespace {

// Smallest tableau entry accepted as a pivot. Entries are O(1) multiples of kernel values bounded by
// 2, so anything smaller is roundoff and pivoting on it wrecks the tableau.
constexpr double kPivotTolerance = 1e-9;

// Consecutive degenerate pivots after which the entering rule switches to Bland's.
constexpr std::size_t kBlandAfter = 50;

// Solves the k x k system M x = b (M row-major) by LU with partial pivoting, in place. False when
// a pivot underflows.
bool lu_solve(std::vector<double> mat, std::vector<double>& b, std::size_t k) {
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < k; ++r)
            if (std::abs(mat[r * k + c]) > std::abs(mat[p * k + c])) p = r;
        if (std::abs(mat[p * k + c]) < 1e-300) return false;
        if (p != c) {
            for (std::size_t q = 0; q < k; ++q) std::swap(mat[p * k + q], mat[c * k + q]);
            std::swap(b[p], b[c]);
        }
        for (std::size_t r = c + 1; r < k; ++r) {
            const double f = mat[r * k + c] / mat[c * k + c];
            if (f == 0.0) continue;
            for (std::size_t q = c; q < k; ++q) mat[r * k + q] -= f * mat[c * k + q];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = k; i-- > 0;) {
        double s = b[i];
        for (std::size_t q = i + 1; q < k; ++q) s -= mat[i * k + q] * b[q];
        b[i] = s / mat[i * k + i];
    }
    return std::all_of(b.begin(), b.end(), [](double x) { return std::isfinite(x); });
}

// Recomputes primal and dual from the final basis by solving the basis systems directly, which
// removes the roundoff the tableau accumulates over many pivots. Rows I are the basic y, columns J
// the nonbasic slacks; complementary slackness makes A[I,J] m_J = v_I and A[I,J]^T y_I = 1.
void refine(const DenseMatrix& a, const std::vector<double>& v, const std::vector<std::size_t>& basis,
            CoveringSolution& sol) {
    const std::size_t m = a.rows, n = a.cols;
    std::vector<std::size_t> rows, cols;
    std::vector<char> slack_basic(n, 0);
    for (std::size_t b : basis) {
        if (b < m) rows.push_back(b);
        else slack_basic[b - m] = 1;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!slack_basic[j]) cols.push_back(j);
    const std::size_t k = rows.size();
    if (k == 0 || cols.size() != k) return;
    std::sort(rows.begin(), rows.end());
    std::vector<double> mat(k * k), mt(k * k);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) {
            mat[p * k + q] = a(rows[p], cols[q]);
            mt[q * k + p] = mat[p * k + q];
        }
    std::vector<double> x(k), y(k, 1.0);
    for (std::size_t p = 0; p < k; ++p) x[p] = v[rows[p]];
    if (!lu_solve(mat, x, k) || !lu_solve(mt, y, k)) return;
    // A degenerate or ill-conditioned basis can produce negative entries; keep the tableau values then.
    const double floor = -1e-9;
    if (*std::min_element(x.begin(), x.end()) < floor || *std::min_element(y.begin(), y.end()) < floor) return;
    std::fill(sol.primal.begin(), sol.primal.end(), 0.0);
    std::fill(sol.dual.begin(), sol.dual.end(), 0.0);
    for (std::size_t q = 0; q < k; ++q) sol.primal[cols[q]] = std::max(0.0, x[q]);
    for (std::size_t p = 0; p < k; ++p) sol.dual[rows[p]] = std::max(0.0, y[p]);
}

}  // namespace

std::string to_string(LpStatus s) {
    switch (s) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible_numerics: return "infeasible-numerics";
        case LpStatus::unbounded_impossible: return "unbounded-impossible";
    }
    return "unknown";
}

CoveringSolution solve_covering(const DenseMatrix& a, const std::vector<double>& v, const SimplexOptions& options) {
    const std::size_t m = a.rows;  // covering constraints = dual variables
    const std::size_t n = a.cols;  // boundary atoms = dual constraints
    if (v.size() != m) throw std::invalid_argument("solve_covering: rhs size mismatch");
    CoveringSolution sol;
    sol.primal.assign(n, 0.0);
    sol.dual.assign(m, 0.0);
    if (m == 0 || n == 0) {
        if (m > 0 && std::any_of(v.begin(), v.end(), [](double x) { return x > 0.0; })) {
            sol.status = LpStatus::infeasible_numerics;
            sol.message = "no boundary atoms to cover positive demands";
        }
        return sol;
    }

    // Tableau rows = dual constraints j (A^T y + s = 1); columns = y_0..y_{m-1}, s_0..s_{n-1}, rhs.
    const std::size_t width = m + n + 1;
    std::vector<double> t(n * width, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double* row = &t[j * width];
        for (std::size_t i = 0; i < m; ++i) row[i] = a(i, j);
        row[m + j] = 1.0;
        row[m + n] = 1.0;
    }
    // Objective row holds reduced costs c_k - z_k for maximization; value in the last slot.
    std::vector<double> obj(width, 0.0);
    for (std::size_t i = 0; i < m; ++i) obj[i] = v[i];
    std::vector<std::size_t> basis(n);
    for (std::size_t j = 0; j < n; ++j) basis[j] = m + j;

    const double vscale = std::max(1.0, *std::max_element(v.begin(), v.end()));
    const double eps = options.tolerance;
    std::size_t degenerate_run = 0;

    for (;;) {
        // Largest reduced cost while the objective moves; Bland's lowest index once it stalls.
        const bool bland = degenerate_run >= kBlandAfter;
        std::size_t enter = width;
        for (std::size_t k = 0; k + 1 < width; ++k) {
            if (obj[k] > eps * vscale && (enter == width || obj[k] > obj[enter])) {
                enter = k;
                if (bland) break;
            }
        }
        if (enter == width) break;
        std::size_t leave = n;
        double best = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double piv = t[r * width + enter];
            if (piv <= kPivotTolerance) continue;
            const double ratio = t[r * width + m + n] / piv;
            if (leave == n || ratio < best - eps * std::max(1.0, std::abs(best)) ||
                (ratio <= best + eps * std::max(1.0, std::abs(best)) && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == n) {
            sol.status = LpStatus::unbounded_impossible;
            sol.message = "dual unbounded: a covering row has no positive entry";
            return sol;
        }
        if (++sol.pivots > options.max_pivots) {
            sol.status = LpStatus::infeasible_numerics;
            sol.message = "pivot limit reached";
            return sol;
        }
        degenerate_run = best <= eps ? degenerate_run + 1 : 0;
        double* prow = &t[leave * width];
        const double inv = 1.0 / prow[enter];
        for (std::size_t k = 0; k < width; ++k) prow[k] *= inv;
        prow[enter] = 1.0;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == leave) continue;
            double* row = &t[r * width];
            const double f = row[enter];
            if (f == 0.0) continue;
            for (std::size_t k = 0; k < width; ++k) row[k] -= f * prow[k];
            row[enter] = 0.0;
        }
        const double f = obj[enter];
        for (std::size_t k = 0; k < width; ++k) obj[k] -= f * prow[k];
        obj[enter] = 0.0;
        basis[leave] = enter;
    }

    for (std::size_t r = 0; r < n; ++r) {
        if (basis[r] < m) sol.dual[basis[r]] = std::max(0.0, t[r * width + m + n]);
    }
    // The shadow price of dual row j is minus the reduced cost of its slack.
    for (std::size_t j = 0; j < n; ++j) sol.primal[j] = std::max(0.0, -obj[m + j]);
    refine(a, v, basis, sol);
    sol.objective = 0.0;
    for (double x : sol.primal) sol.objective += x;
    for (double x : sol.primal) {
        if (!std::isfinite(x)) {
            sol.status = LpStatus::infeasible_numerics;
            sol.message = "non-finite primal value";
            return sol;
        }
    }
    return sol;
}

}  // namespace nevmaj
