#include "nevmaj/blaschke.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nevmaj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_mult(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("zero multiplicity must be >= 1");
}

}  // namespace

ZeroSet::ZeroSet(std::vector<Zero> zeros) : zeros_(std::move(zeros)) {
    for (const auto& z : zeros_) check_mult(z.mult);
}

ZeroSet ZeroSet::simple(std::span<const DiskPoint> points) {
    std::vector<Zero> zs;
    zs.reserve(points.size());
    for (const auto& p : points) zs.push_back({p, 1});
    return ZeroSet(std::move(zs));
}

std::int64_t ZeroSet::total_multiplicity() const {
    std::int64_t s = 0;
    for (const auto& z : zeros_) s += z.mult;
    return s;
}

void ZeroSet::add(const DiskPoint& p, std::int64_t mult) {
    check_mult(mult);
    zeros_.push_back({p, mult});
}

void ZeroSet::append(const ZeroSet& other) {
    zeros_.insert(zeros_.end(), other.zeros_.begin(), other.zeros_.end());
}

double blaschke_sum(const ZeroSet& zeros) {
    double s = 0.0;
    for (const auto& z : zeros.zeros()) s += static_cast<double>(z.mult) * z.point.gap();
    return s;
}

double log_modulus(const ZeroSet& zeros, const DiskPoint& z) {
    double acc = 0.0;
    for (const auto& zero : zeros.zeros()) {
        const double l = log_pseudo_dist(z.value(), zero.point.value());
        if (l == -kInf) return -kInf;
        acc += static_cast<double>(zero.mult) * l;
    }
    return std::min(acc, 0.0);
}

double neg_log_distance(const ZeroSet& zeros, const DiskPoint& z) {
    double best = 0.0;
    for (const auto& zero : zeros.zeros()) {
        best = std::max(best, -log_pseudo_dist(z.value(), zero.point.value()));
    }
    return best;
}

LocalEvaluation evaluate_local(const ZeroSet& zeros, const DiskPoint& anchor, double tau, double phi) {
    // zeta = mobius(anchor, u), and rho(zeta, mu) = rho(u, mobius(anchor, mu)) by invariance.
    const Complex u = std::polar(std::exp(-tau), phi);
    LocalEvaluation out{0.0, 0.0};
    for (const auto& zero : zeros.zeros()) {
        double nl;
        if (zero.point == anchor) {
            nl = tau;
        } else {
            const Complex p = mobius(anchor.value(), zero.point.value());
            nl = -log_pseudo_dist(u, p);
        }
        out.neg_log_modulus += static_cast<double>(zero.mult) * nl;
        out.neg_log_distance = std::max(out.neg_log_distance, nl);
    }
    return out;
}

CarlesonQuantity carleson_quantity(const ZeroSet& zeros, std::size_t k) {
    if (k >= zeros.size()) throw std::out_of_range("carleson_quantity index out of range");
    if (zeros[k].mult > 1) return {0.0, -kInf, true};
    double acc = 0.0;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
        if (j == k) continue;
        acc += static_cast<double>(zeros[j].mult) *
               log_pseudo_dist(zeros[k].point.value(), zeros[j].point.value());
    }
    acc = std::min(acc, 0.0);
    return {std::exp(acc), acc, false};
}

std::vector<InterpolationRow> nevanlinna_interp_check(
    const ZeroSet& zeros, const std::function<double(const DiskPoint&)>& h) {
    for (const auto& z : zeros.zeros()) {
        if (z.mult > 1) {
            throw std::invalid_argument(
                "interpolation criterion needs simple zeros; a multiple zero is never interpolating");
        }
    }
    std::vector<InterpolationRow> rows;
    rows.reserve(zeros.size());
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        const auto cq = carleson_quantity(zeros, k);
        const double hv = h(zeros[k].point);
        const double margin = cq.log_value + hv;
        rows.push_back({cq.log_value, hv, margin, margin >= 0.0});
    }
    return rows;
}

SquareCounts SquareCensus::at(const WhitneySquare& q) const {
    auto it = squares.find(q);
    return it == squares.end() ? SquareCounts{} : it->second;
}

std::int64_t SquareCensus::total_n() const {
    std::int64_t s = central;
    for (const auto& [q, c] : squares) s += c.n;
    return s;
}

SquareCensus census(const ZeroSet& zeros) {
    SquareCensus out;
    std::map<WhitneySquare, std::int64_t> occupied;
    for (const auto& z : zeros.zeros()) {
        if (auto q = whitney_index(z.point)) {
            occupied[*q] += z.mult;
        } else {
            out.central += z.mult;
        }
    }
    for (const auto& [q, n] : occupied) out.squares[q].n = n;
    // M(Q) = sum of N over U(Q); U is symmetric, so scatter each occupied square to its neighborhood.
    for (const auto& [q, n] : occupied) {
        for (const auto& q1 : whitney_neighbors(q).squares) out.squares[q1].m += n;
    }
    if (out.central > 0) {
        for (std::int64_t j = 0; j < 2; ++j) out.squares[WhitneySquare{1, j}].m += out.central;
    }
    return out;
}

}  // namespace nevmaj
