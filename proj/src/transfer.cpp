#include "nevmaj/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "nevmaj/constants.hpp"

namespace nevmaj {

namespace {

constexpr double kGoldenAngle = 2.399963229728653;

double halton(std::uint64_t i, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

}  // namespace

Lemma4Result lemma4_search(const ZeroSet& zeros, const HarmonicFn& h, const DiskPoint& z, double c0,
                           const Lemma4Options& options) {
    if (!(c0 >= 1.0)) throw std::invalid_argument("lemma4_search needs C0 >= 1");
    const double hz = h(z);
    double near = 0.0;
    for (const auto& zero : zeros.zeros())
        if (pseudo_dist(zero.point, z) <= 0.5) near += static_cast<double>(zero.mult);
    if (hz < std::log(std::max(c0, near))) {
        throw std::invalid_argument("lemma4_search hypothesis fails: e^H(z) = " + std::to_string(std::exp(hz)) +
                                    " is below max(C0, " + std::to_string(near) + ")");
    }
    Lemma4Result res;
    res.radius = std::exp(-hz / c0);
    res.point = z;
    res.h_value = hz;
    if (zeros.empty()) return res;

    // Zeros in the frame where z sits at the origin.
    std::vector<Complex> local;
    local.reserve(zeros.size());
    for (const auto& zero : zeros.zeros()) local.push_back(mobius(z.value(), zero.point.value()));

    struct Packed {
        Complex u;
        double t;
    };
    std::vector<Packed> packed;
    const std::size_t m = std::max<std::size_t>(options.candidates, 1);
    for (std::size_t i = 0; i < m; ++i) {
        ++res.tried;
        const Complex u = i == 0 ? Complex(0.0, 0.0)
                                 : std::polar(res.radius * std::sqrt((static_cast<double>(i) + 0.5) / m),
                                              kGoldenAngle * static_cast<double>(i));
        const Complex w = mobius(z.value(), u);
        if (std::norm(w) >= 1.0) continue;
        const DiskPoint zeta(w);
        const double hc = h(zeta);
        const double t = std::exp(-hc);
        bool disjoint = true;
        for (const auto& p : packed) {
            if (pseudo_dist(u, p.u) <= (t + p.t) / (1.0 + t * p.t)) {
                disjoint = false;
                break;
            }
        }
        if (!disjoint) continue;
        packed.push_back({u, t});
        ++res.packed;
        double nld = 0.0;
        for (const auto& l : local) nld = std::max(nld, -log_pseudo_dist(u, l));
        if (nld <= hc) {
            res.point = zeta;
            res.rho_to_z = std::abs(u);
            res.neg_log_rho_to_zeros = nld;
            res.h_value = hc;
            return res;
        }
    }
    throw std::runtime_error("lemma4_search exhausted " + std::to_string(res.tried) + " candidates (" +
                             std::to_string(res.packed) + " packed disks) without a zero-free disk");
}

TransferReport theorem3_transfer_check(const ZeroSet& zeros, const HarmonicFn& h, double c,
                                       const std::vector<DiskPoint>& samples, double c0,
                                       const Lemma4Options& options) {
    if (!(c > 1.0)) throw std::invalid_argument("theorem3_transfer_check needs C > 1");
    TransferReport rep;
    for (const auto& z : samples) {
        TransferRow row{z, z};
        if (zeros.empty()) {
            row.ratio = 1.0;
            rep.rows.push_back(row);
            rep.max_ratio = std::max(rep.max_ratio, 1.0);
            continue;
        }
        const double nld = neg_log_distance(zeros, z);
        const double hz = h(z);
        if (nld < std::log(c0) || nld > c * hz) {
            ++rep.skipped;
            continue;
        }
        const auto l4 = lemma4_search(zeros, h, z, c0, options);
        row.z_tilde = l4.point;
        row.lhs = -log_modulus(zeros, z);
        row.rhs = -log_modulus(zeros, l4.point) + h_lambda(zeros, l4.point);
        row.ratio = row.rhs > 0.0 ? row.lhs / row.rhs : (row.lhs > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<DiskPoint> transfer_samples(const ZeroSet& zeros, const HarmonicFn& h, double c, double c0,
                                        std::size_t count, std::uint64_t seed) {
    std::vector<DiskPoint> out;
    if (zeros.empty()) return out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t k = i + 1 + seed * 7919;
        const auto& anchor = zeros[i % zeros.size()].point;
        const double hi = -std::log(c0);
        const double lo = -c * h(anchor);
        const double u = halton(k, 2);
        const double rho = std::exp(hi + (lo - hi) * u);
        const double phi = kTwoPi * halton(k, 3);
        out.emplace_back(mobius(anchor.value(), std::polar(rho, phi)));
    }
    return out;
}

Theorem4Report theorem4_check(const ZeroSet& zeros, const HarmonicFn& h, const HarmonicFn& h1, int depth,
                              const SampleOptions& sample) {
    Theorem4Report rep;
    rep.c1 = constants::kMajorantC1;
    rep.c3 = constants::kMajorantC3;
    const auto cen = census(zeros);
    if (cen.central > 0) {
        Theorem4Row row;
        row.central = true;
        row.n = cen.central;
        row.lhs = static_cast<double>(cen.central) * h(DiskPoint(0.0));
        row.rhs = h1(DiskPoint(0.0));
        row.pass = row.lhs <= row.rhs;
        rep.corollary_sum += row.lhs;
        rep.rows.push_back(row);
    }
    for (const auto& [q, counts] : cen.squares) {
        if (counts.n == 0 || q.level > depth) continue;
        Theorem4Row row;
        row.square = q;
        row.n = counts.n;
        const auto zc = q.center();
        row.lhs = static_cast<double>(counts.n) * h(zc);
        row.rhs = h1(zc);
        row.pass = row.lhs <= row.rhs;
        rep.corollary_sum += row.lhs * q.side();
        rep.rows.push_back(row);
    }
    rep.hypothesis = std::all_of(rep.rows.begin(), rep.rows.end(), [](const Theorem4Row& r) { return r.pass; });
    if (!rep.hypothesis) return rep;

    rep.majorant_checked = true;
    SampleOptions so = sample;
    so.filter_scale = 1.0;
    const auto pts = sample_target_set(zeros, h, depth, so);
    rep.sample_size = pts.size();
    rep.worst_margin = std::numeric_limits<double>::infinity();
    const auto hl = HarmonicFn::h_lambda(zeros);
    for (const auto& p : pts) {
        const double maj = rep.c1 * hl(p.z) + rep.c3 * h1(p.z);
        rep.worst_margin = std::min(rep.worst_margin, maj - p.value);
        if (maj > 0.0) rep.worst_ratio = std::max(rep.worst_ratio, p.value / maj);
        else if (p.value > 0.0) rep.worst_ratio = std::numeric_limits<double>::infinity();
    }
    if (pts.empty()) rep.worst_margin = 0.0;
    rep.majorant_holds = rep.worst_margin >= 0.0;
    return rep;
}

HarmonicFn corollary_h1(const ZeroSet& zeros, const HarmonicFn& h) {
    const auto cen = census(zeros);
    BoundaryMeasure m;
    if (cen.central > 0) m.add_arc(BoundaryArc::full_circle(), static_cast<double>(cen.central) * h(DiskPoint(0.0)));
    for (const auto& [q, counts] : cen.squares) {
        if (counts.n == 0) continue;
        m.add_arc(q.arc(), static_cast<double>(counts.n) * h(q.center()));
    }
    return HarmonicFn(std::move(m));
}

}  // namespace nevmaj
