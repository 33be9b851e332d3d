#include <cmath>

#include "doctest.h"
#include "nevmaj/constructions.hpp"
#include "nevmaj/transfer.hpp"

using namespace nevmaj;

TEST_CASE("family_blaschke") {
    const auto f = family_blaschke({DiskPoint(0.5), DiskPoint(-0.5)}, {3, 5});
    CHECK(f.separation == doctest::Approx(0.8));
    CHECK(f.disk_radius == doctest::Approx(0.2));
    CHECK(f.disjoint);
    CHECK(blaschke_sum(f.zeros) == doctest::Approx(4.0));
    CHECK_THROWS_AS(family_blaschke({DiskPoint(0.5), DiskPoint(0.5)}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(family_blaschke({DiskPoint(0.5)}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(family_blaschke({DiskPoint(0.5)}, {0}), std::invalid_argument);
}

TEST_CASE("thm2_weights tails and bounds") {
    ZeroSet z;
    z.add(DiskPoint(0.9), 1);
    z.add(DiskPoint::polar(0.99, 2.0), 2);
    const auto r = thm2_weights(z, 10);
    REQUIRE_FALSE(r.squares.empty());
    const std::size_t n = r.squares.size();
    double tail = 0.0;
    for (std::size_t j = n; j-- > 0;) {
        tail += static_cast<double>(r.m[j]) * r.squares[j].side();
        CHECK(r.tail[j] == doctest::Approx(tail).epsilon(1e-14));
        CHECK(r.bounds[j] == doctest::Approx(1.0 / std::sqrt(tail)).epsilon(1e-14));
    }
    CHECK(r.bounds[n - 1] == doctest::Approx(1.0 / std::sqrt(r.m[n - 1] * r.squares[n - 1].side())));
    for (std::size_t j = 1; j < n; ++j) CHECK(r.squares[j].level >= r.squares[j - 1].level);
}

TEST_CASE("thm5a_build") {
    CHECK_THROWS_AS(thm5a_build(HarmonicFn::constant(1.0), HarmonicFn::constant(1.0), 5), std::runtime_error);
    const auto h1 = HarmonicFn::poisson_atom(0.0, 1.0);
    const auto h2 = HarmonicFn::constant(1.0);
    const auto r = thm5a_build(h1, h2, 5);
    CHECK_FALSE(r.zeros.empty());
    for (const auto& zero : r.zeros.zeros()) {
        const double j = -std::log(zero.point.gap()) / std::log(4.0);
        CHECK(j == doctest::Approx(std::round(j)).epsilon(1e-9));
        const double need = 1.0 / (zero.point.gap() * std::sqrt(h1(zero.point) * h2(zero.point)));
        CHECK(static_cast<double>(zero.mult) == doctest::Approx(std::ceil(need)));
    }
}

TEST_CASE("thm5b parameters") {
    Thm5bParams p;
    p.h = HarmonicFn::poisson_atom(0.0, 1.0);
    p.eta = 1.5;
    CHECK_THROWS(p.validate());
    p.eta = 0.5;
    p.max_depth = 6;
    const auto r = thm5b_build(p);
    CHECK(r.gamma == doctest::Approx(whitney_gamma()));
    for (const auto* rec : r.accepted()) CHECK(rec->r == doctest::Approx(std::exp(-std::sqrt(rec->h))));
}

TEST_CASE("lemma4_search") {
    const DiskPoint z(0.4, 0.1);
    const auto none = lemma4_search(ZeroSet{}, HarmonicFn::constant(3.0), z, 2.0);
    CHECK(std::abs(none.point.value() - z.value()) == 0.0);

    ZeroSet lam;
    lam.add(z, 1);
    const auto h = HarmonicFn::constant(5.0);
    const auto r = lemma4_search(lam, h, z, 2.0);
    CHECK(r.radius == doctest::Approx(std::exp(-2.5)));
    CHECK(r.rho_to_z <= r.radius);
    CHECK(r.neg_log_rho_to_zeros <= r.h_value);
    CHECK_THROWS_AS(lemma4_search(lam, HarmonicFn::constant(0.1), z, 2.0), std::invalid_argument);
}

TEST_CASE("theorem4_check on a single zero") {
    ZeroSet z;
    z.add(DiskPoint(0.9), 1);
    SampleOptions s;
    s.per_square = 8;
    const auto h = HarmonicFn::constant(1.0);
    const auto r = theorem4_check(z, h, h, 6, s);
    CHECK(r.hypothesis);
    CHECK(r.corollary_sum == doctest::Approx(0.0625));
}
