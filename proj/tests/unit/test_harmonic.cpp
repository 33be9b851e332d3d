#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nevmaj/harmonic.hpp"
#include "nevmaj/oracles.hpp"

using namespace nevmaj;

TEST_CASE("poisson_kernel") {
    CHECK(poisson_kernel(DiskPoint(0.5), 0.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(poisson_kernel(DiskPoint(0.5), std::numbers::pi) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(poisson_kernel(DiskPoint(0.0), 1.234) == 1.0);
}

TEST_CASE("harmonic_measure matches quadrature") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const auto z = DiskPoint::polar(0.99 * std::sqrt(u(rng)), kTwoPi * u(rng));
        const double lo = kTwoPi * u(rng);
        const BoundaryArc arc(lo, lo + kTwoPi * u(rng));
        const double hm = harmonic_measure(z, arc);
        CHECK(hm >= 0.0);
        CHECK(hm <= 1.0);
        CHECK(std::abs(hm - oracle::harmonic_measure_quadrature(z, arc)) <= 1e-10);
    }
    CHECK(harmonic_measure(DiskPoint(0.3, 0.4), BoundaryArc::full_circle()) == doctest::Approx(1.0));
}

TEST_CASE("h_square at the origin is the side length") {
    for (int k = 1; k <= 12; ++k) {
        const WhitneySquare q{k, 1};
        CHECK(h_square(q, DiskPoint(0.0)) == doctest::Approx(std::ldexp(1.0, -k)).epsilon(1e-14));
    }
}

TEST_CASE("h_lambda is the multiplicity-weighted shadow integral") {
    ZeroSet one, two;
    one.add(DiskPoint(0.5), 1);
    two.add(DiskPoint(0.5), 2);
    CHECK(h_lambda(one, DiskPoint(0.0)) == doctest::Approx(4.0 * std::asin(0.25)).epsilon(1e-14));
    const DiskPoint z(0.2, -0.6);
    CHECK(h_lambda(two, z) == doctest::Approx(2.0 * h_lambda(one, z)).epsilon(1e-14));
    const double quad = kTwoPi * oracle::harmonic_measure_quadrature(z, privalov_shadow(DiskPoint(0.5)));
    CHECK(h_lambda(one, z) == doctest::Approx(quad).epsilon(1e-10));
    CHECK(HarmonicFn::h_lambda(two)(z) == doctest::Approx(h_lambda(two, z)).epsilon(1e-14));
}

TEST_CASE("harnack_bounds") {
    const auto b = harnack_bounds(DiskPoint(1.0 / 3.0), DiskPoint(0.0));
    CHECK(b.r == doctest::Approx(1.0 / 3.0));
    CHECK(b.lo == doctest::Approx(0.5));
    CHECK(b.hi == doctest::Approx(2.0));
    // Sharpness: the Poisson kernel attains the upper bound.
    const DiskPoint z(0.6), w(0.2);
    const auto hb = harnack_bounds(z, w);
    CHECK(poisson_kernel(z, 0.0) / poisson_kernel(w, 0.0) == doctest::Approx(hb.hi).epsilon(1e-12));
}

TEST_CASE("HarmonicFn algebra") {
    const auto h = HarmonicFn::constant(2.0) + HarmonicFn::poisson_atom(0.0, 1.0).scaled(3.0);
    CHECK(h(DiskPoint(0.5)) == doctest::Approx(2.0 + 9.0));
    CHECK(h.at_origin() == doctest::Approx(5.0));
}

TEST_CASE("lemma3_build with one square uses coefficient sqrt 2") {
    const WhitneySquare q{3, 2};
    const auto r = lemma3_build({q}, {1e6});
    REQUIRE(r.selected().size() == 1);
    CHECK(r.coefficients()[0] == doctest::Approx(std::sqrt(2.0)));
    const DiskPoint z(0.1, 0.2);
    CHECK(r.h(z) == doctest::Approx(std::sqrt(2.0) * h_square(q, z)).epsilon(1e-12));
    CHECK(r.certificate_holds());
}

TEST_CASE("lemma3_build rejects bad input") {
    CHECK_THROWS_AS(lemma3_build({WhitneySquare{3, 0}}, {-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(lemma3_build({WhitneySquare{5, 0}, WhitneySquare{3, 0}}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("whitney_gamma is consistent with harnack on a square") {
    const double g = whitney_gamma();
    CHECK(g > 0.0);
    CHECK(g < 1.0);
    const WhitneySquare q{5, 3};
    for (const auto& z : square_grid(q, 6))
        for (const auto& w : square_grid(q, 6)) CHECK(harnack_bounds(z, w).lo >= g * (1.0 - 1e-12));
}
