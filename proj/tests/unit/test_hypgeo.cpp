#include <cmath>
#include <algorithm>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nevmaj/hypgeo.hpp"
#include "nevmaj/oracles.hpp"

using namespace nevmaj;

namespace {

DiskPoint random_point(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return DiskPoint::polar(rmax * std::sqrt(u(rng)), kTwoPi * u(rng));
}

}  // namespace

TEST_CASE("pseudo_dist examples") {
    const DiskPoint a(0.3, -0.4);
    CHECK(pseudo_dist(a, DiskPoint(0.0)) == doctest::Approx(a.abs()).epsilon(1e-15));
    CHECK(pseudo_dist(DiskPoint(0.5), DiskPoint(-0.5)) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(pseudo_dist(a, a) == 0.0);
}

TEST_CASE("pseudo_dist is symmetric, bounded and Mobius invariant") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const auto a = random_point(rng, 0.999), z = random_point(rng, 0.999), w = random_point(rng, 0.999);
        const double d = pseudo_dist(z, w);
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
        CHECK(std::abs(d - pseudo_dist(w, z)) <= 1e-15);
        CHECK(std::abs(pseudo_dist(mobius(a, z), mobius(a, w)) - d) <= 1e-12);
    }
}

TEST_CASE("mobius examples and involution") {
    const DiskPoint a(0.2, 0.6);
    CHECK(std::abs(mobius(a, DiskPoint(0.0)).value() - a.value()) <= 1e-15);
    CHECK(std::abs(mobius(a, a).value()) <= 1e-15);
    CHECK(mobius(DiskPoint(0.5), DiskPoint(0.25)).re() == doctest::Approx(0.25 / 0.875).epsilon(1e-15));
    std::mt19937_64 rng(8);
    for (int i = 0; i < 500; ++i) {
        const auto b = random_point(rng, 0.99), z = random_point(rng, 0.99);
        CHECK(std::abs(mobius(b, mobius(b, z)).value() - z.value()) <= 1e-12);
    }
}

TEST_CASE("pseudo_disk closed form") {
    const auto d0 = pseudo_disk(DiskPoint(0.0), 0.3);
    CHECK(std::abs(d0.center) <= 1e-16);
    CHECK(d0.radius == doctest::Approx(0.3));
    const auto d = pseudo_disk(DiskPoint(0.5), 0.5);
    CHECK(d.center.real() == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(d.radius == doctest::Approx(0.4).epsilon(1e-15));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        const auto z0 = random_point(rng, 0.95);
        const double t = 0.05 + 0.9 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const auto disk = pseudo_disk(z0, t);
        for (const auto& p : oracle::pseudo_circle(z0, t, 20)) {
            CHECK(std::abs(std::abs(p.value() - disk.center) - disk.radius) <= 1e-12);
            CHECK(pseudo_dist(p, z0) == doctest::Approx(t).epsilon(1e-12));
        }
    }
}

TEST_CASE("whitney_index examples") {
    auto q = whitney_index(DiskPoint(0.9));
    REQUIRE(q);
    CHECK(q->level == 4);
    CHECK(q->index == 0);
    q = whitney_index(DiskPoint(0.5));
    REQUIRE(q);
    CHECK(q->level == 1);
    CHECK(q->index == 0);
    q = whitney_index(DiskPoint::polar(0.75, std::numbers::pi));
    REQUIRE(q);
    CHECK(q->level == 2);
    CHECK(q->index == 2);
    CHECK_FALSE(whitney_index(DiskPoint(0.1)));
}

TEST_CASE("whitney squares tile the annulus") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
        const double gap = 0.5 * std::pow(2.0, -18.0 * u(rng));
        const auto z = DiskPoint::polar(1.0 - gap, kTwoPi * u(rng));
        const auto q = whitney_index(z);
        REQUIRE(q);
        CHECK(q->contains(z));
        CHECK(z.gap() >= q->side());
        CHECK(z.gap() < 2.0 * q->side());
    }
}

TEST_CASE("whitney_neighbors") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const int k = 2 + static_cast<int>(rng() % 19);
        const WhitneySquare q{k, static_cast<std::int64_t>(rng() % (std::uint64_t{1} << k))};
        const auto nb = whitney_neighbors(q);
        CHECK(nb.squares.size() <= 9);
        CHECK(std::find(nb.squares.begin(), nb.squares.end(), q) != nb.squares.end());
        for (const auto& o : nb.squares) CHECK(std::abs(o.level - k) <= 1);
    }
    const auto interior = whitney_neighbors(WhitneySquare{6, 20});
    CHECK(interior.squares.size() == 9);
    CHECK(whitney_neighbors(WhitneySquare{1, 0}).touches_central);
}

TEST_CASE("privalov_shadow") {
    const auto s = privalov_shadow(DiskPoint(0.5));
    CHECK(s.length() == doctest::Approx(4.0 * std::asin(0.25)).epsilon(1e-15));
    CHECK(std::cos(s.mid()) == doctest::Approx(1.0));
    CHECK(privalov_shadow(DiskPoint(0.0)).length() == doctest::Approx(kTwoPi));
    const double gap = 1e-9;
    CHECK(privalov_shadow(DiskPoint(1.0 - gap)).length() / (2.0 * gap) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("separation") {
    const std::vector<DiskPoint> two{DiskPoint(0.5), DiskPoint(-0.5)};
    CHECK(separation(two) == doctest::Approx(0.8));
    const std::vector<DiskPoint> same{DiskPoint(0.3), DiskPoint(0.3)};
    CHECK(separation(same) == 0.0);
    const std::vector<DiskPoint> three{DiskPoint(0.0), DiskPoint(0.5), DiskPoint(-0.5)};
    CHECK(separation(three) == doctest::Approx(0.5));
    CHECK_THROWS_AS(separation(std::vector<DiskPoint>{DiskPoint(0.1)}), std::invalid_argument);
}

TEST_CASE("DiskPoint rejects points off the disc") {
    CHECK_THROWS(DiskPoint(1.0));
    CHECK_THROWS(DiskPoint(0.8, 0.8));
}
