#include <cmath>
#include <random>

#include "doctest.h"
#include "nevmaj/majorant.hpp"
#include "nevmaj/oracles.hpp"

using namespace nevmaj;

TEST_CASE("min_mass single constraints") {
    ConstraintSet origin;
    origin.add(DiskPoint(0.0), 2.5);
    auto r = min_mass(origin);
    REQUIRE(r.ok());
    CHECK(r.optimal_mass == doctest::Approx(2.5).epsilon(1e-12));

    ConstraintSet half;
    half.add(DiskPoint(0.5), 1.0);
    r = min_mass(half);
    REQUIRE(r.ok());
    CHECK(r.optimal_mass == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(r.measure.poisson_integral(DiskPoint(0.5)) >= 1.0 - 1e-12);

    CHECK(min_mass(ConstraintSet{}).optimal_mass == 0.0);
}

TEST_CASE("min_mass agrees with vertex enumeration and its dual") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int inst = 0; inst < 20; ++inst) {
        ConstraintSet c;
        const int m = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < m; ++i) c.add(DiskPoint::polar(0.9 * std::sqrt(u(rng)), kTwoPi * u(rng)), 0.1 + u(rng));
        const auto grid = boundary_grid(c, 12);
        const auto r = min_mass(c, grid);
        REQUIRE(r.ok());
        CHECK(r.optimal_mass == doctest::Approx(oracle::min_mass_by_vertices(c, grid)).epsilon(1e-9));
        double dual = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) dual += r.dual[i] * c.constraints[i].value;
        CHECK(dual == doctest::Approx(r.optimal_mass).epsilon(1e-9));
        for (double s : r.slack) CHECK(s >= -1e-9);
    }
}

TEST_CASE("solve_covering on a hand instance") {
    // min m1 + m2 with 2 m1 + m2 >= 2, m1 + 3 m2 >= 3: optimum at (3/5, 4/5).
    DenseMatrix a(2, 2);
    a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 3;
    const auto s = solve_covering(a, {2.0, 3.0});
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == doctest::Approx(1.4).epsilon(1e-14));
    CHECK(s.primal[0] == doctest::Approx(0.6));
    CHECK(s.primal[1] == doctest::Approx(0.8));
}

TEST_CASE("classify") {
    CHECK(classify({0.5, 0.7, 0.9}) == Classification::inconclusive);
    CHECK(classify({1.0, 1.0, 1.0}) == Classification::bounded);
    CHECK(classify({0.8, 0.9, 1.1}) == Classification::bounded);
    CHECK(classify({1.0, 2.0, 4.0, 8.0}) == Classification::growth);
    CHECK(classify({1.0, 3.0, 2.0}) == Classification::inconclusive);
    CHECK(classify({0.0, 0.0}) == Classification::bounded);
    CHECK(classify({1.0, 2.0}) == Classification::inconclusive);
    CHECK(to_string(Classification::growth) == "growth");
}

TEST_CASE("sample_target_set filtering") {
    ZeroSet z;
    z.add(DiskPoint(0.6), 1);
    SampleOptions opt;
    opt.per_square = 8;
    CHECK(sample_target_set(z, HarmonicFn::constant(0.0), 4, opt).empty());
    const auto all = sample_target_set(ZeroSet{}, HarmonicFn::constant(1.0), 4, opt);
    CHECK_FALSE(all.empty());
    for (const auto& p : all) {
        CHECK(p.value == 0.0);
        CHECK(p.level <= 4);
    }
    const auto kept = sample_target_set(z, HarmonicFn::constant(1.0), 5, opt);
    for (const auto& p : kept) CHECK(pseudo_dist(p.z, DiskPoint(0.6)) >= std::exp(-1.0) * (1.0 - 1e-12));
}

TEST_CASE("majorant_diagnostic") {
    SweepOptions opt;
    opt.sample.per_square = 8;
    const auto empty = majorant_diagnostic(ZeroSet{}, HarmonicFn::constant(1.0), {2, 3, 4}, opt);
    CHECK(empty.ok());
    for (double m : empty.masses()) CHECK(m == 0.0);
    CHECK(empty.classification == Classification::bounded);

    ZeroSet z;
    z.add(DiskPoint(0.5), 1);
    const auto single = majorant_diagnostic(z, HarmonicFn::constant(std::log(2.0)), {3, 4, 5}, opt);
    REQUIRE(single.ok());
    const auto m = single.masses();
    for (std::size_t i = 1; i < m.size(); ++i) CHECK(m[i] >= m[i - 1] * (1.0 - 1e-12));
    CHECK(single.classification == Classification::bounded);
    for (const auto& row : single.rows) CHECK(row.runtime_ms == 0.0);
}
