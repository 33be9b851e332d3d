#include <cmath>
#include <limits>

#include "doctest.h"
#include "nevmaj/blaschke.hpp"

using namespace nevmaj;

TEST_CASE("blaschke_sum weights the gaps by multiplicity") {
    ZeroSet z;
    z.add(DiskPoint(0.5), 2);
    z.add(DiskPoint(0.9), 3);
    CHECK(blaschke_sum(z) == doctest::Approx(1.3).epsilon(1e-15));
    CHECK(z.total_multiplicity() == 5);
    CHECK(blaschke_sum(ZeroSet{}) == 0.0);
}

TEST_CASE("log_modulus") {
    ZeroSet z;
    z.add(DiskPoint(0.5), 1);
    CHECK(log_modulus(z, DiskPoint(0.0)) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(log_modulus(z, DiskPoint(0.5)) == -std::numeric_limits<double>::infinity());
    ZeroSet twice;
    twice.add(DiskPoint(0.5), 2);
    const DiskPoint p(0.1, 0.3);
    CHECK(log_modulus(twice, p) == doctest::Approx(2.0 * log_modulus(z, p)).epsilon(1e-14));
    CHECK(log_modulus(ZeroSet{}, p) == 0.0);
    CHECK(neg_log_distance(ZeroSet{}, p) == 0.0);
    CHECK(neg_log_distance(z, DiskPoint(0.0)) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("evaluate_local reaches below double resolution") {
    ZeroSet z;
    z.add(DiskPoint(0.7, 0.2), 3);
    const auto e = evaluate_local(z, DiskPoint(0.7, 0.2), 800.0, 0.3);
    CHECK(e.neg_log_distance == doctest::Approx(800.0).epsilon(1e-12));
    CHECK(e.neg_log_modulus == doctest::Approx(2400.0).epsilon(1e-12));
}

TEST_CASE("carleson_quantity") {
    const std::vector<DiskPoint> pts{DiskPoint(0.5), DiskPoint(-0.5)};
    const auto z = ZeroSet::simple(pts);
    const auto c = carleson_quantity(z, 0);
    CHECK(c.value == doctest::Approx(0.8).epsilon(1e-15));
    CHECK_FALSE(c.multiple);
    ZeroSet m;
    m.add(DiskPoint(0.5), 2);
    m.add(DiskPoint(-0.5), 1);
    const auto cm = carleson_quantity(m, 0);
    CHECK(cm.multiple);
    CHECK(cm.value == 0.0);
}

TEST_CASE("nevanlinna_interp_check") {
    const std::vector<DiskPoint> pts{DiskPoint(0.5), DiskPoint(-0.5)};
    const auto z = ZeroSet::simple(pts);
    for (const auto& row : nevanlinna_interp_check(z, [](const DiskPoint&) { return 1.0; })) {
        CHECK(row.pass);
        CHECK(row.margin == doctest::Approx(std::log(0.8) + 1.0));
    }
    for (const auto& row : nevanlinna_interp_check(z, [](const DiskPoint&) { return 0.1; })) CHECK_FALSE(row.pass);
    ZeroSet m;
    m.add(DiskPoint(0.5), 2);
    CHECK_THROWS_AS(nevanlinna_interp_check(m, [](const DiskPoint&) { return 1.0; }), std::invalid_argument);
}

TEST_CASE("census counts zeros per square and neighborhood") {
    ZeroSet z;
    z.add(DiskPoint(0.9), 1);
    z.add(DiskPoint(0.1), 2);
    const auto c = census(z);
    CHECK(c.central == 2);
    CHECK(c.at(WhitneySquare{4, 0}).n == 1);
    CHECK(c.at(WhitneySquare{4, 0}).m == 1);
    CHECK(c.total_n() == 3);
    for (const auto& q : whitney_neighbors(WhitneySquare{4, 0}).squares) CHECK(c.at(q).m == 1);
    CHECK(c.at(WhitneySquare{4, 8}).m == 0);
}

TEST_CASE("ZeroSet rejects nonpositive multiplicity") {
    ZeroSet z;
    CHECK_THROWS(z.add(DiskPoint(0.5), 0));
}
