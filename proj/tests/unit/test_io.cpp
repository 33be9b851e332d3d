#include <cmath>
#include <limits>

#include "doctest.h"
#include "nevmaj/io.hpp"

using namespace nevmaj;

TEST_CASE("format_double is shortest round trip") {
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
    const double x = 1.0 / 3.0;
    CHECK(std::stod(io::format_double(x)) == x);
}

TEST_CASE("zero set JSON round trip") {
    ZeroSet z;
    z.add(DiskPoint(0.1, -0.7), 3);
    z.add(DiskPoint::polar(1.0 - 1e-13, 2.0), 1);
    const auto back = io::zero_set_from_json(io::zero_set_to_json(z));
    REQUIRE(back.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(back[i].mult == z[i].mult);
        CHECK(back[i].point.re() == z[i].point.re());
        CHECK(back[i].point.im() == z[i].point.im());
    }
    CHECK(io::zero_set_to_json(back) == io::zero_set_to_json(z));
}

TEST_CASE("measure JSON round trip") {
    BoundaryMeasure m;
    m.add_atom(0.5, 2.0);
    m.add_arc(BoundaryArc(1.0, 2.0), 0.25);
    const auto back = io::measure_from_json(io::measure_to_json(m));
    CHECK(back.total_mass() == m.total_mass());
    const DiskPoint z(0.3, 0.3);
    CHECK(back.poisson_integral(z) == m.poisson_integral(z));
}

TEST_CASE("malformed input is a ParseError") {
    CHECK_THROWS_AS(io::zero_set_from_json("{"), io::ParseError);
    CHECK_THROWS_AS(io::zero_set_from_json(R"({"zeros": [{"re": 2.0, "im": 0.0, "mult": 1}]})"), io::ParseError);
    CHECK_THROWS_AS(io::zero_set_from_json(R"({"zeros": [{"re": 0.2, "im": 0.0, "mult": 0}]})"), io::ParseError);
}

TEST_CASE("eval csv writes -inf at zeros") {
    const auto csv = io::eval_to_csv({DiskPoint(0.5)}, {-std::numeric_limits<double>::infinity()});
    CHECK(csv.find("-inf") != std::string::npos);
}
