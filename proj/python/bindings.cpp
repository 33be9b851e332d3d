#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nevmaj/blaschke.hpp"
#include "nevmaj/constructions.hpp"
#include "nevmaj/harmonic.hpp"
#include "nevmaj/hypgeo.hpp"
#include "nevmaj/io.hpp"
#include "nevmaj/majorant.hpp"

namespace py = pybind11;
using namespace nevmaj;

namespace {

// Python callers pass points as complex numbers; the check against the unit circle happens in DiskPoint.
DiskPoint point(Complex z) { return DiskPoint(z); }

py::dict solve_report(const SolveReport& r) {
    py::list atoms;
    for (const auto& a : r.measure.atoms()) atoms.append(py::make_tuple(a.theta, a.mass));
    py::dict d;
    d["mass"] = r.optimal_mass;
    d["status"] = to_string(r.status);
    d["atoms"] = atoms;
    d["dual"] = r.dual;
    d["slack"] = r.slack;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hyperbolic geometry, Blaschke products and harmonic majorants on the unit disc";

    py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<DiskPoint>(m, "DiskPoint")
        .def(py::init([](Complex z) { return DiskPoint(z); }))
        .def_static("polar", &DiskPoint::polar)
        .def_property_readonly("value", &DiskPoint::value)
        .def("__abs__", &DiskPoint::abs)
        .def("__repr__", [](const DiskPoint& p) {
            return "DiskPoint(" + io::format_double(p.re()) + ", " + io::format_double(p.im()) + ")";
        });

    py::class_<WhitneySquare>(m, "WhitneySquare")
        .def(py::init([](int level, std::int64_t index) {
                 WhitneySquare q{level, index};
                 if (!q.valid()) throw py::value_error("invalid Whitney square");
                 return q;
             }),
             py::arg("level"), py::arg("index"))
        .def_readonly("level", &WhitneySquare::level)
        .def_readonly("index", &WhitneySquare::index)
        .def_property_readonly("side", &WhitneySquare::side)
        .def_property_readonly("center", [](const WhitneySquare& q) { return q.center().value(); })
        .def("contains", [](const WhitneySquare& q, Complex z) { return q.contains(point(z)); })
        .def("__eq__", [](const WhitneySquare& a, const WhitneySquare& b) { return a == b; })
        .def("__repr__", [](const WhitneySquare& q) {
            return "WhitneySquare(" + std::to_string(q.level) + ", " + std::to_string(q.index) + ")";
        });

    py::class_<ZeroSet>(m, "ZeroSet")
        .def(py::init<>())
        .def(py::init([](const std::vector<std::pair<Complex, std::int64_t>>& zeros) {
            ZeroSet z;
            for (const auto& [p, n] : zeros) z.add(point(p), n);
            return z;
        }))
        .def("add", [](ZeroSet& z, Complex p, std::int64_t n) { z.add(point(p), n); }, py::arg("point"),
             py::arg("mult") = 1)
        .def("__len__", &ZeroSet::size)
        .def("zeros",
             [](const ZeroSet& z) {
                 std::vector<std::pair<Complex, std::int64_t>> out;
                 for (const auto& e : z.zeros()) out.emplace_back(e.point.value(), e.mult);
                 return out;
             })
        .def("to_json", [](const ZeroSet& z) { return io::zero_set_to_json(z); })
        .def_static("from_json", &io::zero_set_from_json);

    py::class_<HarmonicFn>(m, "HarmonicFn")
        .def_static("constant", &HarmonicFn::constant)
        .def_static("poisson_atom", &HarmonicFn::poisson_atom, py::arg("theta"), py::arg("mass") = 1.0)
        .def_static("h_square", &HarmonicFn::h_square)
        .def_static("h_lambda", &HarmonicFn::h_lambda)
        .def("__call__", [](const HarmonicFn& h, Complex z) { return h(point(z)); })
        .def("__add__", &HarmonicFn::operator+)
        .def("scaled", &HarmonicFn::scaled)
        .def_property_readonly("at_origin", &HarmonicFn::at_origin);

    m.def("pseudo_dist", [](Complex a, Complex b) { return pseudo_dist(point(a), point(b)); });
    m.def("mobius", [](Complex a, Complex z) { return mobius(point(a), point(z)).value(); });
    m.def("whitney_index", [](Complex z) { return whitney_index(point(z)); },
          "Whitney square containing z, or None inside the central cell |z| < 1/2.");
    m.def("privalov_shadow", [](Complex z) {
        const auto a = privalov_shadow(point(z));
        return py::make_tuple(a.lo(), a.hi());
    });
    m.def("separation", [](const std::vector<Complex>& pts) {
        std::vector<DiskPoint> p;
        for (auto z : pts) p.push_back(point(z));
        return separation(p);
    });

    m.def("blaschke_sum", &blaschke_sum);
    m.def("log_modulus", [](const ZeroSet& zs, Complex z) { return log_modulus(zs, point(z)); });
    m.def("poisson_kernel", [](Complex z, double theta) { return poisson_kernel(point(z), theta); });
    m.def("harmonic_measure", [](Complex z, double lo, double hi) {
        return harmonic_measure(point(z), BoundaryArc(lo, hi));
    });
    m.def("h_square", [](const WhitneySquare& q, Complex z) { return h_square(q, point(z)); });
    m.def("h_lambda", [](const ZeroSet& zs, Complex z) { return h_lambda(zs, point(z)); });
    m.def("harnack_bounds", [](Complex z, Complex w) {
        const auto b = harnack_bounds(point(z), point(w));
        return py::make_tuple(b.lo, b.hi);
    });

    m.def(
        "min_mass",
        [](const std::vector<std::pair<Complex, double>>& constraints, int grid_n) {
            ConstraintSet c;
            for (const auto& [z, v] : constraints) c.add(point(z), v);
            MinMassOptions opt;
            opt.grid_n = grid_n;
            return solve_report(min_mass(c, opt));
        },
        py::arg("constraints"), py::arg("grid_n") = 256,
        "Least total mass of a boundary measure whose Poisson integral dominates each (z, value).");

    m.def("classify", [](const std::vector<double>& masses) { return to_string(classify(masses)); });

    m.def(
        "majorant_diagnostic",
        [](const ZeroSet& zs, const HarmonicFn& h, const std::vector<int>& depths, int per_square,
           double filter_scale, std::uint64_t seed) {
            SweepOptions opt;
            opt.sample.per_square = per_square;
            opt.sample.filter_scale = filter_scale;
            opt.sample.seed = seed;
            SweepRecord rec;
            {
                py::gil_scoped_release release;
                rec = majorant_diagnostic(zs, h, depths, opt);
            }
            py::list rows;
            for (const auto& r : rec.rows)
                rows.append(py::dict(py::arg("depth") = r.depth, py::arg("count") = r.count, py::arg("mass") = r.mass,
                                     py::arg("status") = to_string(r.status)));
            py::dict d;
            d["rows"] = rows;
            d["masses"] = rec.masses();
            d["classification"] = to_string(rec.classification);
            d["growth_exponent"] = rec.growth_exponent;
            return d;
        },
        py::arg("zeros"), py::arg("h"), py::arg("depths"), py::arg("per_square") = 16, py::arg("filter_scale") = 1.0,
        py::arg("seed") = 0);

    m.def("family_blaschke", [](const std::vector<Complex>& pts, const std::vector<std::int64_t>& mults) {
        std::vector<DiskPoint> p;
        for (auto z : pts) p.push_back(point(z));
        const auto f = family_blaschke(p, mults);
        return py::make_tuple(f.zeros, f.separation, f.disk_radius);
    });

    m.def("thm5a_build", [](const HarmonicFn& h1, const HarmonicFn& h2, int count) {
        const auto r = thm5a_build(h1, h2, count);
        return py::make_tuple(r.zeros, r.theta);
    });

    m.def("format_double", &io::format_double);
}
