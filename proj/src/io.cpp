#include "nevmaj/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace nevmaj::io {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

double get_number(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number()) throw ParseError(std::string("missing numeric field \"") + key + "\"");
    return it->get<double>();
}

const json& get_array(const json& doc, const char* key) {
    if (!doc.is_object()) throw ParseError("expected a JSON object at top level");
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_array()) throw ParseError(std::string("missing array \"") + key + "\"");
    return *it;
}

DiskPoint point_of(const json& e) {
    try {
        return DiskPoint(get_number(e, "re"), get_number(e, "im"));
    } catch (const std::domain_error& ex) {
        throw ParseError(ex.what());
    }
}

// Non-finite values have no JSON number form and are written as strings.
ordered_json number(double x) {
    if (std::isfinite(x)) return x;
    return format_double(x);
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string zero_set_to_json(const ZeroSet& zeros) {
    ordered_json arr = ordered_json::array();
    for (const auto& z : zeros.zeros()) {
        arr.push_back({{"re", number(z.point.re())}, {"im", number(z.point.im())}, {"mult", z.mult}});
    }
    return ordered_json{{"zeros", arr}}.dump(1) + "\n";
}

ZeroSet zero_set_from_json(const std::string& text) {
    const auto doc = parse(text);
    std::vector<Zero> zs;
    for (const auto& e : get_array(doc, "zeros")) {
        std::int64_t mult = 1;
        if (auto it = e.find("mult"); it != e.end()) {
            if (!it->is_number_integer()) throw ParseError("\"mult\" must be an integer");
            mult = it->get<std::int64_t>();
        }
        if (mult < 1) throw ParseError("\"mult\" must be >= 1");
        zs.push_back({point_of(e), mult});
    }
    return ZeroSet(std::move(zs));
}

std::string measure_to_json(const BoundaryMeasure& m) {
    ordered_json atoms = ordered_json::array(), arcs = ordered_json::array();
    for (const auto& a : m.atoms()) atoms.push_back({{"theta", number(a.theta)}, {"mass", number(a.mass)}});
    for (const auto& p : m.arcs())
        arcs.push_back({{"lo", number(p.arc.lo())}, {"hi", number(p.arc.hi())}, {"density", number(p.density)}});
    return ordered_json{{"atoms", atoms}, {"arcs", arcs}}.dump(1) + "\n";
}

BoundaryMeasure measure_from_json(const std::string& text) {
    const auto doc = parse(text);
    if (!doc.is_object()) throw ParseError("expected a JSON object at top level");
    BoundaryMeasure m;
    try {
        if (doc.contains("atoms"))
            for (const auto& e : get_array(doc, "atoms")) m.add_atom(get_number(e, "theta"), get_number(e, "mass"));
        if (doc.contains("arcs"))
            for (const auto& e : get_array(doc, "arcs"))
                m.add_arc(BoundaryArc(get_number(e, "lo"), get_number(e, "hi")), get_number(e, "density"));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
    return m;
}

std::string constraints_to_json(const ConstraintSet& c) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : c.constraints)
        arr.push_back({{"re", number(e.z.re())}, {"im", number(e.z.im())}, {"value", number(e.value)}});
    return ordered_json{{"constraints", arr}}.dump(1) + "\n";
}

ConstraintSet constraints_from_json(const std::string& text) {
    const auto doc = parse(text);
    ConstraintSet c;
    for (const auto& e : get_array(doc, "constraints")) {
        try {
            c.add(point_of(e), get_number(e, "value"));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
    }
    return c;
}

std::vector<DiskPoint> points_from_json(const std::string& text) {
    const auto doc = parse(text);
    std::vector<DiskPoint> out;
    for (const auto& e : get_array(doc, "points")) out.push_back(point_of(e));
    return out;
}

std::string sweep_to_csv(const SweepRecord& rec) {
    std::string s = "depth,count,mass,runtime_ms\n";
    for (const auto& r : rec.rows) {
        s += std::to_string(r.depth) + "," + std::to_string(r.count) + "," + format_double(r.mass) + "," +
             format_double(r.runtime_ms) + "\n";
    }
    return s;
}

std::string eval_to_csv(const std::vector<DiskPoint>& points, const std::vector<double>& values) {
    if (points.size() != values.size()) throw std::invalid_argument("eval_to_csv: size mismatch");
    std::string s = "re,im,value\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        s += format_double(points[i].re()) + "," + format_double(points[i].im()) + "," + format_double(values[i]) + "\n";
    }
    return s;
}

std::string construction_log_to_jsonl(const ConstructionLog& log) {
    std::string s;
    for (const auto& r : log) {
        ordered_json checks = ordered_json::object();
        for (const auto& [name, cv] : r.checks) checks[name] = {{"value", number(cv.value)}, {"pass", cv.pass}};
        ordered_json line{{"k", r.k},
                          {"z_re", number(r.z.re())},
                          {"z_im", number(r.z.im())},
                          {"H", number(r.h)},
                          {"R", number(r.r)},
                          {"N", r.n},
                          {"placed", r.placed},
                          {"capped", r.capped},
                          {"checks", checks},
                          {"index", r.index},
                          {"accepted", r.accepted},
                          {"branch", r.branch},
                          {"note", r.note}};
        s += line.dump() + "\n";
    }
    return s;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace nevmaj::io
