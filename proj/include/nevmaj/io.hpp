#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "nevmaj/blaschke.hpp"
#include "nevmaj/constructions.hpp"
#include "nevmaj/harmonic.hpp"
#include "nevmaj/majorant.hpp"

namespace nevmaj::io {

/// Thrown for unreadable or malformed input files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that round-trips to the same double; "-inf", "inf" and "nan" otherwise.
std::string format_double(double x);

std::string zero_set_to_json(const ZeroSet& zeros);
ZeroSet zero_set_from_json(const std::string& text);

std::string measure_to_json(const BoundaryMeasure& m);
BoundaryMeasure measure_from_json(const std::string& text);

std::string constraints_to_json(const ConstraintSet& c);
ConstraintSet constraints_from_json(const std::string& text);

/// Explicit point list: {"points": [{"re": r, "im": i}, ...]}.
std::vector<DiskPoint> points_from_json(const std::string& text);

/// depth,count,mass,runtime_ms
std::string sweep_to_csv(const SweepRecord& rec);

/// re,im,value
std::string eval_to_csv(const std::vector<DiskPoint>& points, const std::vector<double>& values);

/// One JSON object per line with fields k, z_re, z_im, H, R, N, placed, capped, checks.
std::string construction_log_to_jsonl(const ConstructionLog& log);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace nevmaj::io
