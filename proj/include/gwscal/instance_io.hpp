#pragma once

#include <string>
#include <vector>

#include "gwscal/parameters.hpp"
#include "gwscal/solver.hpp"

namespace gwscal {

/// Parse failure with the offending field named.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_path(field) {}
    std::string field_path;
};

/// Instance file schema (one self-describing JSON document):
///   dim        integer
///   H          {"kind": "halfspaces"|"orthant"|"generators3d"|"builtin", ...}
///   F          {"kind": "points"|"grid"|"curve", ...}
///   a, k       arrays of dim numbers
///   options    {"tol": 1e-9, "t_max": 1e12, "grid": n}   (optional)
///   separation {"C": H-spec, "z": [...], "u": [...]}     (optional)
ProblemInstance parse_instance_text(const std::string& json_text);
ProblemInstance load_instance(const std::string& path);

SetRep parse_set_text(const std::string& json_text);

std::vector<Point> parse_points_text(const std::string& json_text);
std::vector<Point> load_points(const std::string& path);

/// Sweep spec schema:
///   a: {"mode": "explicit", "points": [...]} |
///      {"mode": "coordinate_zero"|"sum_zero", "grid": [...]}   (grid shifted onto the slice)
///   k: {"mode": "explicit", "points": [...]} | {"mode": "simplex", "resolution": r}
SweepSpec parse_sweep_text(const std::string& json_text, const SetRep& H, std::size_t dim);
SweepSpec load_sweep(const std::string& path, const SetRep& H, std::size_t dim);

/// Deterministic number rendering used for CSV / report output.
std::string format_number(double v);
std::string format_point(const Point& p, char sep = ',');

} // namespace gwscal
