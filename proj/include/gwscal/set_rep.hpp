#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwscal/vec.hpp"

namespace gwscal {

struct UnsupportedRepresentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateGenerators : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPointedCone : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed halfspace {y : <normal, y> >= offset}. normal != 0.
struct Halfspace {
    Point normal;
    double offset = 0.0;
};

/// The fixed registry of analytically-described sets. Membership, interior
/// membership and recession-cone membership are exact formulas for each.
enum class BuiltinSet {
    hyperbola_epi_2d,    // {(y1,y2) : y1 > 0, y2 >= 1/y1},          0+H = R^2_+
    parabola_epi_2d,     // {(y1,y2) : y2 >= y1^2},                  0+H = {0} x R_+
    shifted_hyperbola_2d,// {y1 >= -1, y2 >= -1, (y1+1)(y2+1) >= 1}, 0+H = R^2_+
    halfplane_x_2d,      // {(y1,y2) : y1 >= 0}
};

const char* builtin_name(BuiltinSet s);
std::optional<BuiltinSet> builtin_from_name(const std::string& name);

/// Representation of a proper closed set H in R^l.
///
/// One of: a finite halfspace intersection, the nonnegative orthant, the cone
/// generated by a finite point set (supported for l <= 3), or a builtin
/// analytic oracle from the registry above.
class SetRep {
public:
    enum class Kind { halfspaces, orthant, generator_cone, builtin };

    static SetRep halfspace_intersection(std::vector<Halfspace> rows);
    static SetRep orthant(std::size_t dim);
    static SetRep generator_cone(std::vector<Point> generators);
    static SetRep builtin(BuiltinSet which);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }

    const std::vector<Halfspace>& rows() const;
    const std::vector<Point>& generators() const;
    BuiltinSet builtin_id() const;

    std::string describe() const;

private:
    SetRep(Kind k, std::size_t dim) : kind_(k), dim_(dim) {}

    Kind kind_;
    std::size_t dim_;
    std::vector<Halfspace> rows_;
    std::vector<Point> generators_;
    BuiltinSet builtin_ = BuiltinSet::hyperbola_epi_2d;
};

} // namespace gwscal
