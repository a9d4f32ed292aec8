#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gwscal/set_rep.hpp"
#include "gwscal/tribool.hpp"
#include "gwscal/vec.hpp"

namespace gwscal {

/// Builtin feasible-point sets, each with an intrinsic parametrization.
enum class CurveId {
    triangle_ex311,        // {0 <= y2 <= y1 <= 1}
    hyperbola_branch_ex613,// {y1 > 0, y2 = 1/y1}
    xaxis_ex614,           // {y2 = 0}
    plane_curve_ex615,     // {2y1 + y2 + 2y3 = 0, y1 > 0, y2 <= -1/y1}
    plane_curve_ex616,     // {y1 + y3 = 0, y2 <= -1/y1, y1 > 0}
    parabola_arc_ex617,    // {y1 >= 0, y2 = -y1^2} plus the point (-1, 0)
    orthant_ex618,         // R^2_+
};

const char* curve_name(CurveId id);
std::optional<CurveId> curve_from_name(const std::string& name);

/// Static description of a builtin curve: ambient dimension, number of
/// parameters, default ranges, which range ends may be extended when probing
/// for an unattained infimum, and the declared set properties.
struct CurveTraits {
    std::size_t dim = 2;
    std::size_t params = 1;
    std::vector<std::array<double, 2>> default_range;
    std::vector<bool> extend_lo, extend_hi;
    bool compact = false;
    bool closed = true;
    bool convex = false;
    std::optional<Point> lower_bound; // u with F subseteq u + R^l_+
    std::vector<Point> extra_points;  // isolated points appended to samples
};

const CurveTraits& curve_traits(CurveId id);

/// Point on the curve for a parameter tuple.
Point curve_point(CurveId id, const std::vector<double>& params);

/// Keeps only points of a - H + t0 k when attached to a FeasibleSet.
struct LevelCap {
    Point a;
    SetRep H;
    Point k;
    double t0 = 0.0;
};

/// The feasible point set F: an explicit finite list, a sampled box region,
/// or a builtin parametrized set.
class FeasibleSet {
public:
    enum class Kind { finite_points, grid_region, builtin_curve };

    static FeasibleSet finite(std::vector<Point> pts);
    static FeasibleSet grid(Point lo, Point hi, int resolution, std::optional<SetRep> membership = std::nullopt);
    static FeasibleSet curve(CurveId id);
    static FeasibleSet curve(CurveId id, std::vector<std::array<double, 2>> ranges, int density);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }

    const std::vector<Point>& points() const { return points_; }
    CurveId curve_id() const { return curve_; }
    const std::vector<std::array<double, 2>>& ranges() const { return ranges_; }
    int density() const { return density_; }
    const Point& box_lo() const { return lo_; }
    const Point& box_hi() const { return hi_; }
    int resolution() const { return resolution_; }
    const std::optional<SetRep>& membership() const { return membership_; }
    const std::optional<LevelCap>& level_cap() const { return cap_; }

    FeasibleSet with_level_cap(LevelCap cap) const;

    /// True when the parameter ranges can be pushed outward (unbounded sets).
    bool extendable() const;
    /// Ranges doubled on every extendable end.
    FeasibleSet extended() const;

    /// The sample this set stands for. Grid and curve samples include range
    /// endpoints; the level cap and grid membership are applied.
    std::vector<Point> sample() const;

    // Declared set-level properties (refer to the underlying set, not the
    // sample; FinitePoints are their own underlying set).
    TriBool is_compact() const;
    TriBool is_closed() const;
    TriBool is_convex() const;
    std::optional<Point> lower_bound() const;

    /// Grid membership and level-cap filters applied to a candidate point.
    bool passes_filters(const Point& y) const;

    std::string describe() const;

private:
    explicit FeasibleSet(Kind k) : kind_(k) {}

    Kind kind_;
    std::size_t dim_ = 0;
    std::vector<Point> points_;          // finite_points
    Point lo_, hi_;                      // grid_region
    int resolution_ = 0;                 // grid_region
    std::optional<SetRep> membership_;   // grid_region
    CurveId curve_ = CurveId::xaxis_ex614;
    std::vector<std::array<double, 2>> ranges_;
    int density_ = 0;
    std::optional<LevelCap> cap_;
};

/// Sample with parameter bookkeeping, for local refinement around incumbent
/// cells. `params` is empty for finite point sets.
struct DetailedSample {
    std::vector<Point> points;
    std::vector<std::vector<double>> params; // parallel to points
    std::vector<double> steps;               // per-parameter grid step
};

DetailedSample detailed_sample(const FeasibleSet& F);

/// Points near the given parameter tuples at a finer step (used by the
/// solver's refinement rounds). Results are filtered like sample().
DetailedSample refined_sample(const FeasibleSet& F, const std::vector<std::vector<double>>& around,
                              const std::vector<double>& steps);

} // namespace gwscal
