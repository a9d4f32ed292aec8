#include "gwscal/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <sstream>
#include <unordered_set>

#include "gwscal/geometry.hpp"

namespace gwscal {

const char* curve_name(CurveId id) {
    switch (id) {
    case CurveId::triangle_ex311: return "triangle_ex311";
    case CurveId::hyperbola_branch_ex613: return "hyperbola_branch_ex613";
    case CurveId::xaxis_ex614: return "xaxis_ex614";
    case CurveId::plane_curve_ex615: return "plane_curve_ex615";
    case CurveId::plane_curve_ex616: return "plane_curve_ex616";
    case CurveId::parabola_arc_ex617: return "parabola_arc_ex617";
    case CurveId::orthant_ex618: return "orthant_ex618";
    }
    return "?";
}

std::optional<CurveId> curve_from_name(const std::string& name) {
    for (CurveId id : {CurveId::triangle_ex311, CurveId::hyperbola_branch_ex613, CurveId::xaxis_ex614,
                       CurveId::plane_curve_ex615, CurveId::plane_curve_ex616, CurveId::parabola_arc_ex617,
                       CurveId::orthant_ex618})
        if (name == curve_name(id)) return id;
    return std::nullopt;
}

const CurveTraits& curve_traits(CurveId id) {
    static const std::map<CurveId, CurveTraits> table = [] {
        std::map<CurveId, CurveTraits> t;
        {
            CurveTraits c;
            c.dim = 2;
            c.params = 2;
            c.default_range = {{0.0, 1.0}, {0.0, 1.0}};
            c.extend_lo = {false, false};
            c.extend_hi = {false, false};
            c.compact = true;
            c.convex = true;
            c.lower_bound = Point{0.0, 0.0};
            t[CurveId::triangle_ex311] = c;
        }
        {
            CurveTraits c;
            c.dim = 2;
            c.params = 1;
            c.default_range = {{-2.0, 2.0}};
            c.extend_lo = {true};
            c.extend_hi = {true};
            c.lower_bound = Point{0.0, 0.0};
            t[CurveId::hyperbola_branch_ex613] = c;
        }
        {
            CurveTraits c;
            c.dim = 2;
            c.params = 1;
            c.default_range = {{-2.0, 2.0}};
            c.extend_lo = {true};
            c.extend_hi = {true};
            c.convex = true;
            t[CurveId::xaxis_ex614] = c;
        }
        {
            CurveTraits c;
            c.dim = 3;
            c.params = 2;
            c.default_range = {{-2.0, 2.0}, {0.0, 4.0}};
            c.extend_lo = {true, false};
            c.extend_hi = {true, true};
            c.convex = true;
            t[CurveId::plane_curve_ex615] = c;
        }
        {
            CurveTraits c;
            c.dim = 3;
            c.params = 2;
            c.default_range = {{-2.0, 2.0}, {0.0, 4.0}};
            c.extend_lo = {true, false};
            c.extend_hi = {true, true};
            c.convex = true;
            t[CurveId::plane_curve_ex616] = c;
        }
        {
            CurveTraits c;
            c.dim = 2;
            c.params = 1;
            c.default_range = {{0.0, 600.0}};
            c.extend_lo = {false};
            c.extend_hi = {true};
            c.extra_points = {Point{-1.0, 0.0}};
            t[CurveId::parabola_arc_ex617] = c;
        }
        {
            CurveTraits c;
            c.dim = 2;
            c.params = 2;
            c.default_range = {{0.0, 4.0}, {0.0, 4.0}};
            c.extend_lo = {false, false};
            c.extend_hi = {true, true};
            c.convex = true;
            c.lower_bound = Point{0.0, 0.0};
            t[CurveId::orthant_ex618] = c;
        }
        return t;
    }();
    return table.at(id);
}

Point curve_point(CurveId id, const std::vector<double>& p) {
    switch (id) {
    case CurveId::triangle_ex311:
        // y1 = p0 in [0,1], y2 = p1 * y1 covers {0 <= y2 <= y1 <= 1}.
        return {p[0], p[1] * p[0]};
    case CurveId::hyperbola_branch_ex613: {
        const double u = std::exp(p[0]);
        return {u, 1.0 / u};
    }
    case CurveId::xaxis_ex614:
        return {p[0], 0.0};
    case CurveId::plane_curve_ex615: {
        // y1 = e^s, y2 = -1/y1 - r, y3 solves 2y1 + y2 + 2y3 = 0.
        const double u = std::exp(p[0]);
        const double v = -1.0 / u - p[1];
        return {u, v, -u - 0.5 * v};
    }
    case CurveId::plane_curve_ex616: {
        const double u = std::exp(p[0]);
        return {u, -1.0 / u - p[1], -u};
    }
    case CurveId::parabola_arc_ex617:
        return {p[0], -p[0] * p[0]};
    case CurveId::orthant_ex618:
        return {p[0], p[1]};
    }
    throw std::logic_error("curve_point: unknown curve");
}

FeasibleSet FeasibleSet::finite(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("FeasibleSet: point list must be nonempty");
    const std::size_t d = pts.front().size();
    for (const Point& p : pts) {
        if (p.size() != d) throw DimensionMismatch("FeasibleSet: points disagree in dimension");
        if (!is_finite_point(p)) throw std::invalid_argument("FeasibleSet: point entries must be finite");
    }
    FeasibleSet f(Kind::finite_points);
    f.dim_ = d;
    f.points_ = std::move(pts);
    return f;
}

FeasibleSet FeasibleSet::grid(Point lo, Point hi, int resolution, std::optional<SetRep> membership) {
    check_same_dim(lo, hi, "FeasibleSet::grid");
    if (resolution < 2) throw std::invalid_argument("FeasibleSet: grid resolution must be >= 2");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < hi[i])) throw std::invalid_argument("FeasibleSet: grid box must have lo < hi");
    if (membership && membership->dim() != lo.size())
        throw DimensionMismatch("FeasibleSet: membership set dimension mismatch");
    FeasibleSet f(Kind::grid_region);
    f.dim_ = lo.size();
    f.lo_ = std::move(lo);
    f.hi_ = std::move(hi);
    f.resolution_ = resolution;
    f.membership_ = std::move(membership);
    return f;
}

FeasibleSet FeasibleSet::curve(CurveId id) {
    const CurveTraits& tr = curve_traits(id);
    return curve(id, tr.default_range, tr.params == 1 ? 201 : 41);
}

FeasibleSet FeasibleSet::curve(CurveId id, std::vector<std::array<double, 2>> ranges, int density) {
    const CurveTraits& tr = curve_traits(id);
    if (ranges.size() != tr.params)
        throw std::invalid_argument("FeasibleSet: curve expects " + std::to_string(tr.params) + " parameter ranges");
    if (density < 2) throw std::invalid_argument("FeasibleSet: curve sampling density must be >= 2");
    FeasibleSet f(Kind::builtin_curve);
    f.dim_ = tr.dim;
    f.curve_ = id;
    f.ranges_ = std::move(ranges);
    f.density_ = density;
    return f;
}

FeasibleSet FeasibleSet::with_level_cap(LevelCap cap) const {
    if (cap.a.size() != dim_ || cap.k.size() != dim_ || cap.H.dim() != dim_)
        throw DimensionMismatch("FeasibleSet: level cap dimension mismatch");
    FeasibleSet f = *this;
    f.cap_ = std::move(cap);
    return f;
}

bool FeasibleSet::extendable() const {
    if (kind_ != Kind::builtin_curve) return false;
    const CurveTraits& tr = curve_traits(curve_);
    for (std::size_t i = 0; i < tr.params; ++i)
        if (tr.extend_lo[i] || tr.extend_hi[i]) return true;
    return false;
}

FeasibleSet FeasibleSet::extended() const {
    if (!extendable()) throw std::logic_error("FeasibleSet::extended on a fixed-range set");
    const CurveTraits& tr = curve_traits(curve_);
    FeasibleSet f = *this;
    // One extension round doubles the width of every extendable range.
    for (std::size_t i = 0; i < tr.params; ++i) {
        const double width = ranges_[i][1] - ranges_[i][0];
        const bool lo = tr.extend_lo[i], hi = tr.extend_hi[i];
        if (lo && hi) {
            f.ranges_[i][0] -= width / 2.0;
            f.ranges_[i][1] += width / 2.0;
        } else if (lo) {
            f.ranges_[i][0] -= width;
        } else if (hi) {
            f.ranges_[i][1] += width;
        }
    }
    return f;
}

bool FeasibleSet::passes_filters(const Point& y) const {
    if (kind_ == Kind::grid_region && membership_ && !contains(*membership_, y)) return false;
    if (cap_ && !level_set_contains(cap_->a, cap_->H, cap_->k, cap_->t0, y)) return false;
    return true;
}

namespace {

// Endpoint-exact linspace: lo + (i * (hi - lo)) / n keeps integer-ratio grids
// (like 0..4 over 40 cells) landing on exact values.
double grid_value(double lo, double hi, int i, int n) { return lo + (static_cast<double>(i) * (hi - lo)) / n; }

} // namespace

std::vector<Point> FeasibleSet::sample() const { return detailed_sample(*this).points; }

DetailedSample detailed_sample(const FeasibleSet& F) {
    DetailedSample out;
    switch (F.kind()) {
    case FeasibleSet::Kind::finite_points: {
        for (const Point& p : F.points())
            if (F.passes_filters(p)) out.points.push_back(p);
        return out;
    }
    case FeasibleSet::Kind::grid_region: {
        const std::size_t d = F.dim();
        const int n = F.resolution();
        out.steps.assign(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) out.steps[i] = (F.box_hi()[i] - F.box_lo()[i]) / n;
        std::vector<int> idx(d, 0);
        while (true) {
            Point p(d);
            for (std::size_t i = 0; i < d; ++i) p[i] = grid_value(F.box_lo()[i], F.box_hi()[i], idx[i], n);
            if (F.passes_filters(p)) {
                out.params.emplace_back(p.begin(), p.end());
                out.points.push_back(std::move(p));
            }
            std::size_t carry = 0;
            while (carry < d && ++idx[carry] > n) idx[carry++] = 0;
            if (carry == d) break;
        }
        return out;
    }
    case FeasibleSet::Kind::builtin_curve: {
        const CurveTraits& tr = curve_traits(F.curve_id());
        const int n = F.density() - 1;
        out.steps.assign(tr.params, 0.0);
        for (std::size_t i = 0; i < tr.params; ++i)
            out.steps[i] = (F.ranges()[i][1] - F.ranges()[i][0]) / n;
        std::vector<int> idx(tr.params, 0);
        while (true) {
            std::vector<double> prm(tr.params);
            for (std::size_t i = 0; i < tr.params; ++i)
                prm[i] = grid_value(F.ranges()[i][0], F.ranges()[i][1], idx[i], n);
            Point p = curve_point(F.curve_id(), prm);
            if (F.passes_filters(p)) {
                out.params.push_back(std::move(prm));
                out.points.push_back(std::move(p));
            }
            std::size_t carry = 0;
            while (carry < tr.params && ++idx[carry] > n) idx[carry++] = 0;
            if (carry == tr.params) break;
        }
        for (const Point& extra : tr.extra_points)
            if (F.passes_filters(extra)) {
                out.params.emplace_back(); // no parameter cell
                out.points.push_back(extra);
            }
        return out;
    }
    }
    return out;
}

DetailedSample refined_sample(const FeasibleSet& F, const std::vector<std::vector<double>>& around,
                              const std::vector<double>& steps) {
    DetailedSample out;
    out.steps = steps;
    if (F.kind() == FeasibleSet::Kind::finite_points) return out;

    const std::size_t np = steps.size();
    std::vector<std::array<double, 2>> clamp(np);
    if (F.kind() == FeasibleSet::Kind::grid_region) {
        for (std::size_t i = 0; i < np; ++i) clamp[i] = {F.box_lo()[i], F.box_hi()[i]};
    } else {
        for (std::size_t i = 0; i < np; ++i) clamp[i] = {F.ranges()[i][0], F.ranges()[i][1]};
    }

    // 5 points per axis around each center at the refined step. Duplicates
    // across overlapping neighborhoods are filtered by bit-exact key.
    std::unordered_set<std::string> seen;
    for (const auto& center : around) {
        if (center.size() != np) continue; // isolated extra points carry no cell
        std::vector<int> idx(np, -2);
        while (true) {
            std::vector<double> prm(np);
            bool inside = true;
            for (std::size_t i = 0; i < np; ++i) {
                prm[i] = center[i] + idx[i] * steps[i];
                if (prm[i] < clamp[i][0] - 1e-15 || prm[i] > clamp[i][1] + 1e-15) inside = false;
                prm[i] = std::clamp(prm[i], clamp[i][0], clamp[i][1]);
            }
            if (inside) {
                std::string key(np * sizeof(double), '\0');
                std::memcpy(key.data(), prm.data(), np * sizeof(double));
                if (seen.insert(std::move(key)).second) {
                    Point p = F.kind() == FeasibleSet::Kind::grid_region
                                  ? Point(prm.begin(), prm.end())
                                  : curve_point(F.curve_id(), prm);
                    if (F.passes_filters(p)) {
                        out.params.push_back(std::move(prm));
                        out.points.push_back(std::move(p));
                    }
                }
            }
            std::size_t carry = 0;
            while (carry < np && ++idx[carry] > 2) idx[carry++] = -2;
            if (carry == np) break;
        }
        if (seen.size() > 60000) break; // refinement work cap
    }
    return out;
}

TriBool FeasibleSet::is_compact() const {
    switch (kind_) {
    case Kind::finite_points: return TriBool::yes;
    case Kind::grid_region: return TriBool::yes; // box-bounded by construction
    case Kind::builtin_curve: return tri_from(curve_traits(curve_).compact);
    }
    return TriBool::unknown;
}

TriBool FeasibleSet::is_closed() const {
    switch (kind_) {
    case Kind::finite_points: return TriBool::yes;
    case Kind::grid_region: return TriBool::yes;
    case Kind::builtin_curve: return tri_from(curve_traits(curve_).closed);
    }
    return TriBool::unknown;
}

TriBool FeasibleSet::is_convex() const {
    switch (kind_) {
    case Kind::finite_points:
        return tri_from(points_.size() == 1);
    case Kind::grid_region:
        if (!membership_) return TriBool::yes;
        return is_convex_set(*membership_);
    case Kind::builtin_curve:
        return tri_from(curve_traits(curve_).convex);
    }
    return TriBool::unknown;
}

std::optional<Point> FeasibleSet::lower_bound() const {
    switch (kind_) {
    case Kind::finite_points: {
        Point u = points_.front();
        for (const Point& p : points_)
            for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::min(u[i], p[i]);
        return u;
    }
    case Kind::grid_region:
        return lo_;
    case Kind::builtin_curve:
        return curve_traits(curve_).lower_bound;
    }
    return std::nullopt;
}

std::string FeasibleSet::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::finite_points: os << "points(" << points_.size() << ")"; break;
    case Kind::grid_region: os << "grid(res " << resolution_ << ", dim " << dim_ << ")"; break;
    case Kind::builtin_curve: os << "curve(" << curve_name(curve_) << ", density " << density_ << ")"; break;
    }
    if (cap_) os << " capped at t0=" << cap_->t0;
    return os.str();
}

} // namespace gwscal
