#include "gwscal/set_rep.hpp"

#include <sstream>

namespace gwscal {

const char* builtin_name(BuiltinSet s) {
    switch (s) {
    case BuiltinSet::hyperbola_epi_2d: return "hyperbola_epi_2d";
    case BuiltinSet::parabola_epi_2d: return "parabola_epi_2d";
    case BuiltinSet::shifted_hyperbola_2d: return "shifted_hyperbola_2d";
    case BuiltinSet::halfplane_x_2d: return "halfplane_x_2d";
    }
    return "?";
}

std::optional<BuiltinSet> builtin_from_name(const std::string& name) {
    for (BuiltinSet s : {BuiltinSet::hyperbola_epi_2d, BuiltinSet::parabola_epi_2d,
                         BuiltinSet::shifted_hyperbola_2d, BuiltinSet::halfplane_x_2d})
        if (name == builtin_name(s)) return s;
    return std::nullopt;
}

SetRep SetRep::halfspace_intersection(std::vector<Halfspace> rows) {
    if (rows.empty()) throw std::invalid_argument("SetRep: halfspace list must be nonempty");
    const std::size_t d = rows.front().normal.size();
    if (d == 0) throw std::invalid_argument("SetRep: dimension must be >= 1");
    for (const Halfspace& h : rows) {
        if (h.normal.size() != d) throw DimensionMismatch("SetRep: halfspace rows disagree in dimension");
        if (!is_finite_point(h.normal) || !std::isfinite(h.offset))
            throw std::invalid_argument("SetRep: halfspace entries must be finite");
        if (is_zero(h.normal)) throw std::invalid_argument("SetRep: halfspace normal must be nonzero");
    }
    SetRep s(Kind::halfspaces, d);
    s.rows_ = std::move(rows);
    return s;
}

SetRep SetRep::orthant(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("SetRep: dimension must be >= 1");
    return SetRep(Kind::orthant, dim);
}

SetRep SetRep::generator_cone(std::vector<Point> generators) {
    if (generators.empty()) throw std::invalid_argument("SetRep: generator list must be nonempty");
    const std::size_t d = generators.front().size();
    if (d == 0) throw std::invalid_argument("SetRep: dimension must be >= 1");
    for (const Point& g : generators) {
        if (g.size() != d) throw DimensionMismatch("SetRep: generators disagree in dimension");
        if (!is_finite_point(g)) throw std::invalid_argument("SetRep: generator entries must be finite");
        if (is_zero(g)) throw std::invalid_argument("SetRep: generators must be nonzero");
    }
    SetRep s(Kind::generator_cone, d);
    s.generators_ = std::move(generators);
    return s;
}

SetRep SetRep::builtin(BuiltinSet which) {
    SetRep s(Kind::builtin, 2); // every registry entry lives in R^2
    s.builtin_ = which;
    return s;
}

const std::vector<Halfspace>& SetRep::rows() const {
    if (kind_ != Kind::halfspaces) throw std::logic_error("SetRep::rows on non-halfspace representation");
    return rows_;
}

const std::vector<Point>& SetRep::generators() const {
    if (kind_ != Kind::generator_cone) throw std::logic_error("SetRep::generators on non-cone representation");
    return generators_;
}

BuiltinSet SetRep::builtin_id() const {
    if (kind_ != Kind::builtin) throw std::logic_error("SetRep::builtin_id on non-builtin representation");
    return builtin_;
}

std::string SetRep::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::halfspaces: os << "halfspaces(" << rows_.size() << " rows, dim " << dim_ << ")"; break;
    case Kind::orthant: os << "orthant(dim " << dim_ << ")"; break;
    case Kind::generator_cone: os << "generator_cone(" << generators_.size() << " generators, dim " << dim_ << ")"; break;
    case Kind::builtin: os << "builtin(" << builtin_name(builtin_) << ")"; break;
    }
    return os.str();
}

} // namespace gwscal
