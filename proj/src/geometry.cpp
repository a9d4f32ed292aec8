#include "gwscal/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gwscal {

namespace {

void check_dim(const SetRep& S, const Point& y, const char* where) {
    if (S.dim() != y.size())
        throw DimensionMismatch(std::string(where) + ": point dimension " + std::to_string(y.size()) +
                                " does not match set dimension " + std::to_string(S.dim()));
}

// ---- builtin oracle formulas ---------------------------------------------

// Membership is exact: the registry formulas are evaluated as written, so
// integer-valued inputs decide equalities without rounding slack.
bool builtin_member(BuiltinSet id, const Point& y) {
    switch (id) {
    case BuiltinSet::hyperbola_epi_2d:
        return y[0] > 0.0 && y[0] * y[1] >= 1.0;
    case BuiltinSet::parabola_epi_2d:
        return y[1] >= y[0] * y[0];
    case BuiltinSet::shifted_hyperbola_2d:
        return y[0] + 1.0 > 0.0 && y[1] >= -1.0 && (y[0] + 1.0) * (y[1] + 1.0) >= 1.0;
    case BuiltinSet::halfplane_x_2d:
        return y[0] >= 0.0;
    }
    return false;
}

bool builtin_interior(BuiltinSet id, const Point& y) {
    const double e = geom_eps(y);
    switch (id) {
    case BuiltinSet::hyperbola_epi_2d:
        return y[0] > 0.0 && y[0] * y[1] > 1.0 + e;
    case BuiltinSet::parabola_epi_2d:
        return y[1] > y[0] * y[0] + e;
    case BuiltinSet::shifted_hyperbola_2d:
        return y[0] > -1.0 + e && y[1] > -1.0 + e && (y[0] + 1.0) * (y[1] + 1.0) > 1.0 + e;
    case BuiltinSet::halfplane_x_2d:
        return y[0] > e;
    }
    return false;
}

bool builtin_recession(BuiltinSet id, const Point& u) {
    const double e = geom_eps(u);
    switch (id) {
    case BuiltinSet::hyperbola_epi_2d:
    case BuiltinSet::shifted_hyperbola_2d:
        return u[0] >= -e && u[1] >= -e;
    case BuiltinSet::parabola_epi_2d:
        return std::fabs(u[0]) <= e && u[1] >= -e;
    case BuiltinSet::halfplane_x_2d:
        return u[0] >= -e;
    }
    return false;
}

bool builtin_recession_interior(BuiltinSet id, const Point& u) {
    const double e = geom_eps(u);
    switch (id) {
    case BuiltinSet::hyperbola_epi_2d:
    case BuiltinSet::shifted_hyperbola_2d:
        return u[0] > e && u[1] > e;
    case BuiltinSet::parabola_epi_2d:
        return false; // {0} x R_+ has empty interior in R^2
    case BuiltinSet::halfplane_x_2d:
        return u[0] > e;
    }
    return false;
}

bool builtin_contains_line(BuiltinSet id, const Point& d) {
    // Only the halfplane contains lines (the vertical ones).
    if (id == BuiltinSet::halfplane_x_2d) return std::fabs(d[0]) <= geom_eps(d);
    return false;
}

// ---- generator cone conversion -------------------------------------------

Point cross(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Rank of the row set via Gaussian elimination with partial pivoting.
std::size_t matrix_rank(std::vector<Point> m, double tol) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        for (std::size_t r = rank + 1; r < m.size(); ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
        if (std::fabs(m[piv][c]) <= tol) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank) continue;
            const double f = m[r][c] / m[rank][c];
            for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

SetRep convert_generator_cone(const SetRep& cone);

// Polyhedral rows of S, or nullopt.
std::optional<std::vector<Halfspace>> polyhedral_rows(const SetRep& S) {
    switch (S.kind()) {
    case SetRep::Kind::halfspaces:
        return S.rows();
    case SetRep::Kind::orthant: {
        std::vector<Halfspace> rows;
        for (std::size_t i = 0; i < S.dim(); ++i) {
            Point e(S.dim(), 0.0);
            e[i] = 1.0;
            rows.push_back({std::move(e), 0.0});
        }
        return rows;
    }
    case SetRep::Kind::builtin:
        if (S.builtin_id() == BuiltinSet::halfplane_x_2d)
            return std::vector<Halfspace>{{{1.0, 0.0}, 0.0}};
        return std::nullopt;
    case SetRep::Kind::generator_cone:
        if (S.dim() <= 3) return convert_generator_cone(S).rows();
        return std::nullopt;
    }
    return std::nullopt;
}

SetRep convert_generator_cone(const SetRep& cone) {
    const auto& gens = cone.generators();
    const std::size_t d = cone.dim();
    if (d == 3) return generators_to_halfspaces_3d(cone);
    if (d == 2) {
        // A pointed 2D cone has exactly two extreme rays; each yields a facet
        // normal (the ray rotated by 90 degrees, oriented inward).
        std::vector<Halfspace> rows;
        for (const Point& g : gens) {
            Point n{-g[1], g[0]};
            bool all_nonneg = true, all_nonpos = true;
            for (const Point& h : gens) {
                const double s = dot(n, h);
                const double tol = 1e-12 * (1.0 + inf_norm(n) * inf_norm(h));
                if (s < -tol) all_nonneg = false;
                if (s > tol) all_nonpos = false;
            }
            if (all_nonneg)
                rows.push_back({n, 0.0});
            else if (all_nonpos)
                rows.push_back({{g[1], -g[0]}, 0.0});
        }
        if (rows.empty()) throw NonPointedCone("generator cone in R^2 spans a halfplane or more");
        // Dedupe parallel normals.
        std::vector<Halfspace> unique;
        for (const Halfspace& h : rows) {
            bool dup = false;
            for (const Halfspace& u : unique) {
                const double c = dot(h.normal, u.normal);
                if (std::fabs(c - norm2(h.normal) * norm2(u.normal)) <= 1e-10 * (1.0 + std::fabs(c))) dup = true;
            }
            if (!dup) unique.push_back(h);
        }
        return SetRep::halfspace_intersection(std::move(unique));
    }
    // d == 1: cone of nonzero reals of one sign.
    bool pos = false, neg = false;
    for (const Point& g : gens) (g[0] > 0 ? pos : neg) = true;
    if (pos && neg) throw NonPointedCone("1-d generator cone covers the whole line");
    return SetRep::halfspace_intersection({{{pos ? 1.0 : -1.0}, 0.0}});
}

bool rows_member(const std::vector<Halfspace>& rows, const Point& y) {
    for (const Halfspace& h : rows) {
        const double s = dot(h.normal, y);
        if (s < h.offset - 1e-12 * (1.0 + std::fabs(h.offset) + std::fabs(s))) return false;
    }
    return true;
}

bool rows_interior(const std::vector<Halfspace>& rows, const Point& y) {
    for (const Halfspace& h : rows) {
        const double s = dot(h.normal, y);
        if (s <= h.offset + 1e-12 * (1.0 + std::fabs(h.offset) + std::fabs(s))) return false;
    }
    return true;
}

} // namespace

bool contains(const SetRep& S, const Point& y) {
    check_dim(S, y, "contains");
    switch (S.kind()) {
    case SetRep::Kind::halfspaces:
        return rows_member(S.rows(), y);
    case SetRep::Kind::orthant: {
        // Per-component tolerance, like the halfspace row test; a tolerance
        // scaled by the whole point's norm would swallow genuine violations
        // when other coordinates are large.
        for (double v : y)
            if (v < -1e-12 * (1.0 + std::fabs(v))) return false;
        return true;
    }
    case SetRep::Kind::builtin:
        return builtin_member(S.builtin_id(), y);
    case SetRep::Kind::generator_cone: {
        auto rows = polyhedral_rows(S);
        if (!rows) throw UnsupportedRepresentation("contains: generator cones supported only for dim <= 3");
        return rows_member(*rows, y);
    }
    }
    return false;
}

TriBool interior_contains(const SetRep& S, const Point& y) {
    check_dim(S, y, "interior_contains");
    switch (S.kind()) {
    case SetRep::Kind::halfspaces:
        // All-strict is exact in both directions: a point with every
        // inequality strict admits a slack ball inside S, and a point with
        // some inequality tight loses membership when pushed against that
        // row's normal.
        return tri_from(rows_interior(S.rows(), y));
    case SetRep::Kind::orthant: {
        for (double v : y)
            if (v <= 1e-12 * (1.0 + std::fabs(v))) return TriBool::no;
        return TriBool::yes;
    }
    case SetRep::Kind::builtin:
        return tri_from(builtin_interior(S.builtin_id(), y));
    case SetRep::Kind::generator_cone: {
        auto rows = polyhedral_rows(S);
        if (!rows) throw UnsupportedRepresentation("interior_contains: generator cones supported only for dim <= 3");
        return tri_from(rows_interior(*rows, y));
    }
    }
    return TriBool::unknown;
}

TriBool recession_contains(const SetRep& S, const Point& u) {
    check_dim(S, u, "recession_contains");
    switch (S.kind()) {
    case SetRep::Kind::halfspaces: {
        for (const Halfspace& h : S.rows()) {
            const double s = dot(h.normal, u);
            if (s < -1e-12 * (1.0 + inf_norm(h.normal) * inf_norm(u))) return TriBool::no;
        }
        return TriBool::yes;
    }
    case SetRep::Kind::orthant: {
        for (double v : u)
            if (v < -1e-12 * (1.0 + std::fabs(v))) return TriBool::no;
        return TriBool::yes;
    }
    case SetRep::Kind::builtin:
        return tri_from(builtin_recession(S.builtin_id(), u));
    case SetRep::Kind::generator_cone:
        // A cone is its own recession cone.
        return tri_from(contains(S, u));
    }
    return TriBool::unknown;
}

TriBool recession_interior_contains(const SetRep& S, const Point& u) {
    check_dim(S, u, "recession_interior_contains");
    switch (S.kind()) {
    case SetRep::Kind::halfspaces: {
        for (const Halfspace& h : S.rows()) {
            const double s = dot(h.normal, u);
            if (s <= 1e-12 * (1.0 + inf_norm(h.normal) * inf_norm(u))) return TriBool::no;
        }
        return TriBool::yes;
    }
    case SetRep::Kind::orthant: {
        for (double v : u)
            if (v <= 1e-12 * (1.0 + std::fabs(v))) return TriBool::no;
        return TriBool::yes;
    }
    case SetRep::Kind::builtin:
        return tri_from(builtin_recession_interior(S.builtin_id(), u));
    case SetRep::Kind::generator_cone: {
        auto rows = polyhedral_rows(S);
        if (!rows) throw UnsupportedRepresentation("recession_interior_contains: generator cones supported only for dim <= 3");
        return tri_from(rows_interior(*rows, u));
    }
    }
    return TriBool::unknown;
}

TriBool contains_line_in_direction(const SetRep& S, const Point& d) {
    check_dim(S, d, "contains_line_in_direction");
    if (is_zero(d)) throw std::invalid_argument("contains_line_in_direction: direction must be nonzero");
    switch (S.kind()) {
    case SetRep::Kind::halfspaces: {
        for (const Halfspace& h : S.rows()) {
            const double s = dot(h.normal, d);
            if (std::fabs(s) > 1e-12 * (1.0 + inf_norm(h.normal) * inf_norm(d))) return TriBool::no;
        }
        return set_nonempty(S);
    }
    case SetRep::Kind::orthant:
        return TriBool::no; // pointed
    case SetRep::Kind::builtin:
        return tri_from(builtin_contains_line(S.builtin_id(), d));
    case SetRep::Kind::generator_cone: {
        auto rows = polyhedral_rows(S);
        if (!rows) throw UnsupportedRepresentation("contains_line_in_direction: generator cones supported only for dim <= 3");
        for (const Halfspace& h : *rows) {
            const double s = dot(h.normal, d);
            if (std::fabs(s) > 1e-12 * (1.0 + inf_norm(h.normal) * inf_norm(d))) return TriBool::no;
        }
        return TriBool::yes; // cones contain 0, hence nonempty
    }
    }
    return TriBool::unknown;
}

SetRep generators_to_halfspaces_3d(const SetRep& cone) {
    if (cone.kind() != SetRep::Kind::generator_cone)
        throw UnsupportedRepresentation("generators_to_halfspaces_3d: expects a generator cone");
    if (cone.dim() != 3)
        throw UnsupportedRepresentation("generators_to_halfspaces_3d: expects dimension 3");
    const auto& gens = cone.generators();

    double scale = 0.0;
    for (const Point& g : gens) scale = std::max(scale, inf_norm(g));
    const double tol = 1e-10 * scale * scale;

    if (matrix_rank(gens, 1e-10 * scale) < 3)
        throw DegenerateGenerators("generators_to_halfspaces_3d: generators are coplanar");

    std::vector<Halfspace> facets;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Point n = cross(gens[i], gens[j]);
            if (inf_norm(n) <= tol) continue; // parallel pair
            bool all_nonneg = true, all_nonpos = true;
            for (const Point& g : gens) {
                const double s = dot(n, g);
                if (s < -tol) all_nonneg = false;
                if (s > tol) all_nonpos = false;
            }
            if (!all_nonneg && !all_nonpos) continue;
            if (all_nonpos) n = scaled(n, -1.0);
            const double ln = norm2(n);
            n = scaled(n, 1.0 / ln);
            bool dup = false;
            for (const Halfspace& f : facets)
                if (dot(f.normal, n) > 1.0 - 1e-9) dup = true;
            if (!dup) facets.push_back({n, 0.0});
        }
    }
    if (facets.size() < 3)
        throw NonPointedCone("generators_to_halfspaces_3d: cone is not pointed (fewer than 3 facets)");
    {
        std::vector<Point> normals;
        for (const Halfspace& f : facets) normals.push_back(f.normal);
        if (matrix_rank(normals, 1e-10) < 3)
            throw NonPointedCone("generators_to_halfspaces_3d: facet normals do not span R^3");
    }

    SetRep out = SetRep::halfspace_intersection(facets);
    // Round-trip verification: generators and pair midpoints must be members.
    for (const Point& g : gens)
        if (!contains(out, g))
            throw DegenerateGenerators("generators_to_halfspaces_3d: verification failed on a generator");
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!contains(out, scaled(add(gens[i], gens[j]), 0.5)))
                throw DegenerateGenerators("generators_to_halfspaces_3d: verification failed on a midpoint");
    return out;
}

std::optional<SetRep> as_polyhedral(const SetRep& S) {
    auto rows = polyhedral_rows(S);
    if (!rows) return std::nullopt;
    return SetRep::halfspace_intersection(std::move(*rows));
}

TriBool set_nonempty(const SetRep& S) {
    switch (S.kind()) {
    case SetRep::Kind::orthant:
    case SetRep::Kind::generator_cone:
        return TriBool::yes; // contain 0
    case SetRep::Kind::builtin:
        return TriBool::yes;
    case SetRep::Kind::halfspaces:
        break;
    }
    // Projection relaxation: repeatedly project onto the most violated row.
    const auto& rows = S.rows();
    const std::size_t d = S.dim();
    Point x(d, 0.0);
    const double box = 1e6;
    for (int iter = 0; iter < 10000; ++iter) {
        double worst = 0.0;
        const Halfspace* worst_row = nullptr;
        for (const Halfspace& h : rows) {
            const double viol = h.offset - dot(h.normal, x);
            if (viol > worst) {
                worst = viol;
                worst_row = &h;
            }
        }
        if (!worst_row) return TriBool::yes;
        const double tol = 1e-10 * (1.0 + std::fabs(worst_row->offset));
        if (worst <= tol) return TriBool::yes;
        const double n2 = dot(worst_row->normal, worst_row->normal);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] += worst_row->normal[i] * worst / n2;
            x[i] = std::clamp(x[i], -box, box);
        }
    }
    return TriBool::unknown;
}

bool level_set_contains(const Point& a, const SetRep& S, const Point& k, double t, const Point& y) {
    return contains(S, sub(axpy(a, t, k), y));
}

SetRep level_set(const Point& a, const SetRep& S, const Point& k, double t) {
    auto rows = polyhedral_rows(S);
    if (!rows) throw UnsupportedRepresentation("level_set: requires a polyhedral representation");
    // y in a - S + t k  <=>  <w, a + t k - y> >= b  <=>  <-w, y> >= b - <w, a + t k>
    const Point shift = axpy(a, t, k);
    std::vector<Halfspace> out;
    out.reserve(rows->size());
    for (const Halfspace& h : *rows)
        out.push_back({scaled(h.normal, -1.0), h.offset - dot(h.normal, shift)});
    return SetRep::halfspace_intersection(std::move(out));
}

bool is_cone(const SetRep& S) {
    switch (S.kind()) {
    case SetRep::Kind::orthant:
    case SetRep::Kind::generator_cone:
        return true;
    case SetRep::Kind::halfspaces: {
        for (const Halfspace& h : S.rows())
            if (std::fabs(h.offset) > 1e-12) return false;
        return true;
    }
    case SetRep::Kind::builtin:
        return S.builtin_id() == BuiltinSet::halfplane_x_2d;
    }
    return false;
}

TriBool is_convex_set(const SetRep& S) {
    // Every supported representation happens to be convex; builtins are
    // declared so in the registry.
    (void)S;
    return TriBool::yes;
}

TriBool is_pointed_cone(const SetRep& S) {
    if (!is_cone(S)) return TriBool::no;
    switch (S.kind()) {
    case SetRep::Kind::orthant:
        return TriBool::yes;
    case SetRep::Kind::builtin:
        return TriBool::no; // the halfplane contains vertical lines
    default:
        break;
    }
    auto rows = polyhedral_rows(S);
    if (!rows) return TriBool::unknown;
    std::vector<Point> normals;
    double scale = 0.0;
    for (const Halfspace& h : *rows) {
        normals.push_back(h.normal);
        scale = std::max(scale, inf_norm(h.normal));
    }
    // A line direction must be orthogonal to every normal, so pointedness is
    // a full-rank condition on the normals.
    return tri_from(matrix_rank(normals, 1e-10 * (1.0 + scale)) == S.dim());
}

TriBool cone_nontrivial(const SetRep& S) {
    if (!is_cone(S)) return TriBool::no;
    switch (S.kind()) {
    case SetRep::Kind::orthant:
        return TriBool::yes;
    case SetRep::Kind::builtin:
        return TriBool::yes;
    case SetRep::Kind::generator_cone:
        return TriBool::yes; // nonzero generators, facets exist by conversion
    case SetRep::Kind::halfspaces: {
        // != Y since it has a (nonzero-normal) row. != {0}: try to exhibit a
        // nonzero member among the coordinate directions and row normals.
        Point probe(S.dim(), 0.0);
        for (std::size_t i = 0; i < S.dim(); ++i) {
            for (double sgn : {1.0, -1.0}) {
                probe.assign(S.dim(), 0.0);
                probe[i] = sgn;
                if (contains(S, probe)) return TriBool::yes;
            }
        }
        for (const Halfspace& h : S.rows()) {
            if (contains(S, h.normal)) return TriBool::yes;
            if (contains(S, scaled(h.normal, -1.0))) return TriBool::yes;
        }
        Point ones(S.dim(), 1.0);
        if (contains(S, ones)) return TriBool::yes;
        return TriBool::unknown;
    }
    }
    return TriBool::unknown;
}

TriBool plus_orthant_subset_interior(const SetRep& S) {
    switch (S.kind()) {
    case SetRep::Kind::builtin:
        switch (S.builtin_id()) {
        case BuiltinSet::hyperbola_epi_2d:
        case BuiltinSet::shifted_hyperbola_2d:
            return TriBool::yes;
        default:
            return TriBool::no;
        }
    case SetRep::Kind::orthant:
        return TriBool::no; // faces translate along themselves
    case SetRep::Kind::halfspaces: {
        // Sufficient: every normal strictly positive componentwise, so any
        // orthant step strictly increases every row value.
        for (const Halfspace& h : S.rows())
            for (double v : h.normal)
                if (v <= 1e-12 * (1.0 + inf_norm(h.normal))) return TriBool::no;
        return TriBool::yes;
    }
    case SetRep::Kind::generator_cone: {
        auto rows = polyhedral_rows(S);
        if (!rows) return TriBool::unknown;
        for (const Halfspace& h : *rows)
            for (double v : h.normal)
                if (v <= 1e-12 * (1.0 + inf_norm(h.normal))) return TriBool::no;
        return TriBool::yes;
    }
    }
    return TriBool::unknown;
}

TriBool plus_ray_subset_interior(const SetRep& S, const Point& k) {
    check_dim(S, k, "plus_ray_subset_interior");
    switch (S.kind()) {
    case SetRep::Kind::builtin: {
        const double e = geom_eps(k);
        switch (S.builtin_id()) {
        case BuiltinSet::hyperbola_epi_2d:
        case BuiltinSet::shifted_hyperbola_2d:
            // Both factors of the defining product strictly increase along
            // any nonzero orthant direction.
            return tri_from(k[0] >= -e && k[1] >= -e && (k[0] > e || k[1] > e));
        case BuiltinSet::parabola_epi_2d:
            return tri_from(std::fabs(k[0]) <= e && k[1] > e);
        case BuiltinSet::halfplane_x_2d:
            return tri_from(k[0] > e);
        }
        return TriBool::unknown;
    }
    default: {
        auto rows = polyhedral_rows(S);
        if (!rows) return TriBool::unknown;
        for (const Halfspace& h : *rows) {
            const double s = dot(h.normal, k);
            if (s <= 1e-12 * (1.0 + inf_norm(h.normal) * inf_norm(k))) return TriBool::no;
        }
        return TriBool::yes;
    }
    }
}

std::vector<Point> boundary_samples(const SetRep& S, int n) {
    std::vector<Point> out;
    if (n <= 0) return out;
    switch (S.kind()) {
    case SetRep::Kind::builtin: {
        switch (S.builtin_id()) {
        case BuiltinSet::hyperbola_epi_2d:
            for (int i = 0; i < n; ++i) {
                const double s = -8.0 + 16.0 * i / std::max(1, n - 1);
                out.push_back({std::exp(s), std::exp(-s)});
            }
            break;
        case BuiltinSet::shifted_hyperbola_2d:
            for (int i = 0; i < n; ++i) {
                const double s = -8.0 + 16.0 * i / std::max(1, n - 1);
                out.push_back({std::exp(s) - 1.0, std::exp(-s) - 1.0});
            }
            break;
        case BuiltinSet::parabola_epi_2d:
            for (int i = 0; i < n; ++i) {
                const double s = -20.0 + 40.0 * i / std::max(1, n - 1);
                out.push_back({s, s * s});
            }
            break;
        case BuiltinSet::halfplane_x_2d:
            for (int i = 0; i < n; ++i) {
                const double s = -1000.0 + 2000.0 * i / std::max(1, n - 1);
                out.push_back({0.0, s});
            }
            break;
        }
        return out;
    }
    case SetRep::Kind::orthant: {
        // Face samples: one coordinate pinned to zero, the rest spread.
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> mag(0.0, 10.0);
        for (int i = 0; i < n; ++i) {
            Point p(S.dim());
            for (double& v : p) v = mag(rng);
            p[static_cast<std::size_t>(i) % S.dim()] = 0.0;
            out.push_back(std::move(p));
        }
        return out;
    }
    case SetRep::Kind::generator_cone: {
        // Facet samples: nonnegative combinations of the generators active on
        // each facet of the converted representation.
        auto poly = as_polyhedral(S);
        if (!poly) return out;
        const auto& gens = S.generators();
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> coef(0.0, 3.0);
        for (const Halfspace& f : poly->rows()) {
            std::vector<const Point*> active;
            for (const Point& g : gens)
                if (std::fabs(dot(f.normal, g)) <= 1e-9 * (1.0 + inf_norm(g))) active.push_back(&g);
            if (active.empty()) continue;
            for (int i = 0; i < n / static_cast<int>(poly->rows().size()) + 1; ++i) {
                Point p(S.dim(), 0.0);
                for (const Point* g : active) {
                    const double c = coef(rng);
                    for (std::size_t j = 0; j < p.size(); ++j) p[j] += c * (*g)[j];
                }
                out.push_back(std::move(p));
            }
        }
        return out;
    }
    case SetRep::Kind::halfspaces: {
        // Walk from an interior-ish feasible point toward random directions
        // and bisect to the boundary where one exists.
        if (set_nonempty(S) != TriBool::yes) return out;
        Point x(S.dim(), 0.0);
        // Re-run the relaxation to recover a feasible point.
        for (int iter = 0; iter < 10000; ++iter) {
            double worst = 0.0;
            const Halfspace* row = nullptr;
            for (const Halfspace& h : S.rows()) {
                const double viol = h.offset - dot(h.normal, x);
                if (viol > worst) {
                    worst = viol;
                    row = &h;
                }
            }
            if (!row || worst <= 1e-10) break;
            const double n2 = dot(row->normal, row->normal);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += row->normal[i] * worst / n2;
        }
        std::mt19937_64 rng(12345);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int i = 0; i < n; ++i) {
            Point d(S.dim());
            for (double& v : d) v = gauss(rng);
            if (is_zero(d)) continue;
            double lo = 0.0, hi = 1.0;
            bool unbounded = false;
            while (contains(S, axpy(x, hi, d))) {
                lo = hi;
                hi *= 2.0;
                if (hi > 1e8) {
                    unbounded = true;
                    break;
                }
            }
            if (unbounded) continue;
            for (int b = 0; b < 80; ++b) {
                const double mid = 0.5 * (lo + hi);
                (contains(S, axpy(x, mid, d)) ? lo : hi) = mid;
            }
            out.push_back(axpy(x, lo, d));
        }
        return out;
    }
    }
    return out;
}

std::vector<Point> recession_ray_samples(const SetRep& S, int n) {
    std::vector<Point> out;
    switch (S.kind()) {
    case SetRep::Kind::builtin:
        switch (S.builtin_id()) {
        case BuiltinSet::hyperbola_epi_2d:
        case BuiltinSet::shifted_hyperbola_2d:
            out = {{1.0, 0.0}, {0.0, 1.0}};
            break;
        case BuiltinSet::parabola_epi_2d:
            out = {{0.0, 1.0}};
            break;
        case BuiltinSet::halfplane_x_2d:
            out = {{1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
            break;
        }
        break;
    case SetRep::Kind::orthant:
        for (std::size_t i = 0; i < S.dim(); ++i) {
            Point e(S.dim(), 0.0);
            e[i] = 1.0;
            out.push_back(std::move(e));
        }
        break;
    case SetRep::Kind::generator_cone:
        out = S.generators();
        break;
    case SetRep::Kind::halfspaces: {
        // Random directions filtered by the recession formula.
        std::mt19937_64 rng(777);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int i = 0; i < 20 * n && static_cast<int>(out.size()) < n; ++i) {
            Point d(S.dim());
            for (double& v : d) v = gauss(rng);
            if (is_zero(d)) continue;
            if (recession_contains(S, d) == TriBool::yes) out.push_back(scaled(d, 1.0 / norm2(d)));
        }
        break;
    }
    }
    return out;
}

std::vector<Point> point_samples(const SetRep& S, int n, unsigned seed) {
    std::vector<Point> out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.0, 5.0);
    switch (S.kind()) {
    case SetRep::Kind::orthant:
        for (int i = 0; i < n; ++i) {
            Point p(S.dim());
            for (double& v : p) v = mag(rng);
            out.push_back(std::move(p));
        }
        break;
    case SetRep::Kind::generator_cone:
        for (int i = 0; i < n; ++i) {
            Point p(S.dim(), 0.0);
            for (const Point& g : S.generators()) {
                const double c = mag(rng);
                for (std::size_t j = 0; j < p.size(); ++j) p[j] += c * g[j];
            }
            out.push_back(std::move(p));
        }
        break;
    case SetRep::Kind::builtin: {
        auto bd = boundary_samples(S, n);
        std::uniform_real_distribution<double> lift(0.0, 4.0);
        for (Point& p : bd) {
            // Push boundary points inward along a recession direction.
            for (const Point& r : recession_ray_samples(S, 2)) {
                Point q = axpy(p, lift(rng), r);
                if (contains(S, q)) out.push_back(std::move(q));
            }
            if (static_cast<int>(out.size()) >= n) break;
        }
        break;
    }
    case SetRep::Kind::halfspaces: {
        auto bd = boundary_samples(S, n);
        auto rays = recession_ray_samples(S, 4);
        std::uniform_real_distribution<double> lift(0.0, 4.0);
        for (Point& p : bd) {
            out.push_back(p);
            for (const Point& r : rays) {
                Point q = axpy(p, lift(rng), r);
                if (contains(S, q)) out.push_back(std::move(q));
            }
            if (static_cast<int>(out.size()) >= n) break;
        }
        break;
    }
    }
    if (static_cast<int>(out.size()) > n) out.resize(n);
    return out;
}

} // namespace gwscal
