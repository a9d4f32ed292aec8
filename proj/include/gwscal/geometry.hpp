#pragma once

#include <optional>
#include <vector>

#include "gwscal/set_rep.hpp"
#include "gwscal/tribool.hpp"
#include "gwscal/vec.hpp"

namespace gwscal {

/// Exact membership y in S. Exact for every representation; GeneratorCone is
/// answered through facet conversion (l <= 3 only).
bool contains(const SetRep& S, const Point& y);

/// y in int S. Exact for halfspace intersections (all inequalities strict)
/// and for the builtin oracles (declared strict formulas).
TriBool interior_contains(const SetRep& S, const Point& y);

/// u in 0+S, the recession cone {u : S + R_+ u subseteq S}.
/// For a halfspace intersection this is <w_i, u> >= 0 for every row, which is
/// exact for nonempty closed convex sets.
TriBool recession_contains(const SetRep& S, const Point& u);

/// u in int 0+S.
TriBool recession_interior_contains(const SetRep& S, const Point& u);

/// Does S contain a full line {y + R d} for some y?  For a halfspace
/// intersection: all rows orthogonal to d and S nonempty; nonemptiness is
/// decided by a bounded feasibility search and may come back unknown.
TriBool contains_line_in_direction(const SetRep& S, const Point& d);

/// Facet enumeration for a full-dimensional pointed cone in R^3 given by
/// generators. Normals come from cross products of generator pairs, oriented
/// so every generator is feasible; the result is verified by round-trip
/// membership of the generators and of generator-pair midpoints.
/// Throws DegenerateGenerators (coplanar input) or NonPointedCone.
SetRep generators_to_halfspaces_3d(const SetRep& cone);

/// Halfspace view of S when one exists (halfspaces, orthant, the halfplane
/// builtin, generator cones up to dimension 3). nullopt otherwise.
std::optional<SetRep> as_polyhedral(const SetRep& S);

/// Is the (polyhedral) intersection nonempty?  Runs a projection-relaxation
/// search over the box [-1e6, 1e6]^l with a 1e4 iteration cap; a timeout is
/// reported as unknown. Non-halfspace kinds are nonempty by construction.
TriBool set_nonempty(const SetRep& S);

/// Membership of y in the shifted set a - S + t*k, i.e. a + t*k - y in S.
bool level_set_contains(const Point& a, const SetRep& S, const Point& k, double t, const Point& y);

/// Polyhedral representation of a - S + t*k (requires a polyhedral view of S).
SetRep level_set(const Point& a, const SetRep& S, const Point& k, double t);

// --- structural predicates used by the existence rules -------------------

/// Cone through the origin? (all offsets zero / orthant / generator cone;
/// declared per builtin).
bool is_cone(const SetRep& S);

TriBool is_convex_set(const SetRep& S);

/// C pointed: C cap (-C) = {0}. For polyhedral cones this is a rank test on
/// the normals (a line direction must be orthogonal to every row).
TriBool is_pointed_cone(const SetRep& S);

/// Nontrivial cone: not empty, not {0}, not the whole space.
TriBool cone_nontrivial(const SetRep& S);

/// H + (R^l_+ \ {0}) subseteq int H.  True for halfspace intersections whose
/// normals are all strictly positive componentwise; declared for builtins.
TriBool plus_orthant_subset_interior(const SetRep& S);

/// H + R_> k subseteq int H.
TriBool plus_ray_subset_interior(const SetRep& S, const Point& k);

/// Sample points on the boundary of S (facet points for polyhedral cones,
/// parametric samples for builtins). Used by the separation checks.
std::vector<Point> boundary_samples(const SetRep& S, int n);

/// Sample directions of 0+S (recession rays), normalized.
std::vector<Point> recession_ray_samples(const SetRep& S, int n);

/// Sample points of S itself (used for sampled algebraic-property flags).
std::vector<Point> point_samples(const SetRep& S, int n, unsigned seed = 42);

} // namespace gwscal
