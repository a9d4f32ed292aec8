#pragma once

#include <string>
#include <vector>

#include "gwscal/solver.hpp"

namespace gwscal {

/// (a, k) pair fed to a sweep or a sensitivity query.
struct ParamPair {
    Point a;
    Point k;
};

/// k scaled onto the simplex slice sum(k_i) = 1. Requires sum(k_i) != 0;
/// minimizer sets are unchanged, values scale by sum(k_i).
Point normalize_k(const Point& k);

enum class ShiftMode { coordinate_zero, sum_zero, sign_nonneg, sign_nonpos };

struct ShiftResult {
    Point a_new;
    double c = 0.0; // a_new = a + c * k
};

/// Moves a along the k line onto a canonical slice; minimizer sets are
/// invariant under this reparameterization, optimal values shift by -c.
///   coordinate_zero(j):  (a + ck)_j = 0, needs k_j != 0
///   sum_zero:            sum(a + ck) = 0, needs sum(k) != 0
///   sign_nonneg/nonpos:  a + ck in +-R^l_+, needs k in int R^l_+ or -int R^l_+
ShiftResult shift_a(const Point& a, const Point& k, ShiftMode mode, std::size_t j = 0);

/// k with -k also a recession direction of H: such problems never attain an
/// optimal solution and callers should reject k up front.
TriBool forbidden_direction(const SetRep& H, const Point& k);

/// Does (P_{F,a,H,k}) have a feasible solution (some sampled y with
/// phi < +inf)?
bool param_feasible(const FeasibleSet& F, const SetRep& H, const ParamPair& pair, const PhiOptions& opt = {});

enum class SensitivityPrediction {
    all_unbounded_or_empty_family, // no problem in the k0-family has an optimum
    target_nonempty_compact,
    no_prediction,
};

const char* to_cstr(SensitivityPrediction p);

struct SensitivityResult {
    SensitivityPrediction prediction = SensitivityPrediction::no_prediction;
    std::vector<std::string> rules; // every transfer result that applied
    std::string reason;
};

/// Transfers knowledge about (F, a, H, k) to the target pair (b, k0):
/// an unbounded source with interior directions condemns the whole family;
/// a bounded nonempty source minimizer set with convex closed F and H and
/// non-reversible directions promises a nonempty compact target set.
SensitivityResult sensitivity_transfer(const ProblemInstance& P, const SolveResult& source,
                                       const ParamPair& target);

struct SweepSpec {
    std::vector<Point> a_grid;
    std::vector<Point> k_grid;
};

/// Simplex directions {k in 0+H : sum k_i = 1} on a resolution-r grid,
/// filtered by an exact recession verdict.
std::vector<Point> simplex_directions(const SetRep& H, std::size_t dim, int resolution);

struct SweepCell {
    ParamPair params;
    SolveResult result;
};

/// Solves the instance for every (a, k) cell; failures stay inline as
/// non-optimal cells. Deterministic row order (a outer, k inner).
std::vector<SweepCell> sweep(const FeasibleSet& F, const SetRep& H, const SweepSpec& spec,
                             const PhiOptions& opt = {});

} // namespace gwscal
