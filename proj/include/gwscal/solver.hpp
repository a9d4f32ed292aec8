#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwscal/feasible_set.hpp"
#include "gwscal/gerstewitz.hpp"

namespace gwscal {

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Witnesses (C, z, u) for the polyhedral-separation existence rule:
/// z - cl conv H inside int C (up to 0) and (F - u) missing int C.
struct SeparationCertificate {
    SetRep cone_C;
    Point z;
    Point u;
};

/// The scalarized problem: minimize phi_{a-H,k} over F.
struct ProblemInstance {
    FeasibleSet F;
    GerstewitzFunctional g;
    std::optional<SeparationCertificate> separation = std::nullopt;

    ProblemInstance(FeasibleSet f, GerstewitzFunctional fun) : F(std::move(f)), g(std::move(fun)) {
        if (F.dim() != g.dim()) throw DimensionMismatch("ProblemInstance: F and functional dimensions differ");
    }
};

struct SolveResult {
    enum class Status {
        optimal,              // finite F, exact argmin
        approximate_optimal,  // sampled F, value within the final cell size
        infeasible,           // no (sampled) point has phi < +inf
        unbounded_below,      // a point with phi = -inf, or diverging incumbents
        infimum_not_attained, // incumbents converge but keep strictly decreasing
    };

    Status status = Status::infeasible;
    double t_star = 0.0;            // optimal / approximate statuses
    std::vector<Point> minimizers;  // input order
    bool exact = false;             // every evaluation was closed-form
    double eps_tie = 0.0;           // tie tolerance used for the minimizer set
    double cell_size = 0.0;         // approximate_optimal: final refinement step
    double witness_t = 0.0;         // unbounded_below
    double inf_estimate = 0.0;      // infimum_not_attained
    std::vector<std::pair<Point, double>> evidence; // decreasing feasible (y, t)
    bool sample_relative = false;   // infeasibility is relative to the sample

    bool has_optimum() const {
        return status == Status::optimal || status == Status::approximate_optimal;
    }
};

const char* to_cstr(SolveResult::Status s);

using PhiEvaluator = std::function<PhiStatus(const GerstewitzFunctional&, const Point&)>;

/// Exact solve over an explicit finite point set.
SolveResult solve_finite(const ProblemInstance& P);
SolveResult solve_finite(const ProblemInstance& P, const PhiEvaluator& eval);

/// Sampled solve for grid regions and builtin curves: evaluates the sample,
/// probes range extensions for a drifting infimum, then locally refines
/// (3 rounds, step factor 4) around the incumbent cells.
SolveResult solve_grid(const ProblemInstance& P);
SolveResult solve_grid(const ProblemInstance& P, const PhiEvaluator& eval);

/// Dispatch on the feasible-set kind.
SolveResult solve(const ProblemInstance& P);

struct BoundaryEquivalence {
    bool agrees = false;
    SolveResult full;
    SolveResult boundary;
};

/// Re-solves with membership restricted to the boundary of H and compares
/// optimal value and minimizer set.
BoundaryEquivalence boundary_equivalence_check(const ProblemInstance& P);

/// F restricted to F cap (a - H + t0 k). Throws PreconditionError when no
/// feasible point exists at level t0.
ProblemInstance restrict_to_level(const ProblemInstance& P, double t0);

struct MinkowskiRelations {
    bool same_value = false;
    bool inclusion_chain_holds = false;
    double t_f = 0.0;
    double t_sum = 0.0;
};

/// Compares the problem over F with the problem over F + H_sample and checks
/// the minimizer inclusion chain on the sampled sum set.
MinkowskiRelations minkowski_sum_relations(const ProblemInstance& P, const std::vector<Point>& h_sample);

/// Symmetric point-set equality within eps (used for minimizer comparisons).
bool same_point_set(const std::vector<Point>& A, const std::vector<Point>& B, double eps);

} // namespace gwscal
