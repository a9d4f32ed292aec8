#pragma once

#include <vector>

#include "gwscal/solver.hpp"

namespace gwscal {

/// The domination set D of an efficiency query, with its checked algebraic
/// properties. exclude_zero records whether the caller means D or D minus 0;
/// the pairwise efficiency test is unaffected (the definition's "subset of
/// {y0}" clause absorbs 0), only the property flags see the difference.
struct DominationSet {
    SetRep base;
    bool exclude_zero = false;
    TriBool contains_zero = TriBool::unknown;
    TriBool sum_closed = TriBool::unknown; // D + D subseteq D
    TriBool pointed = TriBool::unknown;    // D cap (-D) subseteq {0}

    static DominationSet make(SetRep base, bool exclude_zero = false);
};

/// Efficient elements of a finite set: y0 with F cap (y0 - D) inside {y0}.
/// Output preserves input order. O(|F|^2) pairwise membership tests.
std::vector<Point> eff_finite(const std::vector<Point>& F, const DominationSet& D);

struct EffExtension {
    bool subset_holds = false;        // Eff(F + sample, D) inside Eff(F, D)
    TriBool equality_holds = TriBool::unknown;
};

/// Builds F~ = F + (H_sample united {0}) and checks the efficiency
/// inclusion; equality is asserted only under verified pointedness and
/// sum-closure flags. H_sample must lie in D (or be 0).
EffExtension eff_extension_check(const std::vector<Point>& F, const std::vector<Point>& h_sample,
                                 const DominationSet& D);

struct EffLink {
    bool eff_of_closure_subset = false;
    std::vector<Point> eff_of_minimizers;
};

/// For a finite instance with an optimal result: Eff(cl M, H) inside
/// Eff(M, H) (closure is trivial for finite M), with the equality branch
/// asserted under pointedness.
EffLink minimizer_efficiency_link(const ProblemInstance& P, const SolveResult& result);

} // namespace gwscal
