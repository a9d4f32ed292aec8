#include "gwscal/solver.hpp"

#include <algorithm>
#include <cmath>

namespace gwscal {

const char* to_cstr(SolveResult::Status s) {
    switch (s) {
    case SolveResult::Status::optimal: return "Optimal";
    case SolveResult::Status::approximate_optimal: return "ApproximateOptimal";
    case SolveResult::Status::infeasible: return "Infeasible";
    case SolveResult::Status::unbounded_below: return "UnboundedBelow";
    case SolveResult::Status::infimum_not_attained: return "InfimumNotAttained";
    }
    return "?";
}

namespace {

struct CoreEval {
    std::vector<PhiStatus> values;
    std::optional<std::size_t> first_neg_inf;
    std::optional<double> t_min;
    std::size_t argmin = 0;
    double max_bracket_tol = 0.0;
    bool all_exact = true;
};

CoreEval evaluate_all(const GerstewitzFunctional& g, const std::vector<Point>& pts, const PhiEvaluator& eval) {
    CoreEval ce;
    ce.values.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        PhiStatus s = eval(g, pts[i]);
        if (!s.is_exact()) ce.all_exact = false;
        if (s.certainty == Certainty::bracketed) ce.max_bracket_tol = std::max(ce.max_bracket_tol, s.bound);
        if (s.value.is_neg_inf() && !ce.first_neg_inf) ce.first_neg_inf = i;
        if (s.value.is_finite() && (!ce.t_min || s.value.value() < *ce.t_min)) {
            ce.t_min = s.value.value();
            ce.argmin = i;
        }
        ce.values.push_back(std::move(s));
    }
    return ce;
}

double tie_eps(double t_star, double max_bracket_tol) {
    return std::max(1e-9 * (1.0 + std::fabs(t_star)), 2.0 * max_bracket_tol);
}

PhiStatus default_eval(const GerstewitzFunctional& g, const Point& y) { return phi(g, y); }

bool point_in_set(const Point& p, const std::vector<Point>& set, double eps) {
    for (const Point& q : set)
        if (points_close(p, q, eps)) return true;
    return false;
}

} // namespace

bool same_point_set(const std::vector<Point>& A, const std::vector<Point>& B, double eps) {
    for (const Point& a : A)
        if (!point_in_set(a, B, eps)) return false;
    for (const Point& b : B)
        if (!point_in_set(b, A, eps)) return false;
    return true;
}

SolveResult solve_finite(const ProblemInstance& P) { return solve_finite(P, default_eval); }

SolveResult solve_finite(const ProblemInstance& P, const PhiEvaluator& eval) {
    if (P.F.kind() != FeasibleSet::Kind::finite_points)
        throw PreconditionError("solve_finite: feasible set is not a finite point list");
    const std::vector<Point> pts = P.F.sample();
    SolveResult r;
    if (pts.empty()) {
        r.status = SolveResult::Status::infeasible;
        r.sample_relative = false;
        return r;
    }
    CoreEval ce = evaluate_all(P.g, pts, eval);
    r.exact = ce.all_exact;
    if (ce.first_neg_inf) {
        r.status = SolveResult::Status::unbounded_below;
        r.witness_t = -P.g.options().t_max;
        r.evidence.emplace_back(pts[*ce.first_neg_inf], r.witness_t);
        return r;
    }
    if (!ce.t_min) {
        r.status = SolveResult::Status::infeasible;
        return r;
    }
    r.status = SolveResult::Status::optimal;
    r.t_star = *ce.t_min;
    r.eps_tie = tie_eps(r.t_star, ce.max_bracket_tol);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (ce.values[i].value.is_finite() && ce.values[i].value.value() <= r.t_star + r.eps_tie)
            r.minimizers.push_back(pts[i]);
    return r;
}

SolveResult solve_grid(const ProblemInstance& P) { return solve_grid(P, default_eval); }

SolveResult solve_grid(const ProblemInstance& P, const PhiEvaluator& eval) {
    if (P.F.kind() == FeasibleSet::Kind::finite_points)
        throw PreconditionError("solve_grid: feasible set is an explicit point list; use solve_finite");

    DetailedSample ds = detailed_sample(P.F);
    SolveResult r;
    if (ds.points.empty()) {
        r.status = SolveResult::Status::infeasible;
        r.sample_relative = true;
        return r;
    }
    CoreEval ce = evaluate_all(P.g, ds.points, eval);
    r.exact = false;
    if (ce.first_neg_inf) {
        r.status = SolveResult::Status::unbounded_below;
        r.witness_t = -P.g.options().t_max;
        r.evidence.emplace_back(ds.points[*ce.first_neg_inf], r.witness_t);
        return r;
    }
    if (!ce.t_min) {
        r.status = SolveResult::Status::infeasible;
        r.sample_relative = true;
        return r;
    }

    // Probe for an infimum that keeps improving as the parameter range grows.
    if (P.F.extendable()) {
        std::vector<double> incumbents{*ce.t_min};
        std::vector<std::pair<Point, double>> trail{{ds.points[ce.argmin], *ce.t_min}};
        FeasibleSet wide = P.F;
        bool widened_all = true;
        double bracket_noise = ce.max_bracket_tol;
        for (int round = 0; round < 3; ++round) {
            wide = wide.extended();
            DetailedSample wds = detailed_sample(wide);
            if (wds.points.empty()) {
                widened_all = false;
                break;
            }
            CoreEval we = evaluate_all(P.g, wds.points, eval);
            if (we.first_neg_inf) {
                r.status = SolveResult::Status::unbounded_below;
                r.witness_t = -P.g.options().t_max;
                r.evidence.emplace_back(wds.points[*we.first_neg_inf], r.witness_t);
                return r;
            }
            if (!we.t_min) {
                widened_all = false;
                break;
            }
            bracket_noise = std::max(bracket_noise, we.max_bracket_tol);
            incumbents.push_back(*we.t_min);
            trail.emplace_back(wds.points[we.argmin], *we.t_min);
        }
        if (widened_all && incumbents.size() == 4) {
            // A decrease counts only when it clears the evaluation noise:
            // bracketed values sit within bracket_noise of the truth.
            const double eps = std::max(1e-8 * (1.0 + std::fabs(incumbents.back())), 3.0 * bracket_noise);
            std::vector<double> drops;
            bool monotone = true;
            for (std::size_t i = 1; i < incumbents.size(); ++i) {
                const double d = incumbents[i - 1] - incumbents[i];
                if (d <= eps) monotone = false;
                drops.push_back(d);
            }
            if (monotone) {
                bool shrinking = true;
                for (std::size_t i = 1; i < drops.size(); ++i)
                    if (drops[i] > 0.9 * drops[i - 1]) shrinking = false;
                if (shrinking) {
                    r.status = SolveResult::Status::infimum_not_attained;
                    r.inf_estimate = incumbents.back();
                    r.evidence = std::move(trail);
                    return r;
                }
                r.status = SolveResult::Status::unbounded_below;
                r.witness_t = incumbents.back();
                r.evidence = std::move(trail);
                return r;
            }
        }
    }

    // Stable incumbent: refine locally around the tied cells.
    double t_star = *ce.t_min;
    std::vector<double> steps = ds.steps;
    constexpr std::size_t refine_cell_cap = 2048;
    for (int round = 0; round < 3; ++round) {
        const double eps = tie_eps(t_star, ce.max_bracket_tol);
        std::vector<std::vector<double>> cells;
        for (std::size_t i = 0; i < ds.points.size() && cells.size() < refine_cell_cap; ++i)
            if (ce.values[i].value.is_finite() && ce.values[i].value.value() <= t_star + eps &&
                !ds.params[i].empty())
                cells.push_back(ds.params[i]);
        for (double& s : steps) s /= 4.0;
        if (cells.empty()) break;
        DetailedSample local = refined_sample(P.F, cells, steps);
        for (std::size_t i = 0; i < local.points.size(); ++i) {
            PhiStatus s = eval(P.g, local.points[i]);
            if (s.certainty == Certainty::bracketed) ce.max_bracket_tol = std::max(ce.max_bracket_tol, s.bound);
            if (s.value.is_finite() && s.value.value() < t_star) t_star = s.value.value();
            ds.points.push_back(local.points[i]);
            ds.params.push_back(local.params[i]);
            ce.values.push_back(std::move(s));
        }
    }

    r.status = SolveResult::Status::approximate_optimal;
    r.t_star = t_star;
    r.eps_tie = tie_eps(t_star, ce.max_bracket_tol);
    r.cell_size = steps.empty() ? 0.0 : *std::max_element(steps.begin(), steps.end());
    for (std::size_t i = 0; i < ds.points.size(); ++i) {
        if (!ce.values[i].value.is_finite() || ce.values[i].value.value() > t_star + r.eps_tie) continue;
        if (!point_in_set(ds.points[i], r.minimizers, 1e-12)) r.minimizers.push_back(ds.points[i]);
    }
    return r;
}

SolveResult solve(const ProblemInstance& P) {
    return P.F.kind() == FeasibleSet::Kind::finite_points ? solve_finite(P) : solve_grid(P);
}

BoundaryEquivalence boundary_equivalence_check(const ProblemInstance& P) {
    BoundaryEquivalence be;
    const PhiEvaluator bd = [](const GerstewitzFunctional& g, const Point& y) { return phi_boundary(g, y); };
    if (P.F.kind() == FeasibleSet::Kind::finite_points) {
        be.full = solve_finite(P);
        be.boundary = solve_finite(P, bd);
    } else {
        be.full = solve_grid(P);
        be.boundary = solve_grid(P, bd);
    }
    if (be.full.has_optimum() != be.boundary.has_optimum()) {
        be.agrees = false;
        return be;
    }
    if (!be.full.has_optimum()) {
        be.agrees = true; // neither problem has an optimal solution
        return be;
    }
    const double eps = 2.0 * std::max(be.full.eps_tie, be.boundary.eps_tie);
    be.agrees = std::fabs(be.full.t_star - be.boundary.t_star) <= eps &&
                same_point_set(be.full.minimizers, be.boundary.minimizers,
                               std::max(be.full.eps_tie, be.boundary.eps_tie));
    return be;
}

ProblemInstance restrict_to_level(const ProblemInstance& P, double t0) {
    const std::vector<Point> pts = P.F.sample();
    bool feasible = false;
    for (const Point& y : pts)
        if (level_set_contains(P.g.a(), P.g.set(), P.g.k(), t0, y)) {
            feasible = true;
            break;
        }
    if (!feasible)
        throw PreconditionError("restrict_to_level: no feasible point at level t0=" + std::to_string(t0));

    if (P.F.kind() == FeasibleSet::Kind::finite_points) {
        std::vector<Point> kept;
        for (const Point& y : pts)
            if (level_set_contains(P.g.a(), P.g.set(), P.g.k(), t0, y)) kept.push_back(y);
        ProblemInstance out(FeasibleSet::finite(std::move(kept)), P.g);
        out.separation = P.separation;
        return out;
    }
    ProblemInstance out(P.F.with_level_cap({P.g.a(), P.g.set(), P.g.k(), t0}), P.g);
    out.separation = P.separation;
    return out;
}

MinkowskiRelations minkowski_sum_relations(const ProblemInstance& P, const std::vector<Point>& h_sample) {
    if (P.F.kind() != FeasibleSet::Kind::finite_points)
        throw PreconditionError("minkowski_sum_relations: finite feasible set required");
    if (h_sample.empty()) throw PreconditionError("minkowski_sum_relations: H sample must be nonempty");
    const SetRep& H = P.g.set();
    bool has_zero = false;
    for (const Point& h : h_sample) {
        if (h.size() != H.dim()) throw DimensionMismatch("minkowski_sum_relations: sample dimension mismatch");
        if (!contains(H, h)) throw PreconditionError("minkowski_sum_relations: sample point outside H");
        if (is_zero(h, 1e-15)) has_zero = true;
    }
    if (!has_zero) throw PreconditionError("minkowski_sum_relations: 0 must belong to the H sample");
    if (!is_cone(H)) {
        // H + H subseteq H cannot be taken from the cone structure; verify on
        // the sampled pairs instead.
        for (const Point& h1 : h_sample)
            for (const Point& h2 : h_sample)
                if (!contains(H, add(h1, h2)))
                    throw PreconditionError("minkowski_sum_relations: sampled H + H escapes H");
    }

    const std::vector<Point>& f_pts = P.F.points();
    std::vector<Point> sum_pts;
    std::vector<std::size_t> provenance; // index into f_pts
    for (std::size_t i = 0; i < f_pts.size(); ++i)
        for (const Point& h : h_sample) {
            sum_pts.push_back(add(f_pts[i], h));
            provenance.push_back(i);
        }

    SolveResult base = solve_finite(P);
    ProblemInstance sumP(FeasibleSet::finite(sum_pts), P.g);
    SolveResult sum = solve_finite(sumP);

    MinkowskiRelations rel;
    if (base.has_optimum() && sum.has_optimum()) {
        rel.t_f = base.t_star;
        rel.t_sum = sum.t_star;
        const double eps = 2.0 * std::max(base.eps_tie, sum.eps_tie);
        rel.same_value = std::fabs(base.t_star - sum.t_star) <= eps;
        // M_F subseteq M_{F+H}: each base minimizer appears in the sum set
        // (via h = 0) with the same value.
        bool chain = true;
        for (const Point& m : base.minimizers)
            if (!point_in_set(m, sum.minimizers, std::max(base.eps_tie, sum.eps_tie))) chain = false;
        // M_{F+H} subseteq M_F + H: the F component of each sum minimizer is
        // itself a base minimizer.
        for (const Point& m : sum.minimizers) {
            bool decomposed = false;
            for (std::size_t idx = 0; idx < sum_pts.size(); ++idx)
                if (points_close(m, sum_pts[idx], 1e-12) &&
                    point_in_set(f_pts[provenance[idx]], base.minimizers, std::max(base.eps_tie, sum.eps_tie)))
                    decomposed = true;
            if (!decomposed) chain = false;
        }
        rel.inclusion_chain_holds = chain;
    } else {
        rel.same_value = base.has_optimum() == sum.has_optimum();
        rel.inclusion_chain_holds = rel.same_value;
    }
    return rel;
}

} // namespace gwscal
