#include "gwscal/existence.hpp"

#include <algorithm>
#include <cmath>

namespace gwscal {

const std::vector<std::string>& existence_rule_order() {
    // Most specific first: explicit separation witnesses, then the cone
    // corollaries, then the bounded-below results, then the compactness
    // fallbacks, with the bare level-set theorem last.
    static const std::vector<std::string> order = {
        R_POLYHEDRAL_SEP,     R_POINTED_CONE,       R_CONE_KNOTNEG,   R_CONVEX_STRICT,
        R_BOUNDEDBELOW_LINES, R_BOUNDEDBELOW_CASES, R_CORE,           R_COMPACTF_FINITE,
        R_COMPACTF_CASES,     R_COMPACT_LEVEL,
    };
    return order;
}

const char* to_cstr(ExistenceReport::Verdict v) {
    switch (v) {
    case ExistenceReport::Verdict::guaranteed_nonempty_compact: return "GuaranteedNonemptyCompact";
    case ExistenceReport::Verdict::necessary_condition_fails: return "NecessaryConditionFails";
    case ExistenceReport::Verdict::no_rule_applies: return "NoRuleApplies";
    }
    return "?";
}

namespace {

// Everything the rule evaluations share for one instance.
struct Facts {
    std::vector<Point> sample;
    std::vector<PhiStatus> values;
    bool any_feasible = false;        // some phi < +inf observed
    bool any_certain_neg_inf = false;
    bool any_heuristic_neg_inf = false;
    std::optional<double> min_finite;
    bool sample_relative = false;

    explicit Facts(const ProblemInstance& P) {
        sample = P.F.sample();
        sample_relative = P.F.kind() != FeasibleSet::Kind::finite_points;
        values.reserve(sample.size());
        for (const Point& y : sample) {
            PhiStatus s = phi(P.g, y);
            if (!s.value.is_pos_inf()) any_feasible = true;
            if (s.value.is_neg_inf()) {
                (s.certainty == Certainty::heuristic_infinity ? any_heuristic_neg_inf
                                                              : any_certain_neg_inf) = true;
            }
            if (s.value.is_finite() && (!min_finite || s.value.value() < *min_finite))
                min_finite = s.value.value();
            values.push_back(std::move(s));
        }
    }

    TriBool feasible() const { return tri_from(any_feasible); }
    TriBool nonempty() const { return tri_from(!sample.empty()); }
};

HypothesisCheck hyp(std::string name, TriBool v, std::string note = "") {
    return {std::move(name), v, std::move(note)};
}

TriBool conjunction(const std::vector<HypothesisCheck>& hs) {
    TriBool r = TriBool::yes;
    for (const auto& h : hs) r = tri_and(r, h.value);
    return r;
}

Point unit_axis(std::size_t dim, std::size_t j) {
    Point e(dim, 0.0);
    e[j] = 1.0;
    return e;
}

TriBool orthant_inside(const SetRep& H) {
    // R^l_+ inside a convex cone H reduces to membership of the axes.
    TriBool r = TriBool::yes;
    for (std::size_t j = 0; j < H.dim(); ++j)
        r = tri_and(r, tri_from(contains(H, unit_axis(H.dim(), j))));
    return r;
}

TriBool orthant_inside_recession(const SetRep& H) {
    TriBool r = TriBool::yes;
    for (std::size_t j = 0; j < H.dim(); ++j) r = tri_and(r, recession_contains(H, unit_axis(H.dim(), j)));
    return r;
}

HypothesisCheck no_axis_lines(const SetRep& H) {
    TriBool r = TriBool::yes;
    std::string note;
    for (std::size_t j = 0; j < H.dim(); ++j) {
        const TriBool line = contains_line_in_direction(H, unit_axis(H.dim(), j));
        if (line == TriBool::yes && note.empty())
            note = "H contains a line in axis direction e^" + std::to_string(j + 1);
        r = tri_and(r, tri_not(line));
    }
    return hyp("H contains no line in any axis direction", r, note);
}

HypothesisCheck cone_shape(const SetRep& H) {
    const TriBool v = tri_and(tri_and(tri_from(is_cone(H)), cone_nontrivial(H)),
                              tri_and(is_pointed_cone(H), is_convex_set(H)));
    return hyp("H is a nontrivial closed pointed convex cone", v);
}

// The shared case list (i)-(iv); (iv) is dropped for the separation rule.
HypothesisCheck case_list(const Facts& f, const ProblemInstance& P, bool with_convex_case) {
    const SetRep& H = P.g.set();
    const Point& a = P.g.a();
    const Point& k = P.g.k();

    TriBool meets_aH = TriBool::no;
    TriBool meets_a_intH = TriBool::no;
    for (const Point& y : f.sample) {
        if (contains(H, sub(a, y))) meets_aH = TriBool::yes;
        const TriBool ii = interior_contains(H, sub(a, y));
        if (ii == TriBool::yes) meets_a_intH = TriBool::yes;
        else if (ii == TriBool::unknown && meets_a_intH == TriBool::no) meets_a_intH = TriBool::unknown;
    }

    std::string which;
    const TriBool case_i = tri_not(meets_aH);
    if (case_i == TriBool::yes) which = "(i) F misses a - H";
    const TriBool case_ii = tri_and(tri_not(meets_a_intH), plus_ray_subset_interior(H, k));
    if (which.empty() && case_ii == TriBool::yes) which = "(ii) F misses a - int H and H + R_> k inside int H";
    const TriBool case_iii = tri_not(contains_line_in_direction(H, k));
    if (which.empty() && case_iii == TriBool::yes) which = "(iii) H has no line in direction k";
    TriBool all = tri_or(tri_or(case_i, case_ii), case_iii);
    if (with_convex_case) {
        const TriBool case_iv = tri_and(is_convex_set(H), tri_not(recession_contains(H, scaled(k, -1.0))));
        if (which.empty() && case_iv == TriBool::yes) which = "(iv) H convex with k not in -0+H";
        all = tri_or(all, case_iv);
    }
    return hyp("one of the finite-value cases holds", all, which);
}

RuleCheck eval_rule(const ProblemInstance& P, const Facts& f, const std::string& rule) {
    const SetRep& H = P.g.set();
    const Point& k = P.g.k();
    RuleCheck rc;
    rc.rule = rule;
    auto& hs = rc.hypotheses;

    const TriBool f_closed = P.F.is_closed();
    const TriBool f_compact = P.F.is_compact();
    const TriBool f_bounded_below = tri_from(P.F.lower_bound().has_value());
    const std::string bb_note = P.F.lower_bound() ? "" : "F is not bounded below by any u + R^l_+";

    if (rule == R_POINTED_CONE) {
        hs.push_back(hyp("F nonempty and closed", tri_and(f.nonempty(), f_closed)));
        hs.push_back(hyp("F bounded below", f_bounded_below, bb_note));
        hs.push_back(cone_shape(H));
        hs.push_back(hyp("orthant inside H", orthant_inside(H)));
        hs.push_back(hyp("k interior to H", interior_contains(H, k)));
    } else if (rule == R_CONE_KNOTNEG) {
        hs.push_back(hyp("F nonempty and closed", tri_and(f.nonempty(), f_closed)));
        hs.push_back(hyp("F bounded below", f_bounded_below, bb_note));
        hs.push_back(cone_shape(H));
        hs.push_back(hyp("orthant inside H", orthant_inside(H)));
        hs.push_back(hyp("k in H but not in -H",
                         tri_and(tri_from(contains(H, k)), tri_from(!contains(H, scaled(k, -1.0))))));
        hs.push_back(hyp("feasible point exists", f.feasible()));
    } else if (rule == R_CONVEX_STRICT) {
        hs.push_back(hyp("F nonempty and closed", tri_and(f.nonempty(), f_closed)));
        hs.push_back(hyp("F bounded below", f_bounded_below, bb_note));
        hs.push_back(hyp("H proper closed convex", is_convex_set(H)));
        hs.push_back(hyp("H + (orthant minus 0) inside int H", plus_orthant_subset_interior(H)));
        hs.push_back(hyp("H + R_> k inside int H", plus_ray_subset_interior(H, k)));
        hs.push_back(hyp("k not in -0+H", tri_not(recession_contains(H, scaled(k, -1.0)))));
        hs.push_back(hyp("feasible point exists", f.feasible()));
    } else if (rule == R_BOUNDEDBELOW_LINES) {
        hs.push_back(hyp("F nonempty and closed", tri_and(f.nonempty(), f_closed)));
        hs.push_back(hyp("F bounded below", f_bounded_below, bb_note));
        hs.push_back(hyp("orthant inside 0+H", orthant_inside_recession(H)));
        hs.push_back(hyp("k in core 0+H", recession_interior_contains(H, k)));
        hs.push_back(no_axis_lines(H));
    } else if (rule == R_BOUNDEDBELOW_CASES) {
        hs.push_back(hyp("F nonempty and closed", tri_and(f.nonempty(), f_closed)));
        hs.push_back(hyp("F bounded below", f_bounded_below, bb_note));
        hs.push_back(hyp("orthant inside 0+H", orthant_inside_recession(H)));
        hs.push_back(hyp("k in 0+H", recession_contains(H, k)));
        hs.push_back(no_axis_lines(H));
        hs.push_back(hyp("feasible point exists", f.feasible()));
        hs.push_back(case_list(f, P, true));
    } else if (rule == R_POLYHEDRAL_SEP) {
        if (!P.separation) {
            hs.push_back(hyp("separation witnesses (C, z, u) provided", TriBool::unknown,
                             "no certificate attached to the instance"));
        } else {
            const SeparationCertificate& c = *P.separation;
            const bool c_poly = c.cone_C.kind() == SetRep::Kind::halfspaces ||
                                c.cone_C.kind() == SetRep::Kind::orthant ||
                                c.cone_C.kind() == SetRep::Kind::generator_cone;
            hs.push_back(hyp("C is a polyhedral cone", tri_from(c_poly && is_cone(c.cone_C))));
            hs.push_back(hyp("z in cl conv H", tri_and(is_convex_set(H), tri_from(contains(H, c.z)))));
            hs.push_back(hyp("z - H (minus 0) inside int C",
                             separation_boundedness(f.sample, H, c.cone_C, c.u, c.z)));
            // branch condition: core direction, or case list, or the convex branch
            const TriBool d1 = recession_interior_contains(H, k);
            const TriBool d2 = tri_and(f.feasible(), case_list(f, P, false).value);
            const TriBool d3 = tri_and(tri_and(is_convex_set(H), f.feasible()),
                                       tri_and(recession_contains(H, k),
                                               tri_not(recession_contains(H, scaled(k, -1.0)))));
            std::string note;
            if (d1 == TriBool::yes) note = "k in core 0+H";
            else if (d2 == TriBool::yes) note = "feasible with a finite-value case";
            else if (d3 == TriBool::yes) note = "H convex, k in 0+H minus -0+H, feasible";
            hs.push_back(hyp("a separation branch applies", tri_or(tri_or(d1, d2), d3), note));
        }
    } else if (rule == R_CORE) {
        hs.push_back(hyp("F nonempty and compact", tri_and(f.nonempty(), f_compact)));
        hs.push_back(hyp("k in core 0+H", recession_interior_contains(H, k)));
    } else if (rule == R_COMPACTF_FINITE) {
        hs.push_back(hyp("F nonempty and compact", tri_and(f.nonempty(), f_compact)));
        hs.push_back(hyp("functional finite-valued (interior recession direction)",
                         recession_interior_contains(H, k)));
    } else if (rule == R_COMPACTF_CASES) {
        hs.push_back(hyp("F nonempty and compact", tri_and(f.nonempty(), f_compact)));
        hs.push_back(hyp("feasible point exists", f.feasible()));
        hs.push_back(case_list(f, P, true));
    } else if (rule == R_COMPACT_LEVEL) {
        // Level intersections of a compact F are compact; nonemptiness of one
        // of them is exactly feasibility.
        hs.push_back(hyp("some level intersection nonempty and compact",
                         tri_and(f_compact, f.feasible())));
        TriBool six;
        if (f.any_certain_neg_inf) six = TriBool::no;
        else if (f.any_heuristic_neg_inf) six = TriBool::unknown;
        else six = tri_from(f.min_finite.has_value() || !f.any_feasible);
        hs.push_back(hyp("some level intersection empty (objective bounded below)", six));
    } else {
        throw std::invalid_argument("check_rule: unknown rule id '" + rule + "'");
    }

    rc.holds = conjunction(hs);
    return rc;
}

} // namespace

NecessaryConditions necessary_conditions(const ProblemInstance& P, double t_lo, double t_hi, int samples) {
    if (samples < 2) throw PreconditionError("necessary_conditions: samples must be >= 2");
    if (!(t_lo < t_hi)) throw PreconditionError("necessary_conditions: need t_lo < t_hi");
    const Facts f(P);
    NecessaryConditions nc;
    nc.sample_relative = f.sample_relative;
    nc.feasible_nonempty = tri_from(f.any_feasible);

    if (f.any_certain_neg_inf) {
        nc.some_level_empty = TriBool::no;
        return nc;
    }
    if (f.any_heuristic_neg_inf) {
        nc.some_level_empty = TriBool::unknown;
        return nc;
    }
    if (!f.min_finite) {
        // every level set is empty
        nc.some_level_empty = TriBool::yes;
        return nc;
    }
    // phi is bounded below by min_finite on the sample, so every probed level
    // below it is empty.
    bool found = false;
    for (int i = 0; i < samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (samples - 1);
        if (t < *f.min_finite) found = true;
    }
    nc.some_level_empty = found ? TriBool::yes : TriBool::unknown;
    return nc;
}

RuleCheck check_rule(const ProblemInstance& P, const std::string& rule_id) {
    const Facts f(P);
    return eval_rule(P, f, rule_id);
}

TriBool separation_boundedness(const std::vector<Point>& M, const SetRep& D, const SetRep& C,
                               const Point& u, const Point& b) {
    if (!is_cone(C) || !as_polyhedral(C))
        throw PreconditionError("separation_boundedness: C must be a polyhedral cone");
    if (u.size() != D.dim() || b.size() != D.dim() || C.dim() != D.dim())
        throw DimensionMismatch("separation_boundedness: dimension mismatch");

    // -(D minus 0), shifted by b where the caller passes D pre-translated,
    // must sit strictly inside C. Cover boundary, interior and far recession
    // samples of D.
    std::vector<Point> d_samples = boundary_samples(D, 500);
    {
        auto inner = point_samples(D, 200);
        d_samples.insert(d_samples.end(), inner.begin(), inner.end());
        const auto rays = recession_ray_samples(D, 8);
        std::vector<Point> far;
        for (const Point& s : d_samples)
            for (const Point& r : rays)
                for (double m : {1.0, 1e3, 1e6}) far.push_back(axpy(s, m, r));
        for (const Point& r : rays)
            for (double m : {1.0, 1e3, 1e6}) far.push_back(scaled(r, m));
        d_samples.insert(d_samples.end(), far.begin(), far.end());
    }
    TriBool inclusion = TriBool::yes;
    for (const Point& d : d_samples) {
        if (inf_norm(d) <= 1e-9) continue; // the {0} allowance
        const TriBool in_c = interior_contains(C, scaled(d, -1.0));
        if (in_c == TriBool::no) return TriBool::no;
        inclusion = tri_and(inclusion, in_c);
    }

    TriBool disjoint = TriBool::yes;
    for (const Point& m : M) {
        const TriBool in_c = interior_contains(C, sub(m, u));
        if (in_c == TriBool::yes) return TriBool::no;
        disjoint = tri_and(disjoint, tri_not(in_c));
    }

    // Consistency probe: the sampled M cap (b - D) should look bounded.
    double radius = 0.0;
    for (const Point& m : M)
        if (contains(D, sub(b, m))) radius = std::max(radius, inf_norm(m));
    if (radius > 1e9) return TriBool::no;

    return tri_and(inclusion, disjoint);
}

ExistenceReport existence_report(const ProblemInstance& P) {
    const Facts f(P);
    ExistenceReport rep;

    rep.necessary.sample_relative = f.sample_relative;
    rep.necessary.feasible_nonempty = tri_from(f.any_feasible);
    if (f.any_certain_neg_inf) rep.necessary.some_level_empty = TriBool::no;
    else if (f.any_heuristic_neg_inf) rep.necessary.some_level_empty = TriBool::unknown;
    else rep.necessary.some_level_empty = TriBool::yes;

    if (rep.necessary.feasible_nonempty == TriBool::no) {
        rep.verdict = ExistenceReport::Verdict::necessary_condition_fails;
        rep.failed_condition = "(5) the feasible range is empty";
        return rep;
    }
    if (rep.necessary.some_level_empty == TriBool::no) {
        rep.verdict = ExistenceReport::Verdict::necessary_condition_fails;
        rep.failed_condition = "(6) no level set is empty: the objective is unbounded below";
        return rep;
    }

    for (const std::string& rule : existence_rule_order()) {
        RuleCheck rc = eval_rule(P, f, rule);
        const bool fired = rc.holds == TriBool::yes;
        rep.checks.push_back(std::move(rc));
        if (fired) {
            rep.verdict = ExistenceReport::Verdict::guaranteed_nonempty_compact;
            rep.rule = rule;
            return rep;
        }
    }
    rep.verdict = ExistenceReport::Verdict::no_rule_applies;
    return rep;
}

} // namespace gwscal
