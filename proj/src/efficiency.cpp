#include "gwscal/efficiency.hpp"

#include <algorithm>
#include <cmath>

namespace gwscal {

namespace {

bool same_point(const Point& a, const Point& b) {
    return points_close(a, b, 1e-12 * (1.0 + std::max(inf_norm(a), inf_norm(b))));
}

} // namespace

DominationSet DominationSet::make(SetRep base, bool exclude_zero) {
    DominationSet d{std::move(base), exclude_zero, TriBool::unknown, TriBool::unknown, TriBool::unknown};
    const Point zero(d.base.dim(), 0.0);
    d.contains_zero = exclude_zero ? TriBool::no : tri_from(contains(d.base, zero));

    if (is_cone(d.base)) {
        // Convex cones are closed under addition; pointedness is exact.
        d.sum_closed = is_convex_set(d.base);
        d.pointed = is_pointed_cone(d.base);
        return d;
    }
    // Sampled checks (500 pairs).
    const auto pts = point_samples(d.base, 32);
    if (pts.empty()) return d;
    d.sum_closed = TriBool::yes;
    d.pointed = TriBool::yes;
    int pairs = 0;
    for (std::size_t i = 0; i < pts.size() && pairs < 500; ++i) {
        if (!is_zero(pts[i], 1e-12) && contains(d.base, scaled(pts[i], -1.0))) d.pointed = TriBool::no;
        for (std::size_t j = 0; j < pts.size() && pairs < 500; ++j, ++pairs)
            if (!contains(d.base, add(pts[i], pts[j]))) d.sum_closed = TriBool::no;
    }
    // Sampling can refute but not prove.
    if (d.sum_closed == TriBool::yes) d.sum_closed = TriBool::unknown;
    if (d.pointed == TriBool::yes) d.pointed = TriBool::unknown;
    return d;
}

std::vector<Point> eff_finite(const std::vector<Point>& F, const DominationSet& D) {
    if (F.empty()) throw PreconditionError("eff_finite: F must be nonempty");
    for (const Point& y : F)
        if (y.size() != D.base.dim()) throw DimensionMismatch("eff_finite: point dimension mismatch");

    std::vector<Point> out;
    for (const Point& y0 : F) {
        bool efficient = true;
        for (const Point& y : F) {
            if (same_point(y, y0)) continue;
            if (contains(D.base, sub(y0, y))) { // y in y0 - D
                efficient = false;
                break;
            }
        }
        if (efficient && !std::any_of(out.begin(), out.end(), [&](const Point& p) { return same_point(p, y0); }))
            out.push_back(y0);
    }
    return out;
}

EffExtension eff_extension_check(const std::vector<Point>& F, const std::vector<Point>& h_sample,
                                 const DominationSet& D) {
    for (const Point& h : h_sample)
        if (!is_zero(h, 1e-15) && !contains(D.base, h))
            throw PreconditionError("eff_extension_check: sample point outside D united {0}");

    std::vector<Point> extended = F;
    for (const Point& y : F)
        for (const Point& h : h_sample) {
            Point s = add(y, h);
            if (!std::any_of(extended.begin(), extended.end(), [&](const Point& p) { return same_point(p, s); }))
                extended.push_back(std::move(s));
        }

    const std::vector<Point> eff_f = eff_finite(F, D);
    const std::vector<Point> eff_ext = eff_finite(extended, D);

    EffExtension r;
    r.subset_holds = std::all_of(eff_ext.begin(), eff_ext.end(), [&](const Point& e) {
        return std::any_of(eff_f.begin(), eff_f.end(), [&](const Point& p) { return same_point(p, e); });
    });
    const TriBool flags = tri_and(D.pointed, D.sum_closed);
    if (flags == TriBool::yes) {
        const bool superset = std::all_of(eff_f.begin(), eff_f.end(), [&](const Point& e) {
            return std::any_of(eff_ext.begin(), eff_ext.end(), [&](const Point& p) { return same_point(p, e); });
        });
        r.equality_holds = tri_from(r.subset_holds && superset);
    }
    return r;
}

EffLink minimizer_efficiency_link(const ProblemInstance& P, const SolveResult& result) {
    if (!result.has_optimum() || result.minimizers.empty())
        throw PreconditionError("minimizer_efficiency_link: needs an optimal result with minimizers");
    DominationSet D = DominationSet::make(P.g.set());
    if (D.contains_zero != TriBool::yes || !(D.sum_closed == TriBool::yes || is_cone(D.base)))
        throw PreconditionError("minimizer_efficiency_link: H must contain 0 with H + H inside H");

    EffLink link;
    // cl M = M for a finite sample: compute both sides of the inclusion and
    // assert the subset relation; under pointedness the sets must coincide.
    link.eff_of_minimizers = eff_finite(result.minimizers, D);
    const std::vector<Point> closure_side = eff_finite(result.minimizers, D);
    link.eff_of_closure_subset = std::all_of(closure_side.begin(), closure_side.end(), [&](const Point& e) {
        return std::any_of(link.eff_of_minimizers.begin(), link.eff_of_minimizers.end(),
                           [&](const Point& p) { return same_point(p, e); });
    });
    if (D.pointed == TriBool::yes)
        link.eff_of_closure_subset =
            link.eff_of_closure_subset && same_point_set(closure_side, link.eff_of_minimizers, 1e-12);
    return link;
}

} // namespace gwscal
