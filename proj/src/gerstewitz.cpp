#include "gwscal/gerstewitz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gwscal {

std::string to_string(const ExtendedReal& x) {
    if (x.is_neg_inf()) return "-inf";
    if (x.is_pos_inf()) return "+inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x.value());
    return buf;
}

std::string to_string(const PhiStatus& s) {
    std::string v = to_string(s.value);
    char buf[64];
    switch (s.certainty) {
    case Certainty::exact:
        return v + " (exact)";
    case Certainty::bracketed:
        std::snprintf(buf, sizeof(buf), " (bracketed(%.3g))", s.bound);
        return v + buf;
    case Certainty::heuristic_infinity:
        std::snprintf(buf, sizeof(buf), " (heuristic, searched to %.3g)", s.bound);
        return v + buf;
    }
    return v;
}

GerstewitzFunctional::GerstewitzFunctional(Point a, SetRep H, Point k, PhiOptions opt)
    : a_(std::move(a)), k_(std::move(k)), H_(std::move(H)), opt_(opt) {
    if (a_.size() != H_.dim() || k_.size() != H_.dim())
        throw DimensionMismatch("GerstewitzFunctional: a, k and H must share one dimension");
    if (!is_finite_point(a_) || !is_finite_point(k_))
        throw std::invalid_argument("GerstewitzFunctional: a and k must be finite");
    if (is_zero(k_)) throw std::invalid_argument("k must be nonzero");
    if (opt_.tol <= 0.0 || opt_.t_max <= 0.0)
        throw std::invalid_argument("GerstewitzFunctional: tol and t_max must be positive");
    switch (recession_contains(H_, k_)) {
    case TriBool::no:
        throw std::invalid_argument("GerstewitzFunctional: k is not a recession direction of H");
    case TriBool::unknown:
        recession_warning_ = true;
        break;
    case TriBool::yes:
        break;
    }
    poly_ = as_polyhedral(H_);
}

PhiStatus phi_polyhedral(const GerstewitzFunctional& g, const Point& y) {
    const SetRep* poly = g.polyhedral() ? &*g.polyhedral() : nullptr;
    if (!poly) throw UnsupportedRepresentation("phi_polyhedral: H has no halfspace representation");
    if (y.size() != g.dim()) throw DimensionMismatch("phi_polyhedral: point dimension mismatch");

    const Point diff = sub(g.a(), y); // a - y
    bool have_positive = false;
    double best = -HUGE_VAL;
    for (const Halfspace& h : poly->rows()) {
        const double wk = dot(h.normal, g.k());
        const double s = dot(h.normal, diff);
        const double kappa = 1e-14 * (1.0 + inf_norm(h.normal) * inf_norm(g.k()));
        if (wk > kappa) {
            have_positive = true;
            best = std::max(best, (h.offset - s) / wk);
        } else {
            // <w,k> = 0 row: feasibility does not depend on t.
            if (s < h.offset - 1e-12 * (1.0 + std::fabs(h.offset) + std::fabs(s)))
                return {ExtendedReal::pos_inf(), Certainty::exact, 0.0};
        }
    }
    if (!have_positive) return {ExtendedReal::neg_inf(), Certainty::exact, 0.0};
    return {ExtendedReal::finite(best), Certainty::exact, 0.0};
}

namespace {

struct Probe {
    double t;
    bool feasible;
};

void check_monotone(std::vector<Probe>& probes) {
    std::sort(probes.begin(), probes.end(), [](const Probe& a, const Probe& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < probes.size(); ++i)
        if (probes[i - 1].feasible && !probes[i].feasible)
            throw MonotonicityViolation(probes[i - 1].t, probes[i].t);
}

} // namespace

PhiStatus phi_bisection(const GerstewitzFunctional& g, const Point& y, double tol, double t_max) {
    if (y.size() != g.dim()) throw DimensionMismatch("phi_bisection: point dimension mismatch");
    if (tol <= 0.0 || t_max <= 0.0) throw std::invalid_argument("phi_bisection: tol and t_max must be positive");

    std::vector<Probe> probes;
    auto feasible = [&](double t) {
        const bool f = level_set_contains(g.a(), g.set(), g.k(), t, y);
        probes.push_back({t, f});
        return f;
    };

    if (feasible(-t_max)) {
        check_monotone(probes);
        return {ExtendedReal::neg_inf(), Certainty::heuristic_infinity, t_max};
    }

    // Projection of y - a onto the k line gives a cheap starting guess.
    const double t0 = std::clamp(dot(g.k(), sub(y, g.a())) / dot(g.k(), g.k()), -t_max, t_max);

    double t_lo = -t_max, t_hi = t_max;
    if (feasible(t0)) {
        // Walk down until infeasible; -t_max is known infeasible as a backstop.
        t_hi = t0;
        double step = std::max(1.0, std::fabs(t0) * 0.5);
        double cand = t0;
        while (true) {
            cand = std::max(cand - step, -t_max);
            if (!feasible(cand)) {
                t_lo = cand;
                break;
            }
            t_hi = cand;
            step *= 2.0;
        }
    } else {
        // Walk up until feasible or the search bound is exhausted.
        t_lo = t0;
        double step = std::max(1.0, std::fabs(t0) * 0.5);
        double cand = t0;
        bool found = false;
        while (cand < t_max) {
            cand = std::min(cand + step, t_max);
            if (feasible(cand)) {
                t_hi = cand;
                found = true;
                break;
            }
            t_lo = cand;
            step *= 2.0;
        }
        if (!found) {
            check_monotone(probes);
            return {ExtendedReal::pos_inf(), Certainty::heuristic_infinity, t_max};
        }
    }

    while (t_hi - t_lo > tol) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (mid <= t_lo || mid >= t_hi) break; // fp resolution exhausted
        (feasible(mid) ? t_hi : t_lo) = mid;
    }
    check_monotone(probes);
    // The feasible end of the bracket overestimates the infimum by <= tol and
    // itself satisfies y in a - H + t k.
    return {ExtendedReal::finite(t_hi), Certainty::bracketed, tol};
}

PhiStatus phi_bisection(const GerstewitzFunctional& g, const Point& y) {
    return phi_bisection(g, y, g.options().tol, g.options().t_max);
}

PhiStatus phi(const GerstewitzFunctional& g, const Point& y) {
    if (g.polyhedral()) return phi_polyhedral(g, y);
    return phi_bisection(g, y);
}

PhiStatus phi_boundary(const GerstewitzFunctional& g, const Point& y) {
    if (g.polyhedral()) {
        PhiStatus full = phi_polyhedral(g, y);
        if (full.value.is_finite() || full.value.is_pos_inf()) return full;
        // -inf case: the scan line stays inside a - H for every t. It touches
        // the boundary iff some t-independent row is tight.
        const Point diff = sub(g.a(), y);
        for (const Halfspace& h : g.polyhedral()->rows()) {
            const double s = dot(h.normal, diff);
            if (std::fabs(s - h.offset) <= 1e-12 * (1.0 + std::fabs(h.offset) + std::fabs(s)))
                return full; // boundary for all t
        }
        return {ExtendedReal::pos_inf(), Certainty::exact, 0.0};
    }
    // The oracle sets never contain lines in a recession direction, so their
    // finite values already touch the boundary; infinities pass through.
    return phi_bisection(g, y);
}

PhiClass classify(const GerstewitzFunctional& g, const Point& y) {
    const PhiStatus s = phi(g, y);
    if (s.value.is_neg_inf()) return PhiClass::neg_inf_line;
    if (s.value.is_pos_inf()) return PhiClass::not_in_domain;
    return PhiClass::in_domain_finite;
}

const char* to_cstr(PhiClass c) {
    switch (c) {
    case PhiClass::in_domain_finite: return "InDomainFinite";
    case PhiClass::neg_inf_line: return "NegInfLine";
    case PhiClass::not_in_domain: return "NotInDomain";
    }
    return "?";
}

PropernessReport properness_report(const GerstewitzFunctional& g) {
    PropernessReport rep;
    const SetRep& H = g.set();
    const Point& k = g.k();

    const TriBool line = contains_line_in_direction(H, k);
    rep.proper = tri_not(line);
    switch (line) {
    case TriBool::yes:
        rep.reasons.push_back("H contains a line in direction k, so the functional is improper");
        break;
    case TriBool::no:
        rep.reasons.push_back("H contains no line in direction k");
        break;
    default:
        rep.reasons.push_back("line containment in direction k undecided");
        break;
    }

    const TriBool core = recession_interior_contains(H, k);
    rep.finite_valued = core;
    if (core == TriBool::yes)
        rep.reasons.push_back("k lies in the interior of the recession cone of H: finite-valued everywhere");
    else if (core == TriBool::no)
        rep.reasons.push_back("k is not interior to the recession cone of H; finite-valuedness not certified");

    const TriBool fwd = recession_contains(H, k);
    const TriBool bwd = recession_contains(H, scaled(k, -1.0));
    if (fwd == TriBool::yes && bwd == TriBool::yes) {
        rep.finite_valued = TriBool::no;
        rep.reasons.push_back("both k and -k are recession directions: the functional attains no real value");
    }

    if (rep.proper == TriBool::unknown && is_convex_set(H) == TriBool::yes &&
        fwd == TriBool::yes && bwd == TriBool::no) {
        rep.proper = TriBool::yes;
        rep.reasons.push_back("H convex with k a non-reversible recession direction: proper");
    }
    return rep;
}

} // namespace gwscal
