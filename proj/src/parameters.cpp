#include "gwscal/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gwscal {

Point normalize_k(const Point& k) {
    const double s = std::accumulate(k.begin(), k.end(), 0.0);
    if (std::fabs(s) <= 1e-12 * (1.0 + inf_norm(k)))
        throw PreconditionError("normalize_k: component sum is zero, direction cannot be normalized");
    return scaled(k, 1.0 / s);
}

ShiftResult shift_a(const Point& a, const Point& k, ShiftMode mode, std::size_t j) {
    check_same_dim(a, k, "shift_a");
    ShiftResult r;
    switch (mode) {
    case ShiftMode::coordinate_zero: {
        if (j >= k.size()) throw PreconditionError("shift_a: coordinate index out of range");
        if (std::fabs(k[j]) <= 1e-15) throw PreconditionError("shift_a: k_j must be nonzero");
        r.c = -a[j] / k[j];
        break;
    }
    case ShiftMode::sum_zero: {
        const double sk = std::accumulate(k.begin(), k.end(), 0.0);
        if (std::fabs(sk) <= 1e-15) throw PreconditionError("shift_a: component sum of k must be nonzero");
        r.c = -std::accumulate(a.begin(), a.end(), 0.0) / sk;
        break;
    }
    case ShiftMode::sign_nonneg:
    case ShiftMode::sign_nonpos: {
        bool all_pos = true, all_neg = true;
        for (double v : k) {
            if (v <= 0.0) all_pos = false;
            if (v >= 0.0) all_neg = false;
        }
        if (!all_pos && !all_neg)
            throw PreconditionError("shift_a: sign modes need k in int R^l_+ or -int R^l_+");
        double lo = a[0] / k[0], hi = a[0] / k[0];
        for (std::size_t i = 1; i < a.size(); ++i) {
            lo = std::min(lo, a[i] / k[i]);
            hi = std::max(hi, a[i] / k[i]);
        }
        // For positive k, c = -min a_i/k_i lands in R^l_+ and c = -max in
        // -R^l_+; for negative k the roles swap.
        const bool want_nonneg = mode == ShiftMode::sign_nonneg;
        if (all_pos) r.c = want_nonneg ? -lo : -hi;
        else r.c = want_nonneg ? -hi : -lo;
        break;
    }
    }
    r.a_new = axpy(a, r.c, k);
    // Pin the slice value exactly; the arithmetic above leaves it within
    // rounding of zero.
    if (mode == ShiftMode::coordinate_zero) r.a_new[j] = 0.0;
    return r;
}

TriBool forbidden_direction(const SetRep& H, const Point& k) {
    return recession_contains(H, scaled(k, -1.0));
}

bool param_feasible(const FeasibleSet& F, const SetRep& H, const ParamPair& pair, const PhiOptions& opt) {
    GerstewitzFunctional g(pair.a, H, pair.k, opt);
    for (const Point& y : F.sample())
        if (!phi(g, y).value.is_pos_inf()) return true;
    return false;
}

const char* to_cstr(SensitivityPrediction p) {
    switch (p) {
    case SensitivityPrediction::all_unbounded_or_empty_family: return "AllUnboundedOrEmptyFamily";
    case SensitivityPrediction::target_nonempty_compact: return "TargetNonemptyCompact";
    case SensitivityPrediction::no_prediction: return "NoPrediction";
    }
    return "?";
}

SensitivityResult sensitivity_transfer(const ProblemInstance& P, const SolveResult& source,
                                       const ParamPair& target) {
    SensitivityResult r;
    const SetRep& H = P.g.set();
    const Point& k = P.g.k();

    if (target.a.size() != P.g.dim() || target.k.size() != P.g.dim()) {
        r.reason = "target dimension mismatch";
        return r;
    }

    const TriBool k_int = recession_interior_contains(H, k);
    const TriBool k0_int = recession_interior_contains(H, target.k);

    // Unbounded source with interior directions condemns the whole family.
    if (source.status == SolveResult::Status::unbounded_below) {
        if (k_int == TriBool::yes && k0_int == TriBool::yes) {
            r.prediction = SensitivityPrediction::all_unbounded_or_empty_family;
            r.rules.push_back("interior-direction-unbounded");
            r.reason = "objective unbounded below with k and k0 interior recession directions";
            return r;
        }
        r.reason = k_int == TriBool::unknown || k0_int == TriBool::unknown
                       ? "interior classification of k or k0 unknown"
                       : "k or k0 not interior to 0+H";
        return r;
    }

    // Bounded, nonempty source minimizer set.
    if (source.has_optimum() && !source.minimizers.empty()) {
        const TriBool h_convex = is_convex_set(H);
        const TriBool f_ok = tri_and(P.F.is_closed(), P.F.is_convex());
        const auto nonrev = [&](const Point& dir) {
            return tri_and(recession_contains(H, dir), tri_not(recession_contains(H, scaled(dir, -1.0))));
        };
        if (h_convex == TriBool::yes && f_ok == TriBool::yes) {
            const TriBool classes = tri_and(nonrev(k), nonrev(target.k));
            if (classes == TriBool::yes && param_feasible(P.F, H, target, P.g.options())) {
                r.prediction = SensitivityPrediction::target_nonempty_compact;
                r.rules.push_back("bounded-source-nonreversible-directions");
                if (k_int == TriBool::yes && k0_int == TriBool::yes)
                    r.rules.push_back("interior-direction-compactness");
                r.reason = "source minimizer set nonempty and bounded; target feasible";
                return r;
            }
            r.reason = classes == TriBool::unknown ? "direction classification unknown"
                                                   : "directions reversible or target infeasible";
            return r;
        }
        r.reason = "needs convex closed F and convex H";
        return r;
    }

    r.reason = "source result carries no transferable information";
    return r;
}

std::vector<Point> simplex_directions(const SetRep& H, std::size_t dim, int resolution) {
    if (resolution < 1) throw PreconditionError("simplex_directions: resolution must be >= 1");
    std::vector<Point> out;
    std::vector<int> comp(dim, 0);
    // Enumerate compositions of `resolution` into dim nonnegative parts.
    const std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == dim) {
            comp[i] = left;
            Point k(dim);
            for (std::size_t c = 0; c < dim; ++c) k[c] = static_cast<double>(comp[c]) / resolution;
            if (!is_zero(k) && recession_contains(H, k) == TriBool::yes) out.push_back(std::move(k));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            comp[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, resolution);
    return out;
}

std::vector<SweepCell> sweep(const FeasibleSet& F, const SetRep& H, const SweepSpec& spec,
                             const PhiOptions& opt) {
    std::vector<SweepCell> table;
    for (const Point& a : spec.a_grid) {
        for (const Point& k : spec.k_grid) {
            SweepCell cell{{a, k}, {}};
            try {
                ProblemInstance P(F, GerstewitzFunctional(a, H, k, opt));
                cell.result = solve(P);
            } catch (const std::exception&) {
                cell.result.status = SolveResult::Status::infeasible;
                cell.result.sample_relative = true;
            }
            table.push_back(std::move(cell));
        }
    }
    return table;
}

} // namespace gwscal
