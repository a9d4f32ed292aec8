#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwscal/extended_real.hpp"
#include "gwscal/geometry.hpp"
#include "gwscal/set_rep.hpp"
#include "gwscal/tribool.hpp"
#include "gwscal/vec.hpp"

namespace gwscal {

/// Feasibility of t -> [y in a - H + tk] flipped from true to false as t
/// increased, which contradicts k in 0+H. Carries the witnessing t pair.
struct MonotonicityViolation : std::runtime_error {
    MonotonicityViolation(double t_feasible, double t_infeasible)
        : std::runtime_error("membership in a - H + tk is not monotone: feasible at t=" +
                             std::to_string(t_feasible) + " but infeasible at t=" +
                             std::to_string(t_infeasible)),
          t_lo(t_feasible), t_hi(t_infeasible) {}
    double t_lo, t_hi;
};

/// How a phi value was obtained.
///   exact              closed-form polyhedral evaluation
///   bracketed          bisection, value overestimates the infimum by <= tol
///   heuristic_infinity a +-inf verdict from a search bounded by t_max
enum class Certainty { exact, bracketed, heuristic_infinity };

struct PhiStatus {
    ExtendedReal value;
    Certainty certainty = Certainty::exact;
    double bound = 0.0; // tol for bracketed, t_max for heuristic_infinity

    bool is_exact() const { return certainty == Certainty::exact; }
};

std::string to_string(const PhiStatus& s);

struct PhiOptions {
    double tol = 1e-9;
    double t_max = 1e12;
};

/// The scalarizing functional phi(y) = inf{t : y in a - H + tk}.
///
/// Construction validates k != 0 and k in 0+H; an unknown recession verdict
/// is accepted with a warning flag, a definite "no" is rejected.
class GerstewitzFunctional {
public:
    GerstewitzFunctional(Point a, SetRep H, Point k, PhiOptions opt = {});

    const Point& a() const { return a_; }
    const Point& k() const { return k_; }
    const SetRep& set() const { return H_; }
    const PhiOptions& options() const { return opt_; }
    std::size_t dim() const { return H_.dim(); }

    bool validated() const { return !recession_warning_; }
    bool recession_warning() const { return recession_warning_; }

    /// Cached halfspace view of H, when one exists.
    const std::optional<SetRep>& polyhedral() const { return poly_; }

    GerstewitzFunctional with_a(Point a) const { return {std::move(a), H_, k_, opt_}; }
    GerstewitzFunctional with_k(Point k) const { return {a_, H_, std::move(k), opt_}; }

private:
    Point a_, k_;
    SetRep H_;
    PhiOptions opt_;
    std::optional<SetRep> poly_;
    bool recession_warning_ = false;
};

/// Closed-form evaluation for polyhedral H. With rows <w_i, .> >= b_i and
/// P = {i : <w_i,k> > 0}, Z = {i : <w_i,k> = 0}:
///   some Z row violated  -> +inf
///   P empty              -> -inf   (y + Rk stays inside a - H)
///   otherwise            -> max over P of (b_i - <w_i, a - y>) / <w_i, k>.
PhiStatus phi_polyhedral(const GerstewitzFunctional& g, const Point& y);

/// Monotone bisection on t -> [y in a - H + tk], searching [-t_max, t_max].
/// Works for any representation with an exact membership test.
PhiStatus phi_bisection(const GerstewitzFunctional& g, const Point& y);
PhiStatus phi_bisection(const GerstewitzFunctional& g, const Point& y, double tol, double t_max);

/// Dispatch: closed form when a polyhedral view exists, bisection otherwise.
PhiStatus phi(const GerstewitzFunctional& g, const Point& y);

/// Like phi but with membership restricted to the boundary of H, the
/// evaluation behind the boundary-problem equivalence.
PhiStatus phi_boundary(const GerstewitzFunctional& g, const Point& y);

enum class PhiClass { in_domain_finite, neg_inf_line, not_in_domain };

PhiClass classify(const GerstewitzFunctional& g, const Point& y);

const char* to_cstr(PhiClass c);

/// Certificate-style report on properness and finite-valuedness.
/// `proper` follows the no-lines criterion; `finite_valued` reports whether
/// the interior recession condition (the sufficient one) holds.
struct PropernessReport {
    TriBool proper = TriBool::unknown;
    TriBool finite_valued = TriBool::unknown;
    std::vector<std::string> reasons;
};

PropernessReport properness_report(const GerstewitzFunctional& g);

} // namespace gwscal
