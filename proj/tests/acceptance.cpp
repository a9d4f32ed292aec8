// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gwscal/efficiency.hpp"
#include "gwscal/examples.hpp"
#include "gwscal/existence.hpp"
#include "gwscal/parameters.hpp"
#include "gwscal/solver.hpp"
#include "support.hpp"

using namespace gwscal;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (log.tellp() < 400) log << (log.tellp() ? "; " : "") << what;
        }
    }
};

bool in_set(const Point& p, const std::vector<Point>& set, double eps) {
    for (const Point& q : set)
        if (points_close(p, q, eps)) return true;
    return false;
}

// ---- criterion 1: example reproduction -----------------------------------

bool criterion_examples(std::string& detail) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    for (const CorpusOutcome& oc : run_examples())
        c.require(oc.pass, oc.id + ": " + oc.detail);

    const auto* ex311 = find_example("ex311");
    const SolveResult r311 = solve(ex311->instance);
    c.require(std::fabs(r311.t_star - 1.0) <= 1e-9, "ex311 t* must be 1 within 1e-9");
    c.require(r311.minimizers.size() == 1 && points_close(r311.minimizers[0], {0.0, 0.0}, 1e-9),
              "ex311 minimizer must be (0,0) within 1e-9");

    for (const char* id : {"ex613", "ex614", "ex615a", "ex616a"}) {
        const SolveResult r = solve(find_example(id)->instance);
        c.require(r.status == SolveResult::Status::infimum_not_attained,
                  std::string(id) + " must report InfimumNotAttained");
    }

    {
        const SolveResult r = solve(find_example("ex615b")->instance);
        c.require(!r.minimizers.empty(), "ex615b needs minimizers");
        for (const Point& m : r.minimizers)
            c.require(distance_to_ray(m, {1.0, -1.0, -0.5}, {0.0, -2.0, 1.0}) <= 1e-6,
                      "ex615b minimizer off the ray");
    }
    {
        const SolveResult r = solve(find_example("ex616b")->instance);
        c.require(!r.minimizers.empty(), "ex616b needs minimizers");
        for (const Point& m : r.minimizers)
            c.require(std::fabs(m[0] - 1.0) <= 1e-6 && m[1] <= -1.0 + 1e-6 && std::fabs(m[2] + 1.0) <= 1e-6,
                      "ex616b minimizer off the segment");
    }
    {
        const SolveResult r = solve(find_example("ex618a")->instance);
        c.require(r.minimizers.size() == 1 && points_close(r.minimizers[0], {0.0, 0.0}, 1e-9),
                  "ex618a minimizer must be uniquely (0,0)");
    }
    {
        const auto& e = *find_example("ex618b");
        const SolveResult r = solve(e.instance);
        c.require(!r.minimizers.empty(), "ex618b needs minimizers");
        // Every sampled segment point must sit within eps_tie of the optimum.
        for (const Point& y : e.instance.F.sample()) {
            if (std::fabs(y[1]) > 0.0 || y[0] > 1.0) continue;
            const PhiStatus s = phi(e.instance.g, y);
            c.require(s.value.is_finite() && s.value.value() <= r.t_star + r.eps_tie,
                      "ex618b sampled segment point misses the optimum");
            c.require(in_set(y, r.minimizers, 1e-9), "ex618b sampled segment point not among minimizers");
        }
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 10.0, "corpus runtime exceeded 10 s");
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (corpus in %.2f s)", secs);
    detail = c.ok ? buf : c.log.str();
    return c.ok;
}

// ---- criterion 2: functional laws ----------------------------------------

bool criterion_laws(std::string& detail) {
    Check c;
    std::mt19937_64 rng(gwtest::corpus_seed() + 100);
    std::uniform_real_distribution<double> tpick(-8.0, 8.0);

    for (int inst = 0; inst < 200 && c.ok; ++inst) {
        auto ri = gwtest::random_polyhedral_instance(rng);
        GerstewitzFunctional g(ri.a, ri.H, ri.k);
        GerstewitzFunctional g0(Point(ri.a.size(), 0.0), ri.H, ri.k);
        for (int p = 0; p < 500; ++p) {
            const Point y = gwtest::random_point(rng, g.dim());
            const PhiStatus s = phi(g, y);

            const PhiStatus tr = phi(g0, sub(y, g.a()));
            c.require(tr.value.kind() == s.value.kind(), "translation changed the value class");
            if (s.value.is_finite())
                c.require(tr.value.value() == s.value.value(), "translation covariance not exact");

            const double tv = tpick(rng);
            if (!(s.value.is_finite() && std::fabs(tv - s.value.value()) < 1e-9 * (1.0 + std::fabs(tv)))) {
                const bool leq = s.value.is_neg_inf() || (s.value.is_finite() && s.value.value() <= tv);
                c.require(leq == level_set_contains(g.a(), g.set(), g.k(), tv, y),
                          "sublevel identity violated");
            }

            for (double lam : {0.5, 2.0, 10.0}) {
                const PhiStatus sl = phi(g.with_k(scaled(g.k(), lam)), y);
                c.require(sl.value.kind() == s.value.kind(), "scaling changed the value class");
                if (s.value.is_finite()) {
                    const double want = s.value.value() / lam;
                    c.require(std::fabs(sl.value.value() - want) <= 1e-12 * (1.0 + std::fabs(want)),
                              "scaling law beyond 1e-12 relative");
                }
            }
            for (double cc : {-3.0, 0.25, 7.0}) {
                const PhiStatus sc = phi(g.with_a(axpy(g.a(), cc, g.k())), y);
                c.require(sc.value.kind() == s.value.kind(), "shift changed the value class");
                if (s.value.is_finite()) {
                    const double want = s.value.value() - cc;
                    c.require(std::fabs(sc.value.value() - want) <= 1e-12 * (1.0 + std::fabs(want)),
                              "shift law beyond 1e-12 relative");
                }
            }
            if (s.value.is_finite()) {
                c.require(level_set_contains(g.a(), g.set(), g.k(), s.value.value(), y),
                          "returned value is not attained");
                c.require(interior_contains(level_set(g.a(), g.set(), g.k(), s.value.value() - 1e-9), y) ==
                              TriBool::no,
                          "value is not minimal (interior at t - 1e-9)");
            }
            if (!c.ok) break;
        }
    }

    // Bisection-backed laws on the oracle sets, absolute tolerance 2e-9.
    for (BuiltinSet b :
         {BuiltinSet::hyperbola_epi_2d, BuiltinSet::parabola_epi_2d, BuiltinSet::shifted_hyperbola_2d}) {
        const Point k = b == BuiltinSet::parabola_epi_2d ? Point{0.0, 1.0} : Point{1.0, 0.7};
        GerstewitzFunctional g({0.4, -0.3}, SetRep::builtin(b), k);
        for (int p = 0; p < 150 && c.ok; ++p) {
            const Point y = gwtest::random_point(rng, 2, 3.0);
            const PhiStatus s = phi(g, y);
            if (!s.value.is_finite()) continue;
            for (double lam : {0.5, 2.0, 10.0}) {
                const PhiStatus sl = phi(g.with_k(scaled(k, lam)), y);
                c.require(std::fabs(sl.value.value() - s.value.value() / lam) <= 2e-9,
                          "bisection scaling beyond 2e-9");
            }
            for (double cc : {-3.0, 0.25, 7.0}) {
                const PhiStatus sc = phi(g.with_a(axpy(g.a(), cc, g.k())), y);
                c.require(std::fabs(sc.value.value() - (s.value.value() - cc)) <= 2e-9,
                          "bisection shift beyond 2e-9");
            }
            c.require(level_set_contains(g.a(), g.set(), g.k(), s.value.value(), y),
                      "bisection value not attained");
        }
    }
    detail = c.log.str();
    return c.ok;
}

// ---- criterion 3: closed form vs bisection -------------------------------

bool criterion_oracle_equivalence(std::string& detail) {
    Check c;
    std::mt19937_64 rng(gwtest::corpus_seed() + 200);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int done = 0;
    while (done < 1000 && c.ok) {
        const std::size_t d = u01(rng) < 0.5 ? 2 : 3;
        SetRep H = SetRep::orthant(d);
        Point k(d);
        if (u01(rng) < 0.5) {
            // Components are either exactly zero (the +-inf regime) or well
            // separated from zero, keeping exact values inside the search box.
            for (double& v : k) v = 0.1 + std::fabs(coord(rng));
            if (u01(rng) < 0.3) k[0] = 0.0; // boundary direction
        } else {
            // halfplane family: a single halfspace row
            Point w(d);
            for (double& v : w) v = coord(rng);
            if (inf_norm(w) < 0.3) continue;
            for (double& v : k) v = coord(rng);
            if (inf_norm(k) < 0.2) continue;
            if (u01(rng) < 0.3) {
                const double cpl = dot(w, k) / dot(k, k);
                for (std::size_t i = 0; i < d; ++i) w[i] -= cpl * k[i];
                const double r2 = dot(w, k) / dot(k, k);
                for (std::size_t i = 0; i < d; ++i) w[i] -= r2 * k[i];
                if (inf_norm(w) < 0.05) continue;
            } else {
                if (dot(w, k) < 0.0)
                    for (double& v : w) v = -v;
                if (dot(w, k) < 0.05 * inf_norm(w) * inf_norm(k)) continue; // conditioning floor
            }
            H = SetRep::halfspace_intersection({{w, coord(rng)}});
        }
        Point a(d), y(d);
        for (double& v : a) v = coord(rng);
        for (double& v : y) v = 3.0 * coord(rng);
        if (recession_contains(H, k) != TriBool::yes) continue;

        // Rows orthogonal to k decide feasibility independently of t; probes
        // at +-t_max resolve them only up to dot-product cancellation, so the
        // comparison stays away from knife-edge margins there.
        {
            bool knife_edge = false;
            const auto rows = as_polyhedral(H)->rows();
            const Point diff = sub(a, y);
            for (const Halfspace& h : rows)
                if (std::fabs(dot(h.normal, k)) <= 1e-12 &&
                    std::fabs(dot(h.normal, diff) - h.offset) < 1e-3)
                    knife_edge = true;
            if (knife_edge) continue;
        }

        GerstewitzFunctional g(a, H, k);
        const PhiStatus exact = phi_polyhedral(g, y);
        const PhiStatus br = phi_bisection(g, y);
        c.require(exact.value.kind() == br.value.kind(), "value class disagreement");
        if (exact.value.is_finite())
            c.require(std::fabs(exact.value.value() - br.value.value()) <= 2.0 * g.options().tol,
                      "closed form and bisection differ beyond 2 tol");
        ++done;
    }
    detail = c.log.str();
    return c.ok;
}

// ---- criterion 4: problem equivalences -----------------------------------

bool criterion_equivalences(std::string& detail) {
    Check c;
    std::mt19937_64 rng(gwtest::corpus_seed() + 300);
    int solved = 0;
    while (solved < 100 && c.ok) {
        auto ri = gwtest::random_polyhedral_instance(rng);
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) pts.push_back(gwtest::random_point(rng, ri.H.dim()));
        ProblemInstance P(FeasibleSet::finite(pts), GerstewitzFunctional(ri.a, ri.H, ri.k));
        const SolveResult r = solve_finite(P);
        if (r.status != SolveResult::Status::optimal) continue;
        ++solved;
        double best = HUGE_VAL;
        for (double t = r.t_star - 0.01; t <= r.t_star + 0.01; t += 1e-4) {
            for (const Point& y : pts)
                if (level_set_contains(ri.a, ri.H, ri.k, t, y)) {
                    best = std::min(best, t);
                    break;
                }
            if (best < HUGE_VAL) break;
        }
        c.require(std::fabs(best - r.t_star) <= 1e-4, "two-variable enumeration disagrees beyond 1e-4");
    }

    for (const BuiltinExample& e : builtin_examples()) {
        const BoundaryEquivalence be = boundary_equivalence_check(e.instance);
        c.require(be.agrees, e.id + ": boundary problem disagrees");

        const SolveResult r = solve(e.instance);
        double t0 = 0.0;
        if (r.has_optimum()) t0 = r.t_star + 1.0;
        else if (r.status == SolveResult::Status::infimum_not_attained) t0 = r.inf_estimate + 1.0;
        else continue;
        const ProblemInstance restricted = restrict_to_level(e.instance, t0);
        const SolveResult rr = solve(restricted);
        c.require(rr.status == r.status, e.id + ": level restriction changed the status");
        if (r.has_optimum()) {
            c.require(std::fabs(rr.t_star - r.t_star) <= 2.0 * std::max(r.eps_tie, rr.eps_tie),
                      e.id + ": level restriction changed the value");
            c.require(same_point_set(rr.minimizers, r.minimizers, std::max(r.eps_tie, rr.eps_tie)),
                      e.id + ": level restriction changed the minimizers");
        }
    }
    detail = c.log.str();
    return c.ok;
}

// ---- criterion 5: existence soundness ------------------------------------

bool criterion_existence(std::string& detail) {
    Check c;
    std::mt19937_64 rng(gwtest::corpus_seed() + 400);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int certificates = 0;
    for (int i = 0; i < 200 && c.ok; ++i) {
        std::vector<Point> pts;
        const std::size_t d = 2 + (i % 2);
        for (int p = 0; p < 12; ++p) pts.push_back(gwtest::random_point(rng, d));
        SetRep H = [&] {
            if (u01(rng) < 0.4) return gwtest::random_pointed_cone(rng, d);
            auto ri = gwtest::random_polyhedral_instance(rng);
            while (ri.H.dim() != d) ri = gwtest::random_polyhedral_instance(rng);
            return ri.H;
        }();
        Point k(d, 1.0);
        if (recession_contains(H, k) != TriBool::yes) {
            auto rays = recession_ray_samples(H, 3);
            if (rays.empty()) continue;
            k = rays.front();
        }
        ProblemInstance P(FeasibleSet::finite(pts),
                          GerstewitzFunctional(gwtest::random_point(rng, d, 2.0), H, k));
        const ExistenceReport rep = existence_report(P);
        if (rep.verdict == ExistenceReport::Verdict::guaranteed_nonempty_compact) {
            ++certificates;
            const SolveResult r = solve_finite(P);
            c.require(r.status == SolveResult::Status::optimal && !r.minimizers.empty(),
                      "false certificate (" + rep.rule + ")");
        }
    }
    c.require(certificates >= 20, "random corpus produced too few certificates to be meaningful");

    for (const BuiltinExample& e : builtin_examples()) {
        const ExistenceReport rep = existence_report(e.instance);
        const SolveResult r = solve(e.instance);
        if (rep.verdict == ExistenceReport::Verdict::guaranteed_nonempty_compact)
            c.require(r.has_optimum() && !r.minimizers.empty(), e.id + ": certified but not solved");
    }
    for (const char* id : {"ex613", "ex614", "ex615a", "ex616a"}) {
        const auto& e = *find_example(id);
        c.require(existence_report(e.instance).verdict !=
                      ExistenceReport::Verdict::guaranteed_nonempty_compact,
                  std::string(id) + ": counterexample received a certificate");
        c.require(!solve(e.instance).has_optimum(), std::string(id) + ": counterexample solved");
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), " (%d certificates)", certificates);
    detail = c.ok ? buf : c.log.str();
    return c.ok;
}

// ---- criterion 6: parameter control --------------------------------------

bool criterion_parameters(std::string& detail) {
    Check c;
    std::mt19937_64 rng(gwtest::corpus_seed() + 500);

    int solved = 0;
    while (solved < 100 && c.ok) {
        auto ri = gwtest::random_polyhedral_instance(rng);
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) pts.push_back(gwtest::random_point(rng, ri.H.dim()));
        ProblemInstance P(FeasibleSet::finite(pts), GerstewitzFunctional(ri.a, ri.H, ri.k));
        const SolveResult base = solve_finite(P);
        if (base.status != SolveResult::Status::optimal) continue;
        ++solved;
        for (double lam : {0.5, 3.0}) {
            const SolveResult r = solve_finite({P.F, P.g.with_k(scaled(ri.k, lam))});
            c.require(r.status == SolveResult::Status::optimal &&
                          same_point_set(r.minimizers, base.minimizers, 1e-9 * (1.0 + std::fabs(base.t_star))),
                      "k-scaling changed the minimizer set");
        }
        for (double cc : {-2.0, 0.7}) {
            const SolveResult r = solve_finite({P.F, P.g.with_a(axpy(ri.a, cc, ri.k))});
            c.require(r.status == SolveResult::Status::optimal &&
                          same_point_set(r.minimizers, base.minimizers, 1e-9 * (1.0 + std::fabs(base.t_star))),
                      "a-shift changed the minimizer set");
        }
    }

    {
        // Slice-union identity over a 5x5 grid family.
        std::vector<Point> pts;
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j <= 8; ++j) pts.push_back({-1.0 + 0.25 * i, -1.0 + 0.25 * j});
        const FeasibleSet F = FeasibleSet::finite(pts);
        const Point k{1.0, 1.0};
        std::vector<Point> grid_union, slice_union;
        auto collect = [&](const Point& a, std::vector<Point>& into) {
            const SolveResult r = solve_finite({F, GerstewitzFunctional(a, SetRep::orthant(2), k)});
            for (const Point& m : r.minimizers)
                if (!in_set(m, into, 1e-9)) into.push_back(m);
        };
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                const Point a{-1.0 + 0.5 * i, -1.0 + 0.5 * j};
                collect(a, grid_union);
                collect(shift_a(a, k, ShiftMode::coordinate_zero, 0).a_new, slice_union);
            }
        c.require(same_point_set(grid_union, slice_union, 1e-9), "slice-union identity failed");
    }

    {
        // Convexity of the feasible-parameter set on 100 convex instances.
        std::uniform_real_distribution<double> kcoord(0.2, 2.0);
        std::uniform_int_distribution<int> ypick(-3, 3);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (int inst = 0; inst < 100 && c.ok; ++inst) {
            const std::size_t d = 2 + (inst % 2);
            std::vector<Point> lattice;
            {
                std::vector<int> idx(d, -6);
                while (true) {
                    Point p(d);
                    for (std::size_t i = 0; i < d; ++i) p[i] = idx[i];
                    lattice.push_back(std::move(p));
                    std::size_t carry = 0;
                    while (carry < d && ++idx[carry] > 6) idx[carry++] = -6;
                    if (carry == d) break;
                }
            }
            Point k1(d), k2(d);
            Point w0;
            while (true) {
                for (double& v : k1) v = kcoord(rng);
                if (d == 2) {
                    k2 = scaled(k1, 0.5 + u01(rng));
                    w0 = {-k1[1], k1[0]};
                } else {
                    for (double& v : k2) v = kcoord(rng);
                    w0 = {k1[1] * k2[2] - k1[2] * k2[1], k1[2] * k2[0] - k1[0] * k2[2],
                          k1[0] * k2[1] - k1[1] * k2[0]};
                }
                const double n = norm2(w0);
                if (n < 1e-6) continue;
                w0 = scaled(w0, 1.0 / n);
                double s = 0.0;
                for (double v : w0) s += v;
                if (std::fabs(s) < 0.3) continue;
                if (s < 0.0) w0 = scaled(w0, -1.0);
                break;
            }
            std::vector<Halfspace> rows = gwtest::random_pointed_cone(rng, d).rows();
            rows.push_back({w0, 0.0});
            const SetRep H = SetRep::halfspace_intersection(rows);
            const FeasibleSet F = FeasibleSet::finite(lattice);

            Point y1(d), y2(d), h(d, 5.0);
            for (double& v : y1) v = ypick(rng);
            for (double& v : y2) v = ypick(rng);
            const ParamPair p1{add(y1, h), k1}, p2{add(y2, h), k2};
            c.require(param_feasible(F, H, p1), "constructed pair 1 infeasible");
            c.require(param_feasible(F, H, p2), "constructed pair 2 infeasible");
            for (int probe = 0; probe < 20; ++probe) {
                const double lam = (probe + 1) / 21.0;
                const ParamPair mid{add(scaled(p1.a, lam), scaled(p2.a, 1.0 - lam)),
                                    add(scaled(p1.k, lam), scaled(p2.k, 1.0 - lam))};
                c.require(param_feasible(F, H, mid), "convex combination lost feasibility");
                if (!c.ok) break;
            }
        }
    }
    detail = c.log.str();
    return c.ok;
}

// ---- criterion 7: sensitivity --------------------------------------------

bool criterion_sensitivity(std::string& detail) {
    Check c;
    {
        const auto& e = *find_example("ex617");
        const auto sample = e.instance.F.sample();
        double min_a = HUGE_VAL, min_b = HUGE_VAL;
        const GerstewitzFunctional gb = e.instance.g.with_a({1.0, 0.0});
        for (const Point& y : sample) {
            min_a = std::min(min_a, phi(e.instance.g, y).value.value());
            min_b = std::min(min_b, phi(gb, y).value.value());
        }
        c.require(min_a >= -e.instance.g.options().tol, "ex617: phi_{-H,k} dips below -tol on the sample");
        c.require(min_b < -1e3, "ex617: phi_{b-H,k} never reaches below -1e3 on the sample");
    }
    {
        const auto& a_side = *find_example("ex618a");
        const SolveResult src = solve(a_side.instance);
        const auto pred = sensitivity_transfer(a_side.instance, src, {{1.0, 0.0}, {1.0, 1.0}});
        c.require(pred.prediction == SensitivityPrediction::target_nonempty_compact,
                  "ex618 transfer prediction missing");
        const SolveResult tgt = solve(find_example("ex618b")->instance);
        c.require(tgt.has_optimum() && tgt.minimizers.size() >= 2,
                  "ex618 target minimizers not confirmed non-unique");
    }
    detail = c.log.str();
    return c.ok;
}

// ---- criterion 8: efficiency ---------------------------------------------

bool criterion_efficiency(std::string& detail) {
    Check c;
    std::mt19937_64 rng(gwtest::corpus_seed() + 600);
    std::uniform_int_distribution<int> size_pick(1, 30);
    std::uniform_real_distribution<double> mag(0.0, 2.0);
    for (int i = 0; i < 200 && c.ok; ++i) {
        const std::size_t d = 2 + (i % 2);
        const bool orthant = i % 3 != 0;
        SetRep D = orthant ? SetRep::orthant(d) : gwtest::random_pointed_cone(rng, d);
        std::vector<Point> F;
        const int n = size_pick(rng);
        for (int p = 0; p < n; ++p) F.push_back(gwtest::random_point(rng, d, 3.0));
        const DominationSet dom = DominationSet::make(D);
        const auto mine = eff_finite(F, dom);

        // Independent quadratic-time oracle with its own membership loops.
        std::vector<Point> oracle;
        for (const Point& y0 : F) {
            bool eff = true;
            for (const Point& y : F) {
                if (points_close(y, y0, 1e-12)) continue;
                bool in_d = true;
                if (orthant) {
                    for (std::size_t q = 0; q < d; ++q)
                        if (y0[q] - y[q] < 0.0) in_d = false;
                } else {
                    for (const Halfspace& hrow : D.rows()) {
                        double s = 0.0;
                        for (std::size_t q = 0; q < d; ++q) s += hrow.normal[q] * (y0[q] - y[q]);
                        if (s < 0.0) in_d = false;
                    }
                }
                if (in_d) {
                    eff = false;
                    break;
                }
            }
            if (eff && !in_set(y0, oracle, 1e-12)) oracle.push_back(y0);
        }
        c.require(same_point_set(mine, oracle, 1e-12), "eff_finite disagrees with the brute-force oracle");

        // Extension lemma branches.
        std::vector<Point> shifts{Point(d, 0.0)};
        for (int s = 0; s < 3; ++s) {
            if (orthant) {
                Point h(d);
                for (double& v : h) v = mag(rng);
                shifts.push_back(std::move(h));
            } else {
                auto inner = point_samples(D, 4);
                if (!inner.empty()) shifts.push_back(inner[static_cast<std::size_t>(s) % inner.size()]);
            }
        }
        const auto ext = eff_extension_check(F, shifts, dom);
        c.require(ext.subset_holds, "extension subset branch failed");
        if (dom.pointed == TriBool::yes && dom.sum_closed == TriBool::yes)
            c.require(ext.equality_holds == TriBool::yes, "extension equality branch failed");
    }
    detail = c.log.str();
    return c.ok;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "example reproduction", criterion_examples},
        {2, "functional-law suite", criterion_laws},
        {3, "closed form vs bisection", criterion_oracle_equivalence},
        {4, "problem equivalences", criterion_equivalences},
        {5, "existence soundness", criterion_existence},
        {6, "parameter control", criterion_parameters},
        {7, "sensitivity transfer", criterion_sensitivity},
        {8, "efficiency", criterion_efficiency},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        std::string detail;
        const bool ok = cr.run(detail);
        std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.name,
                    detail.empty() ? "" : ok ? "" : " -- ", ok ? detail.c_str() : detail.c_str());
        if (!ok) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
