#pragma once

// Shared test utilities: the independent membership-scan oracle for phi,
// random instance generators, and the GW_SEED environment hook.

#include <cstdlib>
#include <optional>
#include <random>

#include "gwscal/gerstewitz.hpp"
#include "gwscal/solver.hpp"

namespace gwtest {

using namespace gwscal;

inline unsigned corpus_seed() {
    if (const char* s = std::getenv("GW_SEED")) return static_cast<unsigned>(std::strtoul(s, nullptr, 10));
    return 42;
}

/// Independent oracle for phi: a coarse feasibility scan over t using only
/// set membership, refined by bisection on the detected sign change. Never
/// touches the closed-form row arithmetic.
struct OraclePhi {
    enum class Kind { neg_inf, finite, pos_inf };
    Kind kind;
    double value = 0.0;
};

inline OraclePhi oracle_phi(const SetRep& H, const Point& a, const Point& k, const Point& y,
                            double lo = -64.0, double hi = 64.0, int steps = 4096) {
    auto feasible = [&](double t) { return level_set_contains(a, H, k, t, y); };
    if (feasible(lo)) return {OraclePhi::Kind::neg_inf, 0.0};
    std::optional<double> first;
    double prev = lo;
    for (int i = 1; i <= steps; ++i) {
        const double t = lo + (hi - lo) * i / steps;
        if (feasible(t)) {
            first = t;
            break;
        }
        prev = t;
    }
    if (!first) return {OraclePhi::Kind::pos_inf, 0.0};
    double a_t = prev, b_t = *first;
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (a_t + b_t);
        (feasible(mid) ? b_t : a_t) = mid;
    }
    return {OraclePhi::Kind::finite, b_t};
}

struct RandomInstance {
    SetRep H;
    Point a;
    Point k;
};

/// Random polyhedral H with a valid direction k: rows are sign-flipped so
/// <w_i, k> >= 0; some instances get rows exactly orthogonal to k, a few get
/// only orthogonal rows (the -inf regime). Non-orthogonal rows keep
/// <w, k> >= 0.05 |w||k| so closed-form values stay well conditioned for
/// membership re-verification.
inline RandomInstance random_polyhedral_instance(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim_pick(2, 3);
    std::uniform_int_distribution<int> row_pick(1, 6);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> offset(-3.0, 3.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    const std::size_t d = static_cast<std::size_t>(dim_pick(rng));
    Point k(d);
    do {
        for (double& v : k) v = coord(rng);
    } while (inf_norm(k) < 0.3);

    const int nrows = row_pick(rng);
    const bool all_orthogonal = u01(rng) < 0.1;
    std::vector<Halfspace> rows;
    const double kk = dot(k, k);
    while (static_cast<int>(rows.size()) < nrows) {
        Point w(d);
        for (double& v : w) v = coord(rng);
        if (inf_norm(w) < 0.3) continue;
        if (all_orthogonal || u01(rng) < 0.3) {
            // Project onto the orthogonal complement of k.
            const double c = dot(w, k) / kk;
            for (std::size_t i = 0; i < d; ++i) w[i] -= c * k[i];
            if (inf_norm(w) < 0.05) continue;
            // Snap tiny residue to exact orthogonality.
            const double r = dot(w, k) / kk;
            for (std::size_t i = 0; i < d; ++i) w[i] -= r * k[i];
        } else {
            if (dot(w, k) < 0.0)
                for (double& v : w) v = -v;
            if (dot(w, k) < 0.05 * inf_norm(w) * inf_norm(k)) continue; // conditioning floor
        }
        rows.push_back({std::move(w), offset(rng)});
    }

    Point a(d);
    for (double& v : a) v = coord(rng);
    return {SetRep::halfspace_intersection(std::move(rows)), std::move(a), std::move(k)};
}

inline Point random_point(std::mt19937_64& rng, std::size_t d, double span = 5.0) {
    std::uniform_real_distribution<double> coord(-span, span);
    Point p(d);
    for (double& v : p) v = coord(rng);
    return p;
}

/// Random pointed polyhedral cone containing the orthant: nonnegative
/// normals of full rank.
inline SetRep random_pointed_cone(std::mt19937_64& rng, std::size_t d) {
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    while (true) {
        std::vector<Halfspace> rows;
        for (std::size_t i = 0; i < d; ++i) {
            Point w(d);
            for (std::size_t j = 0; j < d; ++j) w[j] = (i == j) ? 1.0 : 0.4 * mag(rng);
            rows.push_back({std::move(w), 0.0});
        }
        SetRep cone = SetRep::halfspace_intersection(std::move(rows));
        if (is_pointed_cone(cone) == TriBool::yes) return cone;
    }
}

} // namespace gwtest
