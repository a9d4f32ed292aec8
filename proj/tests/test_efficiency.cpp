#include <doctest.h>

#include "gwscal/efficiency.hpp"
#include "gwscal/examples.hpp"
#include "support.hpp"

using namespace gwscal;

namespace {

// Independent quadratic-time oracle with its own membership loops.
std::vector<Point> brute_eff(const std::vector<Point>& F, const SetRep& D) {
    std::vector<Point> out;
    for (const Point& y0 : F) {
        bool eff = true;
        for (const Point& y : F) {
            if (points_close(y, y0, 1e-12)) continue;
            Point d = sub(y0, y);
            bool in_d = true;
            if (D.kind() == SetRep::Kind::orthant) {
                for (double v : d)
                    if (v < 0.0) in_d = false;
            } else {
                for (const Halfspace& h : D.rows()) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < d.size(); ++i) s += h.normal[i] * d[i];
                    if (s < h.offset) in_d = false;
                }
            }
            if (in_d) {
                eff = false;
                break;
            }
        }
        bool dup = false;
        for (const Point& p : out)
            if (points_close(p, y0, 1e-12)) dup = true;
        if (eff && !dup) out.push_back(y0);
    }
    return out;
}

} // namespace

TEST_CASE("efficient points of small sets") {
    const DominationSet D = DominationSet::make(SetRep::orthant(2));
    SUBCASE("square corners") {
        const auto eff = eff_finite({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}, D);
        REQUIRE(eff.size() == 1);
        CHECK(points_close(eff[0], {0.0, 0.0}, 1e-12));
    }
    SUBCASE("singleton") {
        const auto eff = eff_finite({{3.0, -1.0}}, D);
        CHECK(eff.size() == 1);
    }
    SUBCASE("segment sample collapses to its left end") {
        std::vector<Point> seg;
        for (int i = 0; i <= 10; ++i) seg.push_back({0.1 * i, 0.0});
        const auto eff = eff_finite(seg, D);
        REQUIRE(eff.size() == 1);
        CHECK(points_close(eff[0], {0.0, 0.0}, 1e-12));
    }
}

TEST_CASE("extension of F by domination directions") {
    const DominationSet D = DominationSet::make(SetRep::orthant(2), true);
    SUBCASE("subset and equality under a pointed cone") {
        const auto r = eff_extension_check({{0.0, 0.0}, {2.0, 1.0}}, {{1.0, 0.0}, {0.0, 1.0}}, D);
        CHECK(r.subset_holds);
        CHECK(r.equality_holds == TriBool::yes);
    }
    SUBCASE("halfplane domination set: only the subset direction is claimed") {
        const DominationSet Dh = DominationSet::make(SetRep::builtin(BuiltinSet::halfplane_x_2d));
        REQUIRE(Dh.pointed == TriBool::no);
        const auto r = eff_extension_check({{0.0, 0.0}}, {{0.0, 1.0}}, Dh);
        CHECK(r.subset_holds);
        CHECK(r.equality_holds == TriBool::unknown); // equality branch never fires
        // And indeed the extension lost the efficient point: equality fails.
        CHECK(eff_finite({{0.0, 0.0}, {0.0, 1.0}}, Dh).empty());
        CHECK(eff_finite({{0.0, 0.0}}, Dh).size() == 1);
    }
    SUBCASE("empty extension sample is a no-op") {
        const auto r = eff_extension_check({{0.0, 0.0}, {1.0, 2.0}}, {}, D);
        CHECK(r.subset_holds);
    }
    SUBCASE("sample outside D is rejected") {
        CHECK_THROWS_AS(eff_extension_check({{0.0, 0.0}}, {{-1.0, 0.0}}, D), PreconditionError);
    }
}

TEST_CASE("minimizer efficiency link") {
    SUBCASE("segment minimizers reduce to the origin") {
        ProblemInstance P(FeasibleSet::finite({{1.0, 0.0}, {0.5, 0.0}, {0.0, 0.0}, {1.0, 0.5}}),
                          GerstewitzFunctional({1.0, 0.0}, SetRep::orthant(2), {1.0, 1.0}));
        const SolveResult r = solve_finite(P);
        const EffLink link = minimizer_efficiency_link(P, r);
        CHECK(link.eff_of_closure_subset);
        REQUIRE(link.eff_of_minimizers.size() == 1);
        CHECK(points_close(link.eff_of_minimizers[0], {0.0, 0.0}, 1e-12));
    }
    SUBCASE("incomparable minimizers all stay efficient") {
        ProblemInstance P(FeasibleSet::finite({{1.0, 0.0}, {0.0, 1.0}}),
                          GerstewitzFunctional({0.0, 0.0}, SetRep::orthant(2), {1.0, 1.0}));
        const SolveResult r = solve_finite(P);
        REQUIRE(r.minimizers.size() == 2);
        CHECK(minimizer_efficiency_link(P, r).eff_of_minimizers.size() == 2);
    }
}

TEST_CASE("efficiency matches the brute-force oracle") {
    std::mt19937_64 rng(gwtest::corpus_seed() + 50);
    std::uniform_int_distribution<int> size_pick(1, 30);
    for (int i = 0; i < 60; ++i) {
        const std::size_t d = 2 + (i % 2);
        SetRep D = (i % 3 == 0) ? gwtest::random_pointed_cone(rng, d) : SetRep::orthant(d);
        std::vector<Point> F;
        const int n = size_pick(rng);
        for (int p = 0; p < n; ++p) F.push_back(gwtest::random_point(rng, d, 3.0));
        const auto mine = eff_finite(F, DominationSet::make(D));
        const auto oracle =
            brute_eff(F, D.kind() == SetRep::Kind::orthant ? D : SetRep::halfspace_intersection(D.rows()));
        CHECK(same_point_set(mine, oracle, 1e-12));
    }
}

TEST_CASE("efficiency set properties") {
    std::mt19937_64 rng(gwtest::corpus_seed() + 51);
    const DominationSet D2 = DominationSet::make(SetRep::orthant(2));
    const DominationSet D3 = DominationSet::make(SetRep::orthant(3));
    for (int i = 0; i < 40; ++i) {
        const std::size_t d = 2 + (i % 2);
        const DominationSet& D = d == 2 ? D2 : D3;
        std::vector<Point> F;
        for (int p = 0; p < 12; ++p) F.push_back(gwtest::random_point(rng, d, 3.0));
        const auto eff = eff_finite(F, D);

        // Idempotence and containment.
        CHECK(same_point_set(eff_finite(eff, D), eff, 1e-12));
        for (const Point& e : eff) {
            bool in_f = false;
            for (const Point& y : F)
                if (points_close(y, e, 1e-12)) in_f = true;
            CHECK(in_f);
        }

        // Removing a non-efficient point never changes the efficient set.
        for (const Point& y : F) {
            bool is_eff = false;
            for (const Point& e : eff)
                if (points_close(y, e, 1e-12)) is_eff = true;
            if (is_eff) continue;
            std::vector<Point> reduced;
            for (const Point& q : F)
                if (!points_close(q, y, 1e-15)) reduced.push_back(q);
            CHECK(same_point_set(eff_finite(reduced, D), eff, 1e-12));
            break;
        }

        // The extension lemma, subset branch, on random nonnegative shifts.
        std::vector<Point> shifts{{Point(d, 0.0)}};
        for (int s = 0; s < 3; ++s) {
            Point h(d);
            for (double& v : h) v = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
            shifts.push_back(std::move(h));
        }
        CHECK(eff_extension_check(F, shifts, D).subset_holds);
    }
}
