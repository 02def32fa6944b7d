#include <doctest.h>

#include <clutterkit/lp.hpp>
#include <clutterkit/polyhedra.hpp>
#include <random>

#include "helpers.hpp"

using namespace clutterkit;
using testkit::clutter_of;
using testkit::q6;

namespace {

LinearConstraint row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    return LinearConstraint{std::move(coeffs), rel, std::move(rhs)};
}

}  // namespace

TEST_CASE("covering LP over Q6 has optimum two") {
    LpSolution sol = solve_lp(covering_lp(q6()));
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == Rational(2));
}

TEST_CASE("covering LP over the triangle is fractional") {
    LpSolution sol = solve_lp(covering_lp(clutter_of(3, {{1, 2}, {1, 3}, {2, 3}})));
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == Rational(3, 2));
    CHECK(sol.primal == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("singleton packing LP") {
    LpProblem p;
    p.sense = Sense::maximize;
    p.objective = {Rational(1)};
    p.rows.push_back(row({Rational(1)}, Relation::less_equal, Rational(1)));
    LpSolution sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == Rational(1));
}

TEST_CASE("infeasible and unbounded outcomes") {
    LpProblem infeasible;
    infeasible.objective = {Rational(1)};
    infeasible.rows.push_back(row({Rational(1)}, Relation::less_equal, Rational(-1)));
    CHECK(solve_lp(infeasible).status == LpStatus::infeasible);

    LpProblem unbounded;
    unbounded.sense = Sense::maximize;
    unbounded.objective = {Rational(1)};
    CHECK(solve_lp(unbounded).status == LpStatus::unbounded);

    LpProblem equality_infeasible;
    equality_infeasible.objective = {Rational(1), Rational(1)};
    equality_infeasible.rows.push_back(row({Rational(1), Rational(1)}, Relation::equal, Rational(2)));
    equality_infeasible.rows.push_back(row({Rational(1), Rational(1)}, Relation::equal, Rational(3)));
    CHECK(solve_lp(equality_infeasible).status == LpStatus::infeasible);
}

TEST_CASE("degenerate and redundant systems") {
    LpProblem p;
    p.objective = {Rational(1), Rational(2)};
    p.rows.push_back(row({Rational(1), Rational(1)}, Relation::greater_equal, Rational(1)));
    p.rows.push_back(row({Rational(2), Rational(2)}, Relation::greater_equal, Rational(2)));  // duplicate
    p.rows.push_back(row({Rational(1), Rational(1)}, Relation::equal, Rational(1)));
    LpSolution sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == Rational(1));
    CHECK(sol.primal[0] == Rational(1));
}

TEST_CASE("mixed-sign data stays exact") {
    LpProblem p;
    p.sense = Sense::maximize;
    p.objective = {Rational(3), Rational(-1, 2)};
    p.rows.push_back(row({Rational(2), Rational(1)}, Relation::less_equal, Rational(4)));
    p.rows.push_back(row({Rational(1), Rational(3)}, Relation::less_equal, Rational(6)));
    p.rows.push_back(row({Rational(-1), Rational(1)}, Relation::greater_equal, Rational(-5, 2)));
    LpSolution sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == Rational(6));  // x = (2, 0)
}

TEST_CASE("random feasible bounded instances are solved with verified certificates") {
    // solve_lp verifies primal/dual feasibility, equal objectives and
    // complementary slackness internally, so reaching optimal is the assertion.
    std::mt19937 rng(2024);
    auto coin = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    for (int trial = 0; trial < 250; ++trial) {
        int n = coin(1, 6);
        int m = coin(0, 8);
        std::vector<Rational> x0;
        for (int j = 0; j < n; ++j) x0.push_back(Rational(coin(0, 4), coin(1, 3)));
        LpProblem p;
        p.sense = Sense::minimize;
        for (int j = 0; j < n; ++j) p.objective.push_back(Rational(coin(1, 5), coin(1, 4)));
        for (int i = 0; i < m; ++i) {
            LinearConstraint r;
            Rational lhs(0);
            for (int j = 0; j < n; ++j) {
                r.coeffs.push_back(Rational(coin(-2, 4), coin(1, 3)));
                lhs += r.coeffs.back() * x0[static_cast<std::size_t>(j)];
            }
            int kind = coin(0, 2);
            if (kind == 0) {
                r.rel = Relation::less_equal;
                r.rhs = lhs + Rational(coin(0, 3));
            } else if (kind == 1) {
                r.rel = Relation::greater_equal;
                r.rhs = lhs - Rational(coin(0, 3));
            } else {
                r.rel = Relation::equal;
                r.rhs = lhs;
            }
            p.rows.push_back(std::move(r));
        }
        LpSolution sol = solve_lp(p);  // feasible by construction; bounded since c > 0, x >= 0
        CHECK(sol.status == LpStatus::optimal);
    }
}
