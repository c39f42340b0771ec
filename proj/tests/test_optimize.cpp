#include <doctest.h>

#include <algorithm>

#include "cubicpair/optimize.hpp"

using namespace cubicpair;

namespace {
const Rat kDeltaStar = Rat(566) / Rat(34905);
}

TEST_CASE("the four built-in exponents at the optimum") {
    auto cs = build_constraints();
    REQUIRE(cs.size() == 4);
    CHECK(cs[2].exponent.eval(kDeltaStar) == 2327); // 566/(15d)
    CHECK(cs[3].exponent.eval(kDeltaStar) == 2327); // 1195/(1-30d)
    CHECK(cs[0].exponent.eval(kDeltaStar) == Rat(1605630) / Rat(2830));
    CHECK(cs[0].exponent.eval(kDeltaStar) < 2327);
    CHECK(cs[1].exponent.eval(kDeltaStar) < 2327);

    // directions: two falling, two rising on (0, 1/30)
    CHECK(cs[0].exponent.direction(Rat(0), Rat(1) / 30) == -1);
    CHECK(cs[2].exponent.direction(Rat(0), Rat(1) / 30) == -1);
    CHECK(cs[1].exponent.direction(Rat(0), Rat(1) / 30) == 1);
    CHECK(cs[3].exponent.direction(Rat(0), Rat(1) / 30) == 1);
}

TEST_CASE("solve the built-in instance") {
    auto cs = build_constraints();
    auto res = solve_minmax(cs, Rat(0), Rat(1) / 30);
    CHECK(res.delta_star == kDeltaStar);
    CHECK(res.optimal_exponent == 2327);
    CHECK(res.lambda_exponent == 2328);
    CHECK(!res.boundary);
    REQUIRE(res.active.size() == 2);
    CHECK(std::find(res.active.begin(), res.active.end(), "566/(15d)") != res.active.end());
    CHECK(std::find(res.active.begin(), res.active.end(), "1195/(1-30d)") !=
          res.active.end());

    // side conditions: delta below the interval end; the first P0 branch is
    // selected already under P >= M^30
    CHECK(res.delta_below_interval_end);
    CHECK(res.p0_first_branch_ok);
    CHECK(res.p0_first_branch_threshold == Rat(105) / (Rat(4) + Rat(55) * kDeltaStar));

    CHECK(certify(cs, res, 1000));

    // permutation invariance
    auto reversed = cs;
    std::reverse(reversed.begin(), reversed.end());
    auto res2 = solve_minmax(reversed, Rat(0), Rat(1) / 30);
    CHECK(res2.delta_star == res.delta_star);
    CHECK(res2.optimal_exponent == res.optimal_exponent);
}

TEST_CASE("symmetric two-constraint instance") {
    std::vector<ExponentConstraint> cs;
    cs.push_back({"1/d", ExponentConstraint::Kind::PLower,
                  {Rat(1), Rat(0), Rat(0), Rat(1)}, Rat(0), Rat(1)});
    cs.push_back({"1/(1-d)", ExponentConstraint::Kind::PLower,
                  {Rat(1), Rat(0), Rat(1), Rat(-1)}, Rat(0), Rat(1)});
    auto res = solve_minmax(cs, Rat(0), Rat(1));
    CHECK(res.delta_star == Rat(1) / 2);
    CHECK(res.optimal_exponent == 2);
    CHECK(res.lambda_exponent == 3);
    CHECK(certify(cs, res, 100));
}

TEST_CASE("single decreasing constraint is boundary-optimal on the right") {
    std::vector<ExponentConstraint> cs;
    cs.push_back({"1/d", ExponentConstraint::Kind::PLower,
                  {Rat(1), Rat(0), Rat(0), Rat(1)}, Rat(0), Rat(1) / 2});
    auto res = solve_minmax(cs, Rat(0), Rat(1) / 2);
    CHECK(res.boundary);
    CHECK(res.boundary_side == "right");
    CHECK(res.delta_star == Rat(1) / 2);
    CHECK(res.optimal_exponent == 2);
}

TEST_CASE("perturbed instance moves the optimum but stays certified") {
    auto cs = build_constraints();
    cs[2].exponent.a0 = Rat(565); // 565/(15d)
    auto res = solve_minmax(cs, Rat(0), Rat(1) / 30);
    CHECK(res.delta_star != kDeltaStar);
    CHECK(res.delta_star == Rat(565) / Rat(34875));
    CHECK(certify(cs, res, 1000));
}

TEST_CASE("errors and the lambda rule") {
    CHECK_THROWS_AS(solve_minmax({}, Rat(0), Rat(1)), std::invalid_argument);
    auto cs = build_constraints();
    CHECK_THROWS_AS(solve_minmax(cs, Rat(1), Rat(0)), std::invalid_argument);
    auto res = solve_minmax(cs, Rat(0), Rat(1) / 30);
    CHECK_THROWS_AS(certify(cs, res, 0), std::invalid_argument);
    CHECK_THROWS_AS(certify({}, res, 10), std::invalid_argument);

    OptimizationResult r;
    r.optimal_exponent = Rat(10);
    CHECK(lambda_bound(r) == 11);
    r.optimal_exponent = Rat(4655) / 2; // 2327.5
    CHECK(lambda_bound(r) == 2329);
    r.optimal_exponent = Rat(2327);
    CHECK(lambda_bound(r) == 2328);
}

TEST_CASE("pole inside the interval is rejected") {
    // denominator 1 - 30d has its root at 1/30; an interval crossing it fails
    LinFrac f{Rat(1195), Rat(0), Rat(1), Rat(-30)};
    CHECK_THROWS_AS(f.direction(Rat(0), Rat(1) / 10), std::domain_error);
}
