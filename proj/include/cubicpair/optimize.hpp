#pragma once

#include <string>
#include <vector>

#include "cubicpair/numeric.hpp"

namespace cubicpair {

// Exponent of M as a function of delta, stored as a linear-fractional form
// (a0 + a1 d)/(b0 + b1 d) with exact rational coefficients.
struct LinFrac {
    Rat a0, a1, b0, b1;

    Rat eval(const Rat& delta) const;
    // +1 increasing, -1 decreasing, 0 constant on (lo, hi). Throws if the
    // denominator has a root strictly inside the interval.
    int direction(const Rat& lo, const Rat& hi) const;
    bool has_pole_at(const Rat& delta) const;
};

struct ExponentConstraint {
    std::string label;
    enum class Kind { PLower, P0Upper, P0Lower } kind = Kind::PLower;
    LinFrac exponent;
    Rat lo, hi; // validity interval (open)
};

// The four competing lower-bound exponents for P on delta in (0, 1/30):
//   46/(5 delta), 310/(3(1-20 delta)), 566/(15 delta), 1195/(1-30 delta).
std::vector<ExponentConstraint> build_constraints();

struct OptimizationResult {
    Rat delta_star;
    std::vector<std::string> active; // constraints equal to the optimum
    Rat optimal_exponent;            // min over delta of max over constraints
    long lambda_exponent = 0;        // ceil(optimal) + 1
    bool boundary = false;           // infimum at an interval endpoint
    std::string boundary_side;       // "left"/"right" when boundary
    // side conditions at delta_star
    bool delta_below_interval_end = false;
    Rat p0_first_branch_threshold;   // exponent t with "P >= M^t" selecting the
                                     // first branch of the P0 rule; <= 30 means
                                     // the modest P >= M^30 assumption suffices
    bool p0_first_branch_ok = false;
};

// Minimizes max_i E_i(delta) over (lo, hi). Every constraint must be monotone
// there (validated). The minimum of a piecewise-monotone upper envelope sits
// at a pairwise crossing or at an endpoint; candidates are the exact rational
// crossings plus any endpoint where all constraints are finite.
OptimizationResult solve_minmax(const std::vector<ExponentConstraint>& constraints,
                                const Rat& lo, const Rat& hi);

// Exact-rational certificate: the active constraints meet the optimum at
// delta_star, no constraint exceeds it there, and max_i E_i >= optimum on a
// grid of `grid_points` interior rationals.
bool certify(const std::vector<ExponentConstraint>& constraints,
             const OptimizationResult& result, unsigned grid_points);

// ceil(optimal_exponent) + 1: the step that absorbs the epsilon in the
// exponent into the next integer.
long lambda_bound(const OptimizationResult& result);

} // namespace cubicpair
