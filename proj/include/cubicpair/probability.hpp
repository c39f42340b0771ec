#pragma once

#include <cstdint>
#include <map>

#include "cubicpair/mgood.hpp"
#include "cubicpair/numeric.hpp"

namespace cubicpair {

// Probability model: the 16 columns are iid, each uniform on (Z/p)^2, so a
// column lands in any one of the p+1 projective classes with probability
// (p-1)/p^2 and on (0,0) with probability 1/p^2. Everything below is exact
// rational arithmetic; the only floating point is in Monte Carlo summaries.

struct RatioDistribution {
    std::uint64_t p;
    Rat per_class;  // (p-1)/p^2, each of the p+1 classes
    Rat both_zero;  // 1/p^2

    explicit RatioDistribution(std::uint64_t prime);
    // (p+1) per_class + both_zero == 1, exactly.
    bool normalized() const;
};

// P(condition III holds mod 3) = 1 - (6*5^16 - 12*3^16 + 6)/9^16.
Rat prob3();

// Complement f(p) of condition II at p = 2 mod 3:
// f(p) = (p^16 + p^15 - 1)/p^31 + (p+1)((2p-1)^16 - 2 p^16 + 1)/(2 p^31).
Rat prob2_complement(std::uint64_t p);
Rat prob2_at(std::uint64_t p); // 1 - f(p)

// P(condition I holds mod p) for p = 1 mod 3, p <= 1000. Sums the multinomial
// mass over the admissible region: t = #(0,0) columns in 0..8, and the other
// 16-t columns spread over p+1 classes with every class size <= 9-t.
// Two independent exact routes:
//   prob1_at      — inclusion-exclusion over the set of over-cap classes
//   prob1_at_gf   — distribute-with-caps counting (truncated-polynomial DP)
Rat prob1_at(std::uint64_t p);
Rat prob1_at_gf(std::uint64_t p);

// Upper bound for the complement of condition I: C(16,10)(p+1)/p^10.
Rat prob1_complement_bound(std::uint64_t p);

// Rational enclosure of the infinite tail product lower bound
// exp(-x), x = c/(13 p_cut^13), via 1-x <= exp(-x) <= 1 for x in [0,1).
// Used with (c, p_cut) = (32767, 541) for condition II and (9152, 13) for
// condition I. As an enclosure of the tail product itself the upper end is 1.
RatInterval tail_enclosure(const Int& c, std::uint64_t p_cut);

struct ProbabilityReport {
    Rat prob3_value;
    std::map<std::uint64_t, Rat> prob2_per_prime; // p = 2 mod 3, p < prob2_cut
    std::uint64_t prob2_cut = 541;
    std::uint64_t prob1_cut = 13;
    Rat prob1_at_7;
    RatInterval prob1_tail;
    RatInterval prob2_tail;
    Rat prob1_lower;  // prob1_at_7 * prob1_tail.lo
    Rat prob2_lower;  // finite product * prob2_tail.lo
    Rat lower;        // prob1_lower * prob2_lower * prob3
    Rat upper;        // prob2_at(2)
    RatInterval final_interval;
};

// Assembles the two-sided bound for P(M-good): lower from the finite products
// and tail enclosures, upper from the single factor at p = 2. The tail cuts
// are configurable (both should be primes; the defaults reproduce the pinned
// published digits).
ProbabilityReport prob_mgood_interval(std::uint64_t prob2_cut = 541,
                                      std::uint64_t prob1_cut = 13);

struct MonteCarloResult {
    std::uint64_t p = 0;
    Condition condition = Condition::I;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t seed = 0;
    Rat exact;
    double frequency = 0.0;
    double sigma = 0.0;       // binomial sd of the frequency under `exact`
    bool within_3sigma = false;
};

// Samples `trials` matrices of 16 iid uniform columns in (Z/p)^2 and counts
// how often the stated condition holds. Chunked with per-chunk derived seeds;
// the result depends only on (seed, trials), not on the worker count.
MonteCarloResult monte_carlo_condition(std::uint64_t p, Condition condition,
                                       std::uint64_t trials, std::uint64_t seed);

} // namespace cubicpair
