#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubicpair/form_pair.hpp"
#include "cubicpair/projective.hpp"

namespace cubicpair {

enum class Condition { I, II, III };

const char* condition_name(Condition c);

// Verdict for one prime. Witness data depends on the condition:
//  - I: the offending class (or BothZero-only tally) and its pairwise-parallel
//    count, i.e. class size + number of 0/0 columns;
//  - II/III: the number of distinct non-BothZero classes.
struct PrimeVerdict {
    std::uint64_t p = 0;
    Condition condition = Condition::I;
    bool satisfied = false;

    std::optional<ProjectiveRatio> offending_class;
    std::size_t parallel_count = 0;
    std::size_t distinct_classes = 0;
    std::size_t both_zero_count = 0;
    // Condition III with no non-BothZero class mod 3: treated as one ratio
    // (the 0/0 convention identifies it with anything); flagged so reports
    // can surface the policy.
    bool degenerate_all_both_zero = false;
};

struct MGoodReport {
    Int prime_bound;              // M^2
    bool is_mgood = false;        // <=> failures.empty()
    std::vector<PrimeVerdict> failures;  // always populated, sorted by p
    std::vector<PrimeVerdict> verdicts;  // all primes, only under verbose
};

// Residue-level predicates shared with the Monte Carlo sampler, which draws
// columns directly in (Z/p)^2 and may legitimately produce (0,0) columns.
PrimeVerdict condition_i_of_classes(const std::vector<ProjectiveRatio>& classes,
                                    std::uint64_t p);
PrimeVerdict condition_ii_of_classes(const std::vector<ProjectiveRatio>& classes,
                                     std::uint64_t p);
PrimeVerdict condition_iii_of_classes(const std::vector<ProjectiveRatio>& classes);

// Condition I: at most 9 pairwise parallel columns mod p, for p = 1 mod 3.
// A maximal pairwise-parallel set is one projective class together with all
// 0/0 columns, so the check is max_K (|K| + #0/0) <= 9, and #0/0 <= 9 when
// no non-BothZero class exists.
PrimeVerdict check_condition_i(const FormPair& pair, std::uint64_t p);

// Condition II: at least 3 distinct non-BothZero classes mod p, p = 2 mod 3.
PrimeVerdict check_condition_ii(const FormPair& pair, std::uint64_t p);

// Condition III: 1 or >= 3 distinct non-BothZero classes mod 3.
PrimeVerdict check_condition_iii(const FormPair& pair);

// Runs I over primes p <= M^2 with p = 1 mod 3, II over p <= M^2 with
// p = 2 mod 3, and III at p = 3 unconditionally. Deterministic: verdicts
// sorted by p. Per-prime work is farmed to worker threads when enabled.
MGoodReport check_mgood(const FormPair& pair, bool verbose = false);

} // namespace cubicpair
