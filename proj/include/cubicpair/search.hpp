#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicpair/form_pair.hpp"
#include "cubicpair/numeric.hpp"

namespace cubicpair {

enum class Strategy { EqualRatioPair, EqualRatioBlock, MeetInMiddle };

const char* strategy_name(Strategy s);

// A nontrivial integer zero of both forms, if one was found in the searched
// box. Always re-verified by exact evaluation before being reported.
struct SearchResult {
    std::optional<std::vector<Int>> solution; // length n, zeros off support
    Int sup_norm;                             // max |x_i| when found
    Strategy strategy = Strategy::MeetInMiddle;
    std::uint64_t nodes_explored = 0;
};

// Exact check: F(x) = G(x) = 0 and x != 0.
bool verify_solution(const FormPair& pair, const std::vector<Int>& x);

// Zeros supported on a single ratio class: on such a block the two forms are
// proportional, so one form determines both. Scans coefficient pairs
// c_i a^3 = -+ c_j b^3 for 1 <= a,b <= bound, then blocks of up to 7 columns
// by meet-in-the-middle on the single form. Requires some class of
// multiplicity >= 2. Returns the minimal sup-norm zero found.
SearchResult search_equal_ratio(const FormPair& pair, long bound);

// Meet-in-the-middle on both form values over an arbitrary support of at
// most 6 columns, values in [-bound, bound]. One half's (F,G) values are
// hashed, the other scanned for the exact negation. Deterministic: the
// minimal-sup-norm solution, ties broken lexicographically.
// Feasibility: bound^{ceil(|support|/2)} <= 1e8.
SearchResult search_meet_in_middle(const FormPair& pair,
                                   const std::vector<std::size_t>& support,
                                   long bound);

struct LambdaProfileRow {
    std::string strategy;
    long bound = 0;
    std::optional<Int> best_sup_norm;
    std::uint64_t nodes = 0;
};

// Runs the applicable strategies at doubling bounds up to b_max and compares
// the best hit against M^2328. A probe, not a proof: supports are restricted,
// so "none found" only means none in the searched boxes.
struct LambdaProfile {
    std::vector<LambdaProfileRow> rows;
    std::optional<Int> best_sup_norm;
    Int theorem_bound; // M^2328
    bool within_theorem_bound = false; // when a solution was found
};

LambdaProfile lambda_profile(const FormPair& pair, long b_max);

} // namespace cubicpair
