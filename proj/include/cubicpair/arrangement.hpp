#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicpair/form_pair.hpp"
#include "cubicpair/numeric.hpp"

namespace cubicpair {

// A ratio repeated at least 7 times among the 16 columns; the short route
// that bypasses the rearrangement entirely.
struct HeavyRatio {
    RationalRatio ratio;
    std::vector<std::size_t> indices; // all columns of the class, ascending
};

// Returns the heavy class if one exists; ties broken toward the class
// containing the smallest column index. Requires n = 16.
std::optional<HeavyRatio> detect_heavy_ratio(const FormPair& pair);

// The four admissible shapes of the six B-ratios, by multiplicity profile.
enum class BPattern {
    PairPairSingleSingle, // r_a r_b r_a r_b r_c r_d
    PairPairPair,         // r_a r_b r_a r_b r_c r_c
    SinglesThenPair,      // r_a r_b r_c r_d r_e r_e
    AllDistinct,          // r_a r_b r_c r_d r_e r_f
};

const char* b_pattern_symbols(BPattern p);

// Split of the 16 columns into A (10 columns, every ratio <= 4 times) and
// B (6 columns, >= 3 distinct ratios, each <= 2 times). b_indices are ordered
// so that reading their ratios left to right realizes the pattern; in every
// pattern the first two B-columns carry distinct ratios, which is what the
// eta construction needs from positions 11 and 12.
struct PartitionAB {
    std::vector<std::size_t> a_indices; // ascending, size 10
    std::vector<std::size_t> b_indices; // pattern order, size 6
    BPattern pattern = BPattern::AllDistinct;
};

// Precondition: n = 16 and every ratio multiplicity <= 6 (otherwise the
// heavy-ratio route applies and this throws). Found by backtracking over the
// per-class B-quota; the result is verified against both partition
// constraints before returning.
PartitionAB partition_ab(const FormPair& pair);

// Positive rational vector with sum c_i' eta_i = sum d_i' eta_i = 0 exactly,
// where (c', d') are the input columns with the sign_flips columns negated.
// eta_i is 1 or 2 for i < 10; the last two entries solve the 2x2 system by
// Cramer's rule. lower/upper record the 1/(4M^2) and 4M^2 range; the lower
// end is guaranteed, the upper is checked and reported, not assumed.
struct EtaVector {
    std::vector<Rat> eta;               // size 12
    std::vector<std::size_t> sign_flips; // positions (0-based) among the 12
    std::vector<std::size_t> column_order; // original column index per position
    Rat lower_bound, upper_bound;
    bool bounds_certified = false;
};

// Core construction on an explicit 12-column block (columns 10 and 11 must be
// non-parallel). Starts from x_1..x_10 all 1 and walks assignments in {1,2}^10
// by (number of 2s, index order) until the solved (x_11, x_12) are both
// nonzero.
EtaVector eta_from_columns(const std::vector<Int>& c12, const std::vector<Int>& d12,
                           const Int& max_coeff);

// Applies the partition: positions 1..10 are A ascending, 11..12 the first
// two B-columns.
EtaVector eta_vector(const FormPair& pair, const PartitionAB& partition);

// One remainder-division step: the replaced row becomes (row - sign*other)/3.
struct ReductionStep {
    int replaced_row = 0; // 0 = first row, 1 = second
    int sign = 0;         // in {-1, 0, +1}
    std::vector<Int> remainder;
};

// Euclid-style contraction of a pair whose columns span <= 1 ratio class
// mod 3. Steps divide out 3 while the componentwise congruence
// row = sign * other (mod 3) stays solvable; success means one row reached
// the zero vector. Inputs of rational rank 2 cannot reach a zero row and end
// with success = false once no legal step remains.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::array<std::vector<Int>, 2> final_rows;
    bool success = false;
};

ReductionTrace rank1_mod3_reduce(const FormPair& pair);

} // namespace cubicpair
