#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubicpair/form_pair.hpp"
#include "cubicpair/numeric.hpp"

namespace cubicpair {

// Which solution set is being counted modulo p^k:
//  All               — every x with F(x) = G(x) = 0 (mod p^k)
//  NonZeroAll        — additionally every x_i a unit mod p
//  FixZero(i)        — additionally x_i = 0 (exactly, in Z/p^k)
//  NonZeroPairWitness — additionally some pair (i,j) with
//                       x_i x_j (c_i d_j - c_j d_i) a unit mod p.
// The witness variant is countable only by full enumeration; the existential
// breaks the per-variable convolution structure, so rho_dp rejects it.
struct Variant {
    enum class Kind { All, NonZeroAll, FixZero, NonZeroPairWitness };
    Kind kind = Kind::All;
    std::size_t index = 0; // FixZero only

    static Variant all() { return {Kind::All, 0}; }
    static Variant non_zero_all() { return {Kind::NonZeroAll, 0}; }
    static Variant fix_zero(std::size_t i) { return {Kind::FixZero, i}; }
    static Variant pair_witness() { return {Kind::NonZeroPairWitness, 0}; }

    std::string str() const;
};

struct LocalCount {
    std::uint64_t p = 0;
    unsigned k = 0;
    Variant variant;
    Int value;
};

// Default feasibility caps; hard errors when exceeded, never silent
// truncation. CLI callers may override them per run.
inline constexpr std::uint64_t kEnumerationCap = 100'000'000; // p^{kn} points
inline constexpr std::uint64_t kDpModulusCap = 500;           // q in the DP

// Exact count by enumerating all of (Z/p^k)^n. Feasibility: p^{kn} <= cap.
LocalCount rho_bruteforce(const FormPair& pair, std::uint64_t p, unsigned k,
                          Variant variant,
                          std::uint64_t enumeration_cap = kEnumerationCap);

// Exact count via dynamic programming over partial sums
// (sum c_i x_i^3, sum d_i x_i^3) in (Z/q)^2. q must be a prime power <= the
// cap. Counts are big integers throughout (they reach q^{n-1}).
LocalCount rho_dp(const FormPair& pair, std::uint64_t q, Variant variant,
                  std::uint64_t modulus_cap = kDpModulusCap);

// rho at composite modulus, assembled by CRT from prime-power DP counts.
Int rho_composite(const FormPair& pair, std::uint64_t q, Variant variant);

// Enumerates solutions of F = G = 0 (mod q) and hands each to the callback.
// Same feasibility cap as rho_bruteforce.
void enumerate_solutions(const FormPair& pair, std::uint64_t q,
                         const std::function<void(const std::vector<std::uint64_t>&)>& fn);

// Witness of one lifting step: a solution of F = lambda, G = mu (mod p^k)
// moved to modulus p^{k+1} by correcting coordinates i and j only.
// For p != 3 the correction lives at level p^k and is unique mod p; for p = 3
// it lives at level 3^{k-1} and requires k >= 2.
struct LiftWitness {
    std::vector<Int> base;   // mod p^k
    std::vector<Int> lifted; // mod p^{k+1}
    std::size_t i = 0, j = 0;
    std::uint64_t p = 0;
    unsigned k = 0;
    Int lambda, mu;
    Int residual_f, residual_g; // of the lifted vector mod p^{k+1}; both 0
};

LiftWitness hensel_lift(const FormPair& pair, const std::vector<Int>& x,
                        std::size_t i, std::size_t j, std::uint64_t p, unsigned k,
                        const Int& lambda = Int(0), const Int& mu = Int(0));

// Exhaustive check of the lifting counts: for p != 3, every solution mod p^k
// admitting a qualifying pair (i,j) has exactly p^{n-2} extensions mod
// p^{k+1}; for p = 3, k >= 2, every qualifying solution lifts (>= 1).
struct LiftCountReport {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t solutions = 0;
    std::uint64_t qualifying = 0;
    Int expected_extensions; // p^{n-2}, the p != 3 case
    bool all_exact = true;   // p != 3: every qualifying count == expected
    bool all_liftable = true; // p == 3: every qualifying base lifted
    std::uint64_t min_extensions = 0, max_extensions = 0;
};

LiftCountReport verify_lifting_count(const FormPair& pair, std::uint64_t p,
                                     unsigned k);

// Full sweep over coefficient tuples (c1,c2,c3,d1,d2,d3) in (Z/9)^6 whose
// three column classes mod 3 are pairwise distinct (and none 0/0): each must
// admit x mod 9 solving both congruences with at least two coordinates
// nonzero mod 3. Cubes mod 9 depend only on x mod 3, so x ranges over
// {0,1,2}^3. A counterexample is reported, not thrown.
struct Mod9Report {
    std::uint64_t tuples_checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::array<std::uint64_t, 6>> failure_examples; // at most 10
};

Mod9Report verify_mod9_lemma();

// Rank of the 2 x n coefficient matrix mod p (0, 1 or 2).
unsigned matrix_rank_mod_p(const FormPair& pair, std::uint64_t p);

// rho(p) = p^{n - rank} for p = 2 mod 3 or p = 3, where cubing is a bijection
// on Z/p and the system is linear.
LocalCount rank2_linear_count(const FormPair& pair, std::uint64_t p);

// Certified lower bound for the count of solutions admitting a lifting pair:
// when some two columns are non-parallel mod p, every all-unit solution
// qualifies, so rho_nz serves as the bound. Returns 0 when all columns are
// pairwise parallel mod p.
Int rho_lift_lower_bound(const FormPair& pair, std::uint64_t q);

} // namespace cubicpair
