#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubicpair {

// Arbitrary-precision integers and exact rationals. Coefficients, solution
// counts and probabilities all overflow machine words (counts reach p^{15k},
// probabilities carry p^31 denominators), so these are the currency of the
// whole library. mpq_class keeps values canonicalized (lowest terms, den > 0).
using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, long exp);
Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// Least non-negative residue of a mod m (m > 0), as a machine word.
std::uint64_t mod_u64(const Int& a, std::uint64_t m);

// a^{-1} mod p for prime p, 0 < a < p.
std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p);

// (a*b) mod m without overflow.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// x rendered with exactly `digits` places after the decimal point,
// round half away from zero. "0.99951" style, sign included if negative.
std::string render_decimal(const Rat& x, int digits);

// "num/den" (or just "num" when den == 1).
std::string rat_string(const Rat& x);

// Parse "num/den" or a plain integer string.
Rat parse_rat(const std::string& text);

Rat ceil_rat(const Rat& x);

// Closed interval with exact rational endpoints. Only what the enclosure
// bookkeeping needs: multiplication of non-negative intervals and containment.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval: lo > hi");
    }

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    Rat width() const { return hi - lo; }

    // Valid for intervals with lo >= 0.
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator*(const Rat& scalar) const;
};

} // namespace cubicpair
