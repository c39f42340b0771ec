#pragma once

#include <complex>
#include <cstdint>
#include <map>

#include "cubicpair/form_pair.hpp"
#include "cubicpair/numeric.hpp"

namespace cubicpair {

// A(q) = sum over (a1,a2) in [1,q]^2 with gcd(a1,a2,q)=1 of
//        prod_i S(b_i,q_i)/q_i.
// The exact values flow through the identity
//        sum_{i=0..k} A(p^i) = p^{-(n-2)k} rho(p^k),
// which keeps everything in integer/rational arithmetic; the complex
// double-sum route exists as an independent cross-check at small q.

// A(p^k) = p^{-(n-2)k} rho(p^k) - p^{-(n-2)(k-1)} rho(p^{k-1}), exact.
Rat a_of_prime_power(const FormPair& pair, std::uint64_t p, unsigned k);

// Multiplicative assembly over the prime powers of q. A(1) = 1.
Rat a_of_q(const FormPair& pair, std::uint64_t q);

// Definitional route via complex Gauss sums (cross-check only).
std::complex<double> a_of_q_direct(const FormPair& pair, std::uint64_t q);

// max { t : p^t <= limit }, by repeated multiplication.
unsigned k_of_p(std::uint64_t p, std::uint64_t limit);

// Truncated singular series and its Euler-product counterpart:
//   truncated_series = sum_{q <= P0} A(q)
//   euler_product    = prod_{p <= P0} p^{-(n-2)k(p)} rho(p^{k(p)}),  p^{k(p)} <= P0
//   remainder        = |difference|
struct SeriesTruncation {
    std::uint64_t p0 = 1;
    std::map<std::uint64_t, Rat> a_values;        // q -> A(q), q <= P0
    std::map<std::uint64_t, unsigned> k_map;      // p -> k(p), p <= P0
    Rat truncated_series;
    Rat euler_product;
    Rat remainder;
    bool positive = false; // truncated_series > 0
};

SeriesTruncation truncated_series(const FormPair& pair, std::uint64_t p0);

} // namespace cubicpair
