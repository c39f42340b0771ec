#pragma once

#include <complex>
#include <cstdint>

#include "cubicpair/form_pair.hpp"
#include "cubicpair/numeric.hpp"

namespace cubicpair {

// S(a,q) = sum_{m=1..q} e(a m^3 / q), evaluated in double precision with an
// explicit absolute error bound. |S(a,q)| <= q always; S(0,q) = q exactly.
struct GaussSumValue {
    Int a;
    std::uint64_t q = 1;
    std::complex<double> value;
    double error_bound = 0.0;
};

GaussSumValue gauss_sum(const Int& a, std::uint64_t q);

// For gamma = c_i a1 + d_i a2 and modulus q:
//   q_i = q / gcd(q, gamma),  b_i = gamma / gcd(q, gamma),
// so that gcd(b_i, q_i) = 1, q_i | q and S(gamma, q)/q = S(b_i, q_i)/q_i.
struct ArcDecomposition {
    Int gamma;
    std::uint64_t q = 1;
    Int b;
    std::uint64_t q_i = 1;
};

ArcDecomposition arc_decompose(const FormPair& pair, const Int& a1, const Int& a2,
                               std::uint64_t q, std::size_t i);

} // namespace cubicpair
