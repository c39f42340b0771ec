#include "cubicpair/gauss_sum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cubicpair {

GaussSumValue gauss_sum(const Int& a, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("gauss_sum: q must be >= 1");
    GaussSumValue out;
    out.a = a;
    out.q = q;
    std::uint64_t ar = mod_u64(a, q);
    // Group by m^3 mod q; the angle only depends on a m^3 mod q.
    std::vector<std::uint32_t> cube_count(q, 0);
    for (std::uint64_t m = 0; m < q; ++m)
        ++cube_count[mulmod_u64(mulmod_u64(m, m, q), m, q)];
    std::complex<double> s(0.0, 0.0);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::uint64_t v = 0; v < q; ++v) {
        if (cube_count[v] == 0) continue;
        double angle = two_pi * static_cast<double>(mulmod_u64(ar, v, q)) /
                       static_cast<double>(q);
        s += static_cast<double>(cube_count[v]) *
             std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out.value = s;
    // Each term carries a few ulps from the angle reduction and cos/sin.
    out.error_bound = 8.0 * static_cast<double>(q) *
                      std::numeric_limits<double>::epsilon();
    return out;
}

ArcDecomposition arc_decompose(const FormPair& pair, const Int& a1, const Int& a2,
                               std::uint64_t q, std::size_t i) {
    if (q == 0) throw std::invalid_argument("arc_decompose: q must be >= 1");
    if (i >= pair.n()) throw std::invalid_argument("arc_decompose: index out of range");
    ArcDecomposition out;
    out.q = q;
    out.gamma = pair.c(i) * a1 + pair.d(i) * a2;
    Int g;
    Int qz(q);
    mpz_gcd(g.get_mpz_t(), out.gamma.get_mpz_t(), qz.get_mpz_t()); // gcd(0, q) = q
    out.b = out.gamma / g;
    out.q_i = Int(qz / g).get_ui();
    return out;
}

} // namespace cubicpair
