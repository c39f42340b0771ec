#include "cubicpair/singular_series.hpp"

#include <numeric>
#include <stdexcept>

#include "cubicpair/gauss_sum.hpp"
#include "cubicpair/local_counting.hpp"
#include "cubicpair/primes.hpp"

namespace cubicpair {

Rat a_of_prime_power(const FormPair& pair, std::uint64_t p, unsigned k) {
    if (k == 0) return Rat(1);
    long e = static_cast<long>(pair.n()) - 2;
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    Rat head = Rat(rho_dp(pair, pk, Variant::all()).value) /
               Rat(rat_pow(Rat(Int(p)), e * static_cast<long>(k)));
    if (k == 1) return head - 1;
    Rat tail = Rat(rho_dp(pair, pk / p, Variant::all()).value) /
               Rat(rat_pow(Rat(Int(p)), e * static_cast<long>(k - 1)));
    return head - tail;
}

Rat a_of_q(const FormPair& pair, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("a_of_q: q must be >= 1");
    Rat value(1);
    for (const auto& [p, k] : factorize(q)) value *= a_of_prime_power(pair, p, k);
    return value;
}

std::complex<double> a_of_q_direct(const FormPair& pair, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("a_of_q_direct: q must be >= 1");
    // Memoized S(b mod q', q') over the divisors q' of q.
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::complex<double>> memo;
    auto normalized_sum = [&](const ArcDecomposition& dec) {
        std::uint64_t br = mod_u64(dec.b, dec.q_i);
        auto key = std::make_pair(br, dec.q_i);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, gauss_sum(Int(br), dec.q_i).value).first;
        return it->second / static_cast<double>(dec.q_i);
    };
    std::complex<double> total(0.0, 0.0);
    for (std::uint64_t a1 = 1; a1 <= q; ++a1) {
        for (std::uint64_t a2 = 1; a2 <= q; ++a2) {
            if (std::gcd(std::gcd(a1, a2), q) != 1) continue;
            std::complex<double> term(1.0, 0.0);
            for (std::size_t i = 0; i < pair.n(); ++i)
                term *= normalized_sum(arc_decompose(pair, Int(a1), Int(a2), q, i));
            total += term;
        }
    }
    return total;
}

unsigned k_of_p(std::uint64_t p, std::uint64_t limit) {
    if (p < 2) throw std::invalid_argument("k_of_p: p must be >= 2");
    unsigned k = 0;
    std::uint64_t pw = 1;
    while (pw <= limit / p) {
        pw *= p;
        ++k;
    }
    return k;
}

SeriesTruncation truncated_series(const FormPair& pair, std::uint64_t p0) {
    if (p0 == 0) throw std::invalid_argument("truncated_series: P0 must be >= 1");
    SeriesTruncation out;
    out.p0 = p0;

    // A at every prime power <= P0 once; composite q assemble by
    // multiplicativity.
    std::map<std::uint64_t, Rat> prime_power_a; // p^k -> A(p^k)
    PrimeList plist = primes_up_to(p0);
    long e = static_cast<long>(pair.n()) - 2;
    for (std::size_t idx = 0; idx < plist.size(); ++idx) {
        std::uint64_t p = plist.primes[idx];
        unsigned kp = k_of_p(p, p0);
        out.k_map[p] = kp;
        std::uint64_t pw = 1;
        for (unsigned k = 1; k <= kp; ++k) {
            pw *= p;
            prime_power_a[pw] = a_of_prime_power(pair, p, k);
        }
    }

    Rat series(0);
    for (std::uint64_t q = 1; q <= p0; ++q) {
        Rat aq(1);
        for (const auto& [p, k] : factorize(q)) {
            std::uint64_t pw = 1;
            for (unsigned i = 0; i < k; ++i) pw *= p;
            aq *= prime_power_a.at(pw);
        }
        out.a_values[q] = aq;
        series += aq;
    }
    out.truncated_series = series;

    Rat product(1);
    for (std::size_t idx = 0; idx < plist.size(); ++idx) {
        std::uint64_t p = plist.primes[idx];
        unsigned kp = out.k_map.at(p);
        std::uint64_t pw = 1;
        for (unsigned i = 0; i < kp; ++i) pw *= p;
        Rat local = Rat(rho_dp(pair, pw, Variant::all()).value) /
                    rat_pow(Rat(Int(p)), e * static_cast<long>(kp));
        product *= local;
    }
    out.euler_product = product;

    Rat r = out.truncated_series - out.euler_product;
    out.remainder = r < 0 ? Rat(-r) : r;
    out.positive = out.truncated_series > 0;
    return out;
}

} // namespace cubicpair
