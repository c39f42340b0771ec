#include "cubicpair/primes.hpp"

#include <stdexcept>

namespace cubicpair {

namespace {
constexpr std::uint64_t kSieveCap = 100'000'000;
}

PrimeList primes_up_to(std::uint64_t bound) {
    if (bound > kSieveCap)
        throw std::domain_error("primes_up_to: bound exceeds feasibility cap 1e8");
    PrimeList out;
    out.bound = bound;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i * i <= bound; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!composite[i]) {
            out.primes.push_back(i);
            out.mod3.push_back(static_cast<int>(i % 3));
        }
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    // Trial division by 30-wheel candidates; fine for the <= 1e8 range used here.
    static const std::uint64_t wheel[] = {1, 7, 11, 13, 17, 19, 23, 29};
    for (std::uint64_t base = 0;; base += 30) {
        for (std::uint64_t w : wheel) {
            std::uint64_t d = base + w;
            if (d < 7) continue;
            if (d * d > n) return true;
            if (n % d == 0) return false;
        }
    }
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("factorize: q must be >= 1");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= q; p += (p == 2 ? 1 : 2)) {
        if (q % p) continue;
        unsigned k = 0;
        while (q % p == 0) { q /= p; ++k; }
        out.emplace_back(p, k);
    }
    if (q > 1) out.emplace_back(q, 1u);
    return out;
}

} // namespace cubicpair
