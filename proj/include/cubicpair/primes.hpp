#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cubicpair {

// Primes up to `bound`, each tagged with its residue mod 3. The mod-3 tag
// drives the three-way split of every per-prime computation in this library.
struct PrimeList {
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> primes;
    std::vector<int> mod3; // primes[i] % 3

    std::size_t size() const { return primes.size(); }
};

// Sieve of Eratosthenes. Hard feasibility cap at 10^8 (the M^2 ranges this
// library is meant for stay far below it; larger bounds are an input error,
// not something to truncate silently).
PrimeList primes_up_to(std::uint64_t bound);

bool is_prime(std::uint64_t n);

// q = p1^k1 * p2^k2 * ..., ascending primes. q >= 1; q == 1 gives {}.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t q);

} // namespace cubicpair
