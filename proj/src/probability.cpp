#include "cubicpair/probability.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "cubicpair/parallel.hpp"
#include "cubicpair/primes.hpp"

namespace cubicpair {

RatioDistribution::RatioDistribution(std::uint64_t prime) : p(prime) {
    if (!is_prime(prime)) throw std::invalid_argument("RatioDistribution: p must be prime");
    Int p2 = Int(prime) * Int(prime);
    per_class = Rat(Int(prime) - 1) / Rat(p2);
    both_zero = Rat(1) / Rat(p2);
}

bool RatioDistribution::normalized() const {
    return Rat(Int(p) + 1) * per_class + both_zero == 1;
}

Rat prob3() {
    Int num = Int(6) * int_pow(Int(5), 16) - Int(12) * int_pow(Int(3), 16) + 6;
    return 1 - Rat(num) / Rat(int_pow(Int(9), 16));
}

Rat prob2_complement(std::uint64_t p) {
    if (p % 3 != 2 || !is_prime(p))
        throw std::invalid_argument("prob2_complement: requires prime p = 2 mod 3");
    Int pz(p);
    Int p31 = int_pow(pz, 31);
    Rat one_ratio = Rat(int_pow(pz, 16) + int_pow(pz, 15) - 1) / Rat(p31);
    Int two_num = (pz + 1) * (int_pow(2 * pz - 1, 16) - 2 * int_pow(pz, 16) + 1);
    Rat two_ratios = Rat(two_num) / Rat(2 * p31);
    return one_ratio + two_ratios;
}

Rat prob2_at(std::uint64_t p) { return 1 - prob2_complement(p); }

namespace {

// Ways to distribute m labeled columns over K labeled classes with every
// class size <= cap. Inclusion-exclusion over the set of classes pushed past
// the cap: the j-class intersection count fixes the exact sizes of those j
// fibers (each >= cap+1) and lets the remaining columns avoid them.
Int capped_assignments_ie(unsigned m, unsigned K, unsigned cap) {
    Int total = 0;
    unsigned min_part = cap + 1;
    unsigned jmax = min_part == 0 ? 0 : m / min_part;
    for (unsigned j = 0; j <= jmax && j <= K; ++j) {
        Int g = 0;
        // compositions (m_1,...,m_j), each >= min_part, sum <= m
        std::vector<unsigned> parts(j, 0);
        std::function<void(unsigned, unsigned, Int)> rec =
            [&](unsigned slot, unsigned used, Int multinomial) {
                if (slot == j) {
                    unsigned rest = m - used;
                    Int ways = multinomial;
                    if (K - j == 0) {
                        if (rest != 0) return;
                    } else {
                        ways *= int_pow(Int(K - j), rest);
                    }
                    g += ways;
                    return;
                }
                for (unsigned a = min_part; used + a <= m; ++a)
                    rec(slot + 1, used + a,
                        multinomial * binomial(m - used, a));
            };
        rec(0, 0, Int(1));
        Int term = binomial(K, j) * g;
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

// Same count by a distribute-with-caps sweep over the classes.
Int capped_assignments_dp(unsigned m, unsigned K, unsigned cap) {
    std::vector<Int> dp(m + 1, Int(0));
    dp[0] = 1;
    for (unsigned k = 0; k < K; ++k) {
        std::vector<Int> nd(m + 1, Int(0));
        for (unsigned u = 0; u <= m; ++u) {
            if (dp[u] == 0) continue;
            for (unsigned a = 0; a <= cap && u + a <= m; ++a)
                nd[u + a] += dp[u] * binomial(m - u, a);
        }
        dp = std::move(nd);
    }
    return dp[m];
}

Rat prob1_from_counts(std::uint64_t p, const std::function<Int(unsigned, unsigned, unsigned)>& count) {
    if (p % 3 != 1 || !is_prime(p))
        throw std::invalid_argument("prob1: requires prime p = 1 mod 3");
    if (p > 1000) throw std::domain_error("prob1: p capped at 1000");
    Int pz(p);
    Rat total(0);
    for (unsigned t = 0; t <= 8; ++t) {
        Int n_t = count(16 - t, static_cast<unsigned>(p + 1), 9 - t);
        total += Rat(binomial(16, t) * n_t) / Rat(int_pow(pz - 1, t));
    }
    return Rat(int_pow(pz - 1, 16)) / Rat(int_pow(pz, 32)) * total;
}

} // namespace

Rat prob1_at(std::uint64_t p) {
    return prob1_from_counts(p, capped_assignments_ie);
}

Rat prob1_at_gf(std::uint64_t p) {
    return prob1_from_counts(p, capped_assignments_dp);
}

Rat prob1_complement_bound(std::uint64_t p) {
    return Rat(binomial(16, 10) * (Int(p) + 1)) / Rat(int_pow(Int(p), 10));
}

RatInterval tail_enclosure(const Int& c, std::uint64_t p_cut) {
    if (c < 0) throw std::invalid_argument("tail_enclosure: c must be >= 0");
    if (p_cut == 0) throw std::invalid_argument("tail_enclosure: p_cut must be >= 1");
    Rat x = Rat(c) / Rat(13 * int_pow(Int(p_cut), 13));
    if (x >= 1) throw std::domain_error("tail_enclosure: x must be < 1");
    return RatInterval(1 - x, Rat(1));
}

ProbabilityReport prob_mgood_interval(std::uint64_t prob2_cut,
                                      std::uint64_t prob1_cut) {
    if (prob2_cut < 3 || prob1_cut < 3)
        throw std::invalid_argument("prob_mgood_interval: cuts must be >= 3");
    ProbabilityReport rep;
    rep.prob2_cut = prob2_cut;
    rep.prob1_cut = prob1_cut;
    rep.prob3_value = prob3();
    rep.prob1_at_7 = prob1_at(7);
    rep.prob1_tail = tail_enclosure(Int(9152), rep.prob1_cut);
    rep.prob2_tail = tail_enclosure(Int(32767), rep.prob2_cut);

    Rat finite2(1);
    PrimeList plist = primes_up_to(rep.prob2_cut - 1);
    for (std::size_t i = 0; i < plist.size(); ++i) {
        if (plist.mod3[i] != 2) continue;
        Rat v = prob2_at(plist.primes[i]);
        rep.prob2_per_prime[plist.primes[i]] = v;
        finite2 *= v;
    }

    rep.prob1_lower = rep.prob1_at_7 * rep.prob1_tail.lo;
    rep.prob2_lower = finite2 * rep.prob2_tail.lo;
    rep.lower = rep.prob1_lower * rep.prob2_lower * rep.prob3_value;
    rep.upper = prob2_at(2);
    rep.final_interval = RatInterval(rep.lower, rep.upper);
    return rep;
}

namespace {

// Rejection-free-bias draw in [0, range); avoids the implementation-defined
// std::uniform_int_distribution so results are stable across toolchains.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t range) {
    std::uint64_t limit = range * (UINT64_MAX / range);
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % range;
}

} // namespace

MonteCarloResult monte_carlo_condition(std::uint64_t p, Condition condition,
                                       std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("monte_carlo_condition: trials must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("monte_carlo_condition: p must be prime");

    MonteCarloResult res;
    res.p = p;
    res.condition = condition;
    res.trials = trials;
    res.seed = seed;
    switch (condition) {
        case Condition::I: res.exact = prob1_at(p); break;
        case Condition::II: res.exact = prob2_at(p); break;
        case Condition::III:
            if (p != 3)
                throw std::invalid_argument("monte_carlo_condition: condition III is mod 3");
            res.exact = prob3();
            break;
    }

    // Fixed chunk layout so the tally is independent of the worker count.
    const std::size_t chunks = trials >= 64 ? 64 : 1;
    std::vector<std::uint64_t> hits(chunks, 0);
    run_chunks(chunks, [&](std::size_t chunk) {
        std::uint64_t lo = trials * chunk / chunks;
        std::uint64_t hi = trials * (chunk + 1) / chunks;
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (chunk + 1));
        std::vector<ProjectiveRatio> classes(16);
        std::uint64_t local = 0;
        for (std::uint64_t t = lo; t < hi; ++t) {
            for (int col = 0; col < 16; ++col) {
                std::uint64_t v = draw_below(rng, p * p);
                classes[col] = ProjectiveRatio::classify(v / p, v % p, p);
            }
            bool ok = false;
            switch (condition) {
                case Condition::I: ok = condition_i_of_classes(classes, p).satisfied; break;
                case Condition::II: ok = condition_ii_of_classes(classes, p).satisfied; break;
                case Condition::III: ok = condition_iii_of_classes(classes).satisfied; break;
            }
            if (ok) ++local;
        }
        hits[chunk] = local;
    });

    for (std::uint64_t h : hits) res.successes += h;
    res.frequency = static_cast<double>(res.successes) / static_cast<double>(trials);
    double pd = res.exact.get_d();
    res.sigma = std::sqrt(pd * (1.0 - pd) / static_cast<double>(trials));
    res.within_3sigma = std::fabs(res.frequency - pd) <= 3.0 * res.sigma;
    return res;
}

} // namespace cubicpair
