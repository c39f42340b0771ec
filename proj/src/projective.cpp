#include "cubicpair/projective.hpp"

#include <stdexcept>

#include "cubicpair/primes.hpp"

namespace cubicpair {

ProjectiveRatio ProjectiveRatio::classify(std::uint64_t cr, std::uint64_t dr,
                                          std::uint64_t p) {
    if (dr != 0) return finite(mulmod_u64(cr, inv_mod_p(dr, p), p));
    if (cr != 0) return infinity();
    return both_zero();
}

std::string ProjectiveRatio::str() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(residue);
        case Kind::Infinity: return "inf";
        case Kind::BothZero: return "0/0";
    }
    return "?";
}

std::vector<ProjectiveRatio> ratios_mod_p(const FormPair& pair, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("ratios_mod_p: p must be prime");
    std::vector<ProjectiveRatio> out;
    out.reserve(pair.n());
    for (std::size_t i = 0; i < pair.n(); ++i)
        out.push_back(ProjectiveRatio::classify(mod_u64(pair.c(i), p),
                                                mod_u64(pair.d(i), p), p));
    return out;
}

} // namespace cubicpair
