#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubicpair/form_pair.hpp"
#include "cubicpair/numeric.hpp"

namespace cubicpair {

// Class of a column (c_i, d_i) in P^1(F_p), plus a separate class for columns
// that vanish mod p. Finite(r) holds r = c*d^{-1} with d a unit; Infinity is
// c a unit, d = 0. Two non-BothZero columns coincide iff c_i d_j - c_j d_i = 0
// mod p. BothZero is kept distinct here; how it merges into parallel tallies
// is the M-good checker's policy.
struct ProjectiveRatio {
    enum class Kind { Finite, Infinity, BothZero };

    Kind kind = Kind::BothZero;
    std::uint64_t residue = 0; // meaningful only for Finite

    static ProjectiveRatio finite(std::uint64_t r) { return {Kind::Finite, r}; }
    static ProjectiveRatio infinity() { return {Kind::Infinity, 0}; }
    static ProjectiveRatio both_zero() { return {Kind::BothZero, 0}; }

    // From residues 0 <= cr, dr < p.
    static ProjectiveRatio classify(std::uint64_t cr, std::uint64_t dr, std::uint64_t p);

    bool operator==(const ProjectiveRatio& o) const {
        return kind == o.kind && (kind != Kind::Finite || residue == o.residue);
    }
    bool operator<(const ProjectiveRatio& o) const {
        if (kind != o.kind) return kind < o.kind;
        return kind == Kind::Finite && residue < o.residue;
    }

    std::string str() const;
};

// One class per column. p must be prime.
std::vector<ProjectiveRatio> ratios_mod_p(const FormPair& pair, std::uint64_t p);

} // namespace cubicpair
