#include "cubicpair/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cubicpair/projective.hpp"

namespace cubicpair {

namespace {

void require_16(const FormPair& pair, const char* who) {
    if (pair.n() != 16)
        throw std::invalid_argument(std::string(who) + ": requires n = 16");
}

// Classes ordered by their smallest column index (the deterministic order all
// arrangement decisions use).
std::vector<std::vector<std::size_t>> classes_by_first_index(const FormPair& pair) {
    std::vector<std::vector<std::size_t>> classes;
    for (const auto& [ratio, indices] : ratio_classes(pair)) classes.push_back(indices);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

Int sup_norm(const std::vector<Int>& v) {
    Int m = 0;
    for (const auto& x : v) {
        Int a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

} // namespace

std::optional<HeavyRatio> detect_heavy_ratio(const FormPair& pair) {
    require_16(pair, "detect_heavy_ratio");
    const auto classes = ratio_classes(pair);
    const std::vector<std::size_t>* best = nullptr;
    const RationalRatio* best_ratio = nullptr;
    for (const auto& [ratio, indices] : classes) {
        if (indices.size() < 7) continue;
        if (best == nullptr || indices.front() < best->front()) {
            best = &indices;
            best_ratio = &ratio;
        }
    }
    if (best == nullptr) return std::nullopt;
    return HeavyRatio{*best_ratio, *best};
}

const char* b_pattern_symbols(BPattern p) {
    switch (p) {
        case BPattern::PairPairSingleSingle: return "r_a r_b r_a r_b r_c r_d";
        case BPattern::PairPairPair: return "r_a r_b r_a r_b r_c r_c";
        case BPattern::SinglesThenPair: return "r_a r_b r_c r_d r_e r_e";
        case BPattern::AllDistinct: return "r_a r_b r_c r_d r_e r_f";
    }
    return "?";
}

PartitionAB partition_ab(const FormPair& pair) {
    require_16(pair, "partition_ab");
    auto classes = classes_by_first_index(pair);
    for (const auto& cls : classes)
        if (cls.size() > 6)
            throw std::invalid_argument(
                "partition_ab: a ratio is repeated more than 6 times; "
                "use the heavy-ratio route (detect_heavy_ratio)");

    // Per-class B-quota b_i with: b_i <= 2, class remainder <= 4 in A,
    // sum b_i = 6, at least 3 classes contributing. Backtracking, trying the
    // larger quota first; class order is deterministic, so the result is too.
    const std::size_t k = classes.size();
    std::vector<unsigned> quota(k, 0);
    std::vector<unsigned> lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
        unsigned m = static_cast<unsigned>(classes[i].size());
        hi[i] = std::min(2u, m);
        lo[i] = m > 4 ? m - 4 : 0;
    }
    bool found = false;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned used) {
        if (found) return;
        if (idx == k) {
            if (used != 6) return;
            unsigned contributing = 0;
            for (unsigned b : quota)
                if (b > 0) ++contributing;
            if (contributing >= 3) found = true;
            return;
        }
        for (unsigned b = hi[idx] + 1; b-- > lo[idx];) {
            if (used + b > 6) continue;
            quota[idx] = b;
            rec(idx + 1, used + b);
            if (found) return;
        }
        quota[idx] = 0;
    };
    rec(0, 0);
    if (!found)
        throw std::logic_error("partition_ab: no admissible split exists"); // cannot happen for valid input

    PartitionAB out;
    std::vector<std::vector<std::size_t>> pairs_b;  // classes giving 2 columns
    std::vector<std::size_t> singles_b;             // classes giving 1 column
    for (std::size_t i = 0; i < k; ++i) {
        const auto& cls = classes[i];
        for (std::size_t t = quota[i]; t < cls.size(); ++t)
            out.a_indices.push_back(cls[t]);
        if (quota[i] == 2)
            pairs_b.push_back({cls[0], cls[1]});
        else if (quota[i] == 1)
            singles_b.push_back(cls[0]);
    }
    std::sort(out.a_indices.begin(), out.a_indices.end());

    auto& b = out.b_indices;
    if (pairs_b.size() == 3) {
        out.pattern = BPattern::PairPairPair;
        b = {pairs_b[0][0], pairs_b[1][0], pairs_b[0][1], pairs_b[1][1],
             pairs_b[2][0], pairs_b[2][1]};
    } else if (pairs_b.size() == 2) {
        out.pattern = BPattern::PairPairSingleSingle;
        b = {pairs_b[0][0], pairs_b[1][0], pairs_b[0][1], pairs_b[1][1],
             singles_b[0], singles_b[1]};
    } else if (pairs_b.size() == 1) {
        out.pattern = BPattern::SinglesThenPair;
        b = {singles_b[0], singles_b[1], singles_b[2], singles_b[3],
             pairs_b[0][0], pairs_b[0][1]};
    } else {
        out.pattern = BPattern::AllDistinct;
        b = {singles_b[0], singles_b[1], singles_b[2],
             singles_b[3], singles_b[4], singles_b[5]};
    }

    // Re-verify both partition constraints on the produced split.
    {
        std::map<RationalRatio, std::size_t> in_a, in_b;
        for (std::size_t i : out.a_indices)
            ++in_a[RationalRatio::of_column(pair.c(i), pair.d(i))];
        for (std::size_t i : out.b_indices)
            ++in_b[RationalRatio::of_column(pair.c(i), pair.d(i))];
        for (const auto& [r, cnt] : in_a)
            if (cnt > 4) throw std::logic_error("partition_ab: A-side constraint violated");
        if (in_b.size() < 3) throw std::logic_error("partition_ab: B-side needs 3 ratios");
        for (const auto& [r, cnt] : in_b)
            if (cnt > 2) throw std::logic_error("partition_ab: B-side multiplicity violated");
    }
    return out;
}

EtaVector eta_from_columns(const std::vector<Int>& c12, const std::vector<Int>& d12,
                           const Int& max_coeff) {
    if (c12.size() != 12 || d12.size() != 12)
        throw std::invalid_argument("eta_from_columns: needs exactly 12 columns");
    Int det = c12[10] * d12[11] - c12[11] * d12[10];
    if (det == 0)
        throw std::invalid_argument(
            "eta_from_columns: columns 11 and 12 are parallel (zero determinant)");

    // Assignments x_1..x_10 in {1,2}, walked by (#twos, then bit order).
    for (unsigned twos = 0; twos <= 10; ++twos) {
        for (unsigned mask = 0; mask < (1u << 10); ++mask) {
            if (static_cast<unsigned>(std::popcount(mask)) != twos) continue;
            Int n1 = 0, n2 = 0;
            for (unsigned i = 0; i < 10; ++i) {
                int x = (mask >> i & 1u) ? 2 : 1;
                n1 -= c12[i] * x;
                n2 -= d12[i] * x;
            }
            Rat x11 = Rat(n1 * d12[11] - n2 * c12[11]) / Rat(det);
            Rat x12 = Rat(c12[10] * n2 - d12[10] * n1) / Rat(det);
            if (x11 == 0 || x12 == 0) continue;

            EtaVector out;
            out.eta.resize(12);
            for (unsigned i = 0; i < 10; ++i)
                out.eta[i] = Rat((mask >> i & 1u) ? 2 : 1);
            out.eta[10] = x11;
            out.eta[11] = x12;
            for (unsigned i = 10; i < 12; ++i) {
                if (out.eta[i] < 0) {
                    out.eta[i] = -out.eta[i];
                    out.sign_flips.push_back(i);
                }
            }
            // Exact zero check with the flipped signs.
            Rat sc(0), sd(0);
            for (unsigned i = 0; i < 12; ++i) {
                bool flip = std::find(out.sign_flips.begin(), out.sign_flips.end(), i) !=
                            out.sign_flips.end();
                Rat ci = Rat(flip ? Int(-c12[i]) : c12[i]);
                Rat di = Rat(flip ? Int(-d12[i]) : d12[i]);
                sc += ci * out.eta[i];
                sd += di * out.eta[i];
            }
            if (sc != 0 || sd != 0)
                throw std::logic_error("eta_from_columns: exact zero sums violated");

            Int m2 = max_coeff * max_coeff;
            out.lower_bound = Rat(1) / Rat(4 * m2);
            out.upper_bound = Rat(4 * m2);
            out.bounds_certified = true;
            for (const auto& e : out.eta)
                if (e < out.lower_bound || e > out.upper_bound) out.bounds_certified = false;
            return out;
        }
    }
    throw std::invalid_argument(
        "eta_from_columns: no assignment in {1,2}^10 yields nonzero x_11, x_12");
}

EtaVector eta_vector(const FormPair& pair, const PartitionAB& partition) {
    require_16(pair, "eta_vector");
    if (partition.a_indices.size() != 10 || partition.b_indices.size() != 6)
        throw std::invalid_argument("eta_vector: malformed partition");
    std::vector<std::size_t> order(partition.a_indices);
    order.push_back(partition.b_indices[0]);
    order.push_back(partition.b_indices[1]);
    std::vector<Int> c12, d12;
    for (std::size_t i : order) {
        c12.push_back(pair.c(i));
        d12.push_back(pair.d(i));
    }
    EtaVector out = eta_from_columns(c12, d12, pair.max_coeff());
    out.column_order = std::move(order);
    return out;
}

namespace {

// Sign s in {-1,0,+1} with a = s*b (mod 3) componentwise, if any.
std::optional<int> reduction_sign(const std::vector<Int>& a, const std::vector<Int>& b) {
    int s = -2; // undetermined
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t br = mod_u64(b[i], 3);
        std::uint64_t ar = mod_u64(a[i], 3);
        if (br == 0) {
            if (ar != 0) return std::nullopt;
            continue; // any s works at this coordinate
        }
        // candidate: ar * br^{-1} mod 3, with 2 read as -1
        std::uint64_t cand = (ar * (br == 1 ? 1 : 2)) % 3;
        int si = cand == 0 ? 0 : (cand == 1 ? 1 : -1);
        if (s == -2)
            s = si;
        else if (s != si)
            return std::nullopt;
    }
    if (s == -2) s = 0; // b = 0 mod 3 everywhere and a too
    return s;
}

bool is_zero_vector(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

ReductionTrace rank1_mod3_reduce(const FormPair& pair) {
    auto classes = ratios_mod_p(pair, 3);
    std::map<ProjectiveRatio, std::size_t> distinct;
    for (const auto& cl : classes)
        if (cl.kind != ProjectiveRatio::Kind::BothZero) ++distinct[cl];
    if (distinct.size() >= 2)
        throw std::invalid_argument(
            "rank1_mod3_reduce: " + std::to_string(distinct.size()) +
            " distinct ratio classes mod 3 (needs at most 1)");

    ReductionTrace trace;
    std::array<std::vector<Int>, 2> rows = {pair.c(), pair.d()};

    while (!is_zero_vector(rows[0]) && !is_zero_vector(rows[1])) {
        // Prefer shrinking the larger row; fall back to the other one.
        int first = sup_norm(rows[0]) >= sup_norm(rows[1]) ? 0 : 1;
        bool stepped = false;
        for (int attempt = 0; attempt < 2 && !stepped; ++attempt) {
            int target = attempt == 0 ? first : 1 - first;
            auto s = reduction_sign(rows[target], rows[1 - target]);
            if (!s) continue;
            std::vector<Int> r(rows[target].size());
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] = (rows[target][i] - Int(*s) * rows[1 - target][i]) / 3;
            // contraction invariant: |r| <= (|row| + |other|)/3, which is what
            // forces termination
            if (3 * sup_norm(r) > sup_norm(rows[0]) + sup_norm(rows[1]))
                throw std::logic_error("rank1_mod3_reduce: contraction violated");
            trace.steps.push_back({target, *s, r});
            rows[target] = std::move(r);
            stepped = true;
        }
        if (!stepped) break; // no legal contraction left
    }

    trace.success = is_zero_vector(rows[0]) || is_zero_vector(rows[1]);
    trace.final_rows = rows;
    return trace;
}

} // namespace cubicpair
