#include "cubicpair/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubicpair {

namespace {

Int sup_norm_of(const std::vector<Int>& x) {
    Int m = 0;
    for (const auto& v : x) {
        Int a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Tracks the best candidate by (sup_norm, lexicographic order).
struct Best {
    std::optional<std::vector<Int>> solution;
    Int sup;

    bool offer(std::vector<Int> x) {
        Int s = sup_norm_of(x);
        if (!solution || s < sup || (s == sup && lex_less(x, *solution))) {
            solution = std::move(x);
            sup = s;
            return true;
        }
        return false;
    }
};

// All |support|-tuples with entries in [-bound, bound], lexicographic.
template <typename Fn>
void enumerate_box(std::size_t dims, long bound, std::vector<long>& cur,
                   std::uint64_t& nodes, Fn&& fn) {
    if (cur.size() == dims) {
        ++nodes;
        fn(cur);
        return;
    }
    for (long v = -bound; v <= bound; ++v) {
        cur.push_back(v);
        enumerate_box(dims, bound, cur, nodes, fn);
        cur.pop_back();
    }
}

Int cube(long v) {
    Int x(v);
    return x * x * x;
}

// Storage guard for the hashed half; beyond this the block bound shrinks.
constexpr double kHashEntryCap = 2e6;

long shrink_bound_for(std::size_t half, long bound) {
    double entries = 1.0;
    long b = bound;
    while (b > 1) {
        entries = 1.0;
        for (std::size_t i = 0; i < half; ++i) entries *= static_cast<double>(2 * b + 1);
        if (entries <= kHashEntryCap) break;
        --b;
    }
    return b;
}

} // namespace

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::EqualRatioPair: return "equal-ratio-pair";
        case Strategy::EqualRatioBlock: return "equal-ratio-block";
        case Strategy::MeetInMiddle: return "meet-in-middle";
    }
    return "?";
}

bool verify_solution(const FormPair& pair, const std::vector<Int>& x) {
    if (x.size() != pair.n())
        throw std::invalid_argument("verify_solution: vector length mismatch");
    auto [f, g] = pair.evaluate(x);
    if (f != 0 || g != 0) return false;
    return std::any_of(x.begin(), x.end(), [](const Int& v) { return v != 0; });
}

SearchResult search_equal_ratio(const FormPair& pair, long bound) {
    if (bound <= 0) throw std::invalid_argument("search_equal_ratio: bound must be >= 1");
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& [ratio, indices] : ratio_classes(pair))
        if (indices.size() >= 2) blocks.push_back(indices);
    if (blocks.empty())
        throw std::invalid_argument(
            "search_equal_ratio: no ratio class of multiplicity >= 2");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    SearchResult res;
    res.strategy = Strategy::EqualRatioPair;
    Best best;

    for (const auto& block : blocks) {
        // On an equal-ratio block the two forms are proportional; work with
        // whichever row is nonzero there.
        const std::vector<Int>& w =
            pair.c(block.front()) != 0 ? pair.c() : pair.d();

        // Two-column cancellations w_i a^3 = -+ w_j b^3.
        for (std::size_t bi = 0; bi < block.size(); ++bi) {
            for (std::size_t bj = bi + 1; bj < block.size(); ++bj) {
                std::size_t i = block[bi], j = block[bj];
                for (long a = 1; a <= bound; ++a) {
                    Int lhs = w[i] * cube(a);
                    for (long b = 1; b <= bound; ++b) {
                        ++res.nodes_explored;
                        Int rhs = w[j] * cube(b);
                        long signed_b = 0;
                        if (lhs + rhs == 0)
                            signed_b = b;
                        else if (lhs - rhs == 0)
                            signed_b = -b;
                        else
                            continue;
                        std::vector<Int> x(pair.n(), Int(0));
                        x[i] = a;
                        x[j] = signed_b;
                        if (!verify_solution(pair, x))
                            throw std::logic_error("search_equal_ratio: bad pair candidate");
                        if (best.offer(std::move(x)))
                            res.strategy = Strategy::EqualRatioPair;
                    }
                }
            }
        }

        // Blocks of 3..7 columns via meet-in-the-middle on the single form.
        std::size_t s = std::min<std::size_t>(block.size(), 7);
        if (s < 3) continue;
        std::vector<std::size_t> idx(block.begin(), block.begin() + s);
        std::size_t half = (s + 1) / 2;
        long b_blk = shrink_bound_for(half, bound);

        std::map<Int, std::vector<long>> table; // value -> best left assignment
        std::vector<long> cur;
        enumerate_box(half, b_blk, cur, res.nodes_explored, [&](const std::vector<long>& left) {
            Int v(0);
            for (std::size_t t = 0; t < half; ++t) v += w[idx[t]] * cube(left[t]);
            auto it = table.find(v);
            if (it == table.end()) {
                table.emplace(v, left);
            } else {
                long cur_sup = 0, new_sup = 0;
                for (long u : it->second) cur_sup = std::max(cur_sup, std::labs(u));
                for (long u : left) new_sup = std::max(new_sup, std::labs(u));
                if (new_sup < cur_sup) it->second = left;
            }
        });
        cur.clear();
        bool found_block = false;
        enumerate_box(s - half, b_blk, cur, res.nodes_explored, [&](const std::vector<long>& right) {
            Int v(0);
            for (std::size_t t = 0; t < s - half; ++t)
                v += w[idx[half + t]] * cube(right[t]);
            auto it = table.find(-v);
            if (it == table.end()) return;
            std::vector<Int> x(pair.n(), Int(0));
            bool nontrivial = false;
            for (std::size_t t = 0; t < half; ++t) {
                x[idx[t]] = it->second[t];
                nontrivial |= it->second[t] != 0;
            }
            for (std::size_t t = 0; t < s - half; ++t) {
                x[idx[half + t]] = right[t];
                nontrivial |= right[t] != 0;
            }
            if (!nontrivial) return;
            if (!verify_solution(pair, x))
                throw std::logic_error("search_equal_ratio: bad block candidate");
            if (best.offer(std::move(x))) found_block = true;
        });
        if (found_block) res.strategy = Strategy::EqualRatioBlock;
    }

    res.solution = best.solution;
    if (res.solution) res.sup_norm = best.sup;
    return res;
}

SearchResult search_meet_in_middle(const FormPair& pair,
                                   const std::vector<std::size_t>& support,
                                   long bound) {
    if (bound <= 0)
        throw std::invalid_argument("search_meet_in_middle: bound must be >= 1");
    if (support.empty() || support.size() > 6)
        throw std::invalid_argument("search_meet_in_middle: support size must be 1..6");
    std::vector<std::size_t> idx(support);
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end() || idx.back() >= pair.n())
        throw std::invalid_argument("search_meet_in_middle: bad support indices");

    std::size_t half = (idx.size() + 1) / 2;
    double cost = 1.0;
    for (std::size_t i = 0; i < half; ++i) cost *= static_cast<double>(bound);
    if (cost > 1e8)
        throw std::domain_error(
            "search_meet_in_middle: bound^{ceil(|support|/2)} exceeds the 1e8 cap");

    SearchResult res;
    res.strategy = Strategy::MeetInMiddle;
    Best best;

    std::map<std::pair<Int, Int>, std::vector<long>> table;
    std::vector<long> cur;
    enumerate_box(half, bound, cur, res.nodes_explored, [&](const std::vector<long>& left) {
        Int f(0), g(0);
        for (std::size_t t = 0; t < half; ++t) {
            Int cb = cube(left[t]);
            f += pair.c(idx[t]) * cb;
            g += pair.d(idx[t]) * cb;
        }
        auto key = std::make_pair(f, g);
        auto it = table.find(key);
        if (it == table.end()) {
            table.emplace(key, left);
        } else {
            long cur_sup = 0, new_sup = 0;
            for (long u : it->second) cur_sup = std::max(cur_sup, std::labs(u));
            for (long u : left) new_sup = std::max(new_sup, std::labs(u));
            if (new_sup < cur_sup) it->second = left;
        }
    });
    cur.clear();
    std::size_t rest = idx.size() - half;
    enumerate_box(rest, bound, cur, res.nodes_explored, [&](const std::vector<long>& right) {
        Int f(0), g(0);
        for (std::size_t t = 0; t < rest; ++t) {
            Int cb = cube(right[t]);
            f += pair.c(idx[half + t]) * cb;
            g += pair.d(idx[half + t]) * cb;
        }
        auto it = table.find(std::make_pair(Int(-f), Int(-g)));
        if (it == table.end()) return;
        std::vector<Int> x(pair.n(), Int(0));
        bool nontrivial = false;
        for (std::size_t t = 0; t < half; ++t) {
            x[idx[t]] = it->second[t];
            nontrivial |= it->second[t] != 0;
        }
        for (std::size_t t = 0; t < rest; ++t) {
            x[idx[half + t]] = right[t];
            nontrivial |= right[t] != 0;
        }
        if (!nontrivial) return;
        if (!verify_solution(pair, x))
            throw std::logic_error("search_meet_in_middle: hash collision not re-verified");
        best.offer(std::move(x));
    });

    res.solution = best.solution;
    if (res.solution) res.sup_norm = best.sup;
    return res;
}

LambdaProfile lambda_profile(const FormPair& pair, long b_max) {
    if (b_max <= 0) throw std::invalid_argument("lambda_profile: b_max must be >= 1");
    LambdaProfile prof;
    {
        Int m = pair.max_coeff();
        mpz_pow_ui(prof.theorem_bound.get_mpz_t(), m.get_mpz_t(), 2328);
    }

    bool has_repeat = false;
    for (const auto& [ratio, indices] : ratio_classes(pair))
        has_repeat |= indices.size() >= 2;

    std::vector<long> bounds;
    for (long b = 4; b < b_max; b *= 2) bounds.push_back(b);
    bounds.push_back(b_max);

    auto note = [&](const SearchResult& r, const std::string& name, long b) {
        LambdaProfileRow row;
        row.strategy = name;
        row.bound = b;
        row.nodes = r.nodes_explored;
        if (r.solution) {
            row.best_sup_norm = r.sup_norm;
            if (!prof.best_sup_norm || r.sup_norm < *prof.best_sup_norm)
                prof.best_sup_norm = r.sup_norm;
        }
        prof.rows.push_back(std::move(row));
    };

    for (long b : bounds) {
        if (has_repeat) note(search_equal_ratio(pair, b), "equal-ratio", b);

        // Support: the 4 columns of smallest coefficient size, ties by index.
        std::vector<std::size_t> order(pair.n());
        for (std::size_t i = 0; i < pair.n(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            Int mx = std::max(abs(pair.c(x)), abs(pair.d(x)));
            Int my = std::max(abs(pair.c(y)), abs(pair.d(y)));
            return mx < my;
        });
        std::vector<std::size_t> support(
            order.begin(), order.begin() + std::min<std::size_t>(4, pair.n()));
        note(search_meet_in_middle(pair, support, b), "meet-in-middle", b);
    }

    prof.within_theorem_bound =
        prof.best_sup_norm && *prof.best_sup_norm <= prof.theorem_bound;
    return prof;
}

} // namespace cubicpair
