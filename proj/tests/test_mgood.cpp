#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "cubicpair/mgood.hpp"
#include "cubicpair/primes.hpp"

using namespace cubicpair;

namespace {

FormPair random_pair(std::mt19937_64& rng, std::size_t n, long box) {
    while (true) {
        std::vector<Int> c(n), d(n);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = static_cast<long>(rng() % (2 * box + 1)) - box;
            d[i] = static_cast<long>(rng() % (2 * box + 1)) - box;
            if (c[i] == 0 && d[i] == 0) {
                ok = false;
                break;
            }
        }
        if (ok) return FormPair::from_columns(std::move(c), std::move(d));
    }
}

bool parallel_mod_p(const FormPair& fp, std::size_t i, std::size_t j, std::uint64_t p) {
    return mod_u64(fp.c(i) * fp.d(j) - fp.c(j) * fp.d(i), p) == 0;
}

// Definitional condition I: no 10-subset of columns is pairwise parallel.
bool cond1_definitional(const FormPair& fp, std::uint64_t p) {
    const std::size_t n = fp.n();
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (pick.size() == 10) return true; // found a pairwise-parallel 10-set
        for (std::size_t i = start; i < n; ++i) {
            bool ok = true;
            for (std::size_t j : pick)
                if (!parallel_mod_p(fp, i, j, p)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(i);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return !rec(0);
}

// Definitional condition II: some 3 columns pairwise non-parallel.
bool cond2_definitional(const FormPair& fp, std::uint64_t p) {
    const std::size_t n = fp.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!parallel_mod_p(fp, i, j, p) && !parallel_mod_p(fp, i, k, p) &&
                    !parallel_mod_p(fp, j, k, p))
                    return true;
    return false;
}

} // namespace

TEST_CASE("condition I examples") {
    // 16 columns all parallel mod 7
    std::vector<Int> c(16, Int(1)), d(16, Int(1));
    auto v = check_condition_i(FormPair::from_columns(c, d), 7);
    CHECK(!v.satisfied);
    CHECK(v.parallel_count == 16);

    // spread over 10 classes, max class size 2
    std::vector<Int> c2, d2;
    for (int cls = 0; cls < 10; ++cls) {
        int copies = cls < 6 ? 2 : 1;
        for (int t = 0; t < copies; ++t) {
            c2.push_back(cls);
            d2.push_back(1);
        }
    }
    REQUIRE(c2.size() == 16);
    CHECK(check_condition_i(FormPair::from_columns(c2, d2), 7).satisfied);

    // class of 9 plus one BothZero column tips the tally to 10 at p = 13
    std::vector<Int> c3, d3;
    for (int t = 0; t < 9; ++t) {
        c3.push_back(1);
        d3.push_back(1);
    }
    c3.push_back(13);
    d3.push_back(13); // (0,0) mod 13
    for (int t = 0; t < 6; ++t) {
        c3.push_back(t + 2);
        d3.push_back(1);
    }
    auto v3 = check_condition_i(FormPair::from_columns(c3, d3), 13);
    CHECK(!v3.satisfied);
    CHECK(v3.parallel_count == 10);
    CHECK(v3.both_zero_count == 1);
    // the witness really is a pairwise-parallel set of 10
    {
        FormPair fp = FormPair::from_columns(c3, d3);
        std::vector<std::size_t> members;
        auto cls = ratios_mod_p(fp, 13);
        for (std::size_t i = 0; i < 16; ++i)
            if (cls[i] == *v3.offending_class ||
                cls[i].kind == ProjectiveRatio::Kind::BothZero)
                members.push_back(i);
        CHECK(members.size() == v3.parallel_count);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                CHECK(parallel_mod_p(fp, members[a], members[b], 13));
    }

    CHECK_THROWS_AS(check_condition_i(FormPair::from_columns(c, d), 5),
                    std::invalid_argument);
}

TEST_CASE("condition II examples") {
    // 15 columns in one class + 1 at infinity: only 2 classes mod 5
    std::vector<Int> c(16, Int(3)), d(16, Int(1));
    c[15] = 1;
    d[15] = 5;
    auto v = check_condition_ii(FormPair::from_columns(c, d), 5);
    CHECK(!v.satisfied);
    CHECK(v.distinct_classes == 2);

    // p = 2: Finite(0), Finite(1), Infinity is already the maximum
    std::vector<Int> c2{2, 1, 1}, d2{1, 1, 2};
    for (int t = 0; t < 13; ++t) {
        c2.push_back(1);
        d2.push_back(1);
    }
    CHECK(check_condition_ii(FormPair::from_columns(c2, d2), 2).satisfied);

    // all columns (0,0) mod 5
    std::vector<Int> c3(16, Int(5)), d3(16, Int(10));
    auto v3 = check_condition_ii(FormPair::from_columns(c3, d3), 5);
    CHECK(!v3.satisfied);
    CHECK(v3.distinct_classes == 0);

    CHECK_THROWS_AS(check_condition_ii(FormPair::from_columns(c3, d3), 7),
                    std::invalid_argument);
}

TEST_CASE("condition III examples") {
    std::vector<Int> c(16, Int(1)), d(16, Int(1));
    CHECK(check_condition_iii(FormPair::from_columns(c, d)).satisfied); // one ratio

    std::vector<Int> c2(16, Int(1)), d2(16, Int(1));
    d2[15] = 2; // ratios {1, 2} mod 3: exactly two
    auto v2 = check_condition_iii(FormPair::from_columns(c2, d2));
    CHECK(!v2.satisfied);
    CHECK(v2.distinct_classes == 2);

    std::vector<Int> c3{0, 1, 1}, d3{1, 1, 0};
    for (int t = 0; t < 13; ++t) {
        c3.push_back(1);
        d3.push_back(1);
    }
    CHECK(check_condition_iii(FormPair::from_columns(c3, d3)).satisfied);

    // all-BothZero counts as a single ratio, flagged as the degenerate policy
    std::vector<Int> c4(16, Int(3)), d4(16, Int(6));
    auto v4 = check_condition_iii(FormPair::from_columns(c4, d4));
    CHECK(v4.satisfied);
    CHECK(v4.degenerate_all_both_zero);
}

TEST_CASE("check_mgood examples") {
    // all-ones: M = 1, no primes below M^2 = 1, only condition III applies
    std::vector<Int> ones(16, Int(1));
    auto rep = check_mgood(FormPair::from_columns(ones, ones));
    CHECK(rep.is_mgood);
    CHECK(rep.prime_bound == 1);
    CHECK(rep.failures.empty());

    // last column (1,2): two classes mod 2 fail condition II
    std::vector<Int> d2(16, Int(1));
    d2[15] = 2;
    auto rep2 = check_mgood(FormPair::from_columns(ones, d2));
    CHECK(!rep2.is_mgood);
    bool found_ii_at_2 = false;
    for (const auto& f : rep2.failures)
        if (f.p == 2 && f.condition == Condition::II) found_ii_at_2 = true;
    CHECK(found_ii_at_2);

    // verbose attaches every verdict, sorted by p
    auto rep3 = check_mgood(FormPair::from_columns(ones, d2), true);
    CHECK(!rep3.verdicts.empty());
    for (std::size_t i = 1; i < rep3.verdicts.size(); ++i)
        CHECK(rep3.verdicts[i - 1].p < rep3.verdicts[i].p);
}

TEST_CASE("check_mgood invariant under permutation and sign flips") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        FormPair fp = random_pair(rng, 16, 8);
        auto base = check_mgood(fp);

        std::vector<std::size_t> perm(16);
        for (std::size_t i = 0; i < 16; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Int> pc(16), pd(16);
        for (std::size_t i = 0; i < 16; ++i) {
            long sign = (rng() & 1) ? 1 : -1;
            pc[i] = sign * fp.c(perm[i]);
            pd[i] = sign * fp.d(perm[i]);
        }
        auto mixed = check_mgood(FormPair::from_columns(pc, pd));
        CHECK(base.is_mgood == mixed.is_mgood);
        CHECK(base.failures.size() == mixed.failures.size());
    }
}

TEST_CASE("agreement with the definitional subset/pair checker") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 12; ++trial) {
        FormPair fp = random_pair(rng, 16, 10);
        auto rep = check_mgood(fp, true);
        PrimeList plist = primes_up_to(fp.prime_bound().get_ui());
        bool brute_good = true;
        for (std::size_t i = 0; i < plist.size(); ++i) {
            std::uint64_t p = plist.primes[i];
            if (plist.mod3[i] == 1) {
                bool ours = check_condition_i(fp, p).satisfied;
                CHECK(ours == cond1_definitional(fp, p));
                brute_good &= ours;
            } else if (plist.mod3[i] == 2) {
                bool ours = check_condition_ii(fp, p).satisfied;
                CHECK(ours == cond2_definitional(fp, p));
                brute_good &= ours;
            }
        }
        brute_good &= check_condition_iii(fp).satisfied;
        CHECK(rep.is_mgood == brute_good);
    }
}
