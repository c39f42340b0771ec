#include <doctest.h>

#include <random>

#include "cubicpair/form_pair.hpp"
#include "cubicpair/primes.hpp"
#include "cubicpair/projective.hpp"

using namespace cubicpair;

TEST_CASE("parse JSON pairs") {
    FormPair fp = FormPair::parse(R"({"n":2,"c":[1,1],"d":[2,2]})");
    CHECK(fp.n() == 2);
    CHECK(fp.max_coeff() == 2);

    // the five-variable system with only the trivial zero mod 7
    FormPair five = FormPair::parse(R"({"n":5,"c":[1,0,2,4,6],"d":[0,1,2,2,2]})");
    CHECK(five.n() == 5);
    CHECK(five.max_coeff() == 6);

    CHECK_THROWS_AS(FormPair::parse(R"({"n":1,"c":[0],"d":[0]})"), std::invalid_argument);
    CHECK_THROWS_AS(FormPair::parse(R"({"n":0,"c":[],"d":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(FormPair::parse(R"({"c":[1],"d":[1,2]})"), std::invalid_argument);
    CHECK_THROWS_AS(FormPair::parse("{bad json"), std::invalid_argument);
}

TEST_CASE("parse CSV and big integers") {
    FormPair fp = FormPair::parse_csv("1, 2, 3\n4 5 6\n");
    CHECK(fp.n() == 3);
    CHECK(fp.c(2) == 3);
    CHECK(fp.d(0) == 4);

    // 2^100 survives the string round trip
    Int big = int_pow(Int(2), 100);
    FormPair big_pair =
        FormPair::parse(R"({"n":1,"c":[")" + big.get_str() + R"("],"d":[1]})");
    CHECK(big_pair.c(0) == big);
    FormPair reparsed = FormPair::parse(big_pair.to_json());
    CHECK(reparsed.c(0) == big);
    CHECK(reparsed.max_coeff() == big);
}

TEST_CASE("projective ratios mod p") {
    FormPair fp = FormPair::from_columns({1, 2, 3}, {2, 4, 5});
    auto r = ratios_mod_p(fp, 5);
    CHECK(r[0] == ProjectiveRatio::finite(3)); // 2^{-1} = 3 mod 5
    CHECK(r[1] == ProjectiveRatio::finite(3));
    CHECK(r[2] == ProjectiveRatio::infinity());

    FormPair inf = FormPair::from_columns({1}, {0});
    CHECK(ratios_mod_p(inf, 7)[0] == ProjectiveRatio::infinity());

    FormPair bz = FormPair::from_columns({3}, {6});
    CHECK(ratios_mod_p(bz, 3)[0] == ProjectiveRatio::both_zero());

    CHECK_THROWS_AS(ratios_mod_p(fp, 6), std::invalid_argument);
}

TEST_CASE("rational ratio multiset") {
    FormPair fp = FormPair::from_columns({1, 2, 2}, {2, 4, 5});
    auto ms = ratio_multiset(fp);
    CHECK(ms.size() == 2);
    CHECK(ms[RationalRatio::of_column(1, 2)] == 2);
    CHECK(ms[RationalRatio::of_column(2, 5)] == 1);

    FormPair fp2 = FormPair::from_columns({1, 1}, {1, 2});
    auto ms2 = ratio_multiset(fp2);
    CHECK(ms2[RationalRatio::of_column(1, 1)] == 1);
    CHECK(ms2[RationalRatio::of_column(1, 2)] == 1);

    // 16 equal columns collapse to one class
    std::vector<Int> c(16, Int(3)), d(16, Int(-6));
    auto ms3 = ratio_multiset(FormPair::from_columns(c, d));
    CHECK(ms3.size() == 1);
    CHECK(ms3.begin()->second == 16);
}

TEST_CASE("ratio equality matches the cross-product rule") {
    CHECK(RationalRatio::of_column(2, 4) == RationalRatio::of_column(-3, -6));
    CHECK(RationalRatio::of_column(1, 0) == RationalRatio::of_column(-5, 0));
    CHECK(RationalRatio::of_column(0, 1) == RationalRatio::of_column(0, -7));
    CHECK(!(RationalRatio::of_column(1, 2) == RationalRatio::of_column(2, 1)));
}

TEST_CASE("primes_up_to") {
    auto pl = primes_up_to(10);
    CHECK(pl.primes == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(pl.mod3 == std::vector<int>{2, 0, 2, 1});

    CHECK(primes_up_to(1).primes.empty());

    auto pl36 = primes_up_to(36);
    CHECK(pl36.size() == 11);
    CHECK(pl36.primes.back() == 31);

    CHECK_THROWS_AS(primes_up_to(200'000'000), std::domain_error);
}

TEST_CASE("primes agree with trial division up to 1e4") {
    auto pl = primes_up_to(10'000);
    std::size_t idx = 0;
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        bool composite = false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                composite = true;
                break;
            }
        if (!composite) {
            REQUIRE(idx < pl.size());
            CHECK(pl.primes[idx] == n);
            CHECK(pl.mod3[idx] == static_cast<int>(n % 3));
            ++idx;
        }
    }
    CHECK(idx == pl.size());
}

TEST_CASE("class partition is consistent with the pairwise cross-product test") {
    std::mt19937_64 rng(1234);
    auto draw = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 2 + rng() % 5; // up to 6 columns
            std::vector<Int> c(n), d(n);
            for (std::size_t i = 0; i < n; ++i) {
                do {
                    c[i] = draw(-9, 9);
                    d[i] = draw(-9, 9);
                } while (c[i] == 0 && d[i] == 0);
            }
            FormPair fp = FormPair::from_columns(c, d);
            auto cls = ratios_mod_p(fp, p);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    bool bz = cls[i].kind == ProjectiveRatio::Kind::BothZero ||
                              cls[j].kind == ProjectiveRatio::Kind::BothZero;
                    if (bz) continue;
                    bool cross_zero = mod_u64(c[i] * d[j] - c[j] * d[i], p) == 0;
                    CHECK(cross_zero == (cls[i] == cls[j]));
                }
            }
        }
    }
}

TEST_CASE("ratio multiset invariant under per-column sign flips") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng() % 8;
        std::vector<Int> c(n), d(n), cf(n), df(n);
        for (std::size_t i = 0; i < n; ++i) {
            do {
                c[i] = static_cast<long>(rng() % 19) - 9;
                d[i] = static_cast<long>(rng() % 19) - 9;
            } while (c[i] == 0 && d[i] == 0);
            bool flip = rng() & 1;
            cf[i] = flip ? Int(-c[i]) : c[i];
            df[i] = flip ? Int(-d[i]) : d[i];
        }
        CHECK(ratio_multiset(FormPair::from_columns(c, d)) ==
              ratio_multiset(FormPair::from_columns(cf, df)));
    }
}
