#include "cubicpair/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numbers>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "cubicpair/arrangement.hpp"
#include "cubicpair/gauss_sum.hpp"
#include "cubicpair/local_counting.hpp"
#include "cubicpair/mgood.hpp"
#include "cubicpair/numeric.hpp"
#include "cubicpair/optimize.hpp"
#include "cubicpair/primes.hpp"
#include "cubicpair/probability.hpp"
#include "cubicpair/singular_series.hpp"

namespace cubicpair {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Rat rat_from_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s, 10));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Int num(digits, 10);
    Int den = int_pow(Int(10), static_cast<unsigned long>(s.size() - dot - 1));
    Rat r = Rat(num) / Rat(den);
    r.canonicalize();
    return r;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t range) {
    std::uint64_t limit = range * (UINT64_MAX / range);
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % range;
}

long draw_in(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

FormPair random_pair(std::mt19937_64& rng, std::size_t n, long box) {
    while (true) {
        std::vector<Int> c(n), d(n);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            long ci = draw_in(rng, -box, box), di = draw_in(rng, -box, box);
            if (ci == 0 && di == 0) {
                ok = false;
                break;
            }
            c[i] = ci;
            d[i] = di;
        }
        if (ok) return FormPair::from_columns(std::move(c), std::move(d));
    }
}

FormPair random_rank2_pair(std::mt19937_64& rng, std::size_t n, long box,
                           std::uint64_t p) {
    while (true) {
        FormPair fp = random_pair(rng, n, box);
        if (matrix_rank_mod_p(fp, p) == 2) return fp;
    }
}

struct Ctx {
    std::vector<CriterionResult> results;
    std::ostream* progress = nullptr;

    void run(int id, const std::string& name, double budget_ms,
             const std::function<bool(std::string&)>& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.budget_ms = budget_ms;
        auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        r.ms = ms_since(t0);
        if (budget_ms > 0 && r.ms > budget_ms) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        r.pass = ok;
        r.detail = detail;
        if (progress) {
            std::ostringstream line;
            line << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name;
            if (!r.detail.empty()) line << "  -- " << r.detail;
            line << "  (" << static_cast<long>(r.ms) << " ms, budget "
                 << static_cast<long>(r.budget_ms) << " ms)";
            (*progress) << line.str() << std::endl;
        }
        results.push_back(std::move(r));
    }
};

// The instance matrix shared by the oracle-equivalence and partial-sum
// criteria: two coefficient samples per n, all p, k, and DP-supported
// variants.
struct Instance {
    FormPair pair;
    std::uint64_t p;
    unsigned k;
    Variant variant;
};

std::vector<Instance> build_instance_matrix() {
    std::vector<Instance> out;
    std::mt19937_64 rng(0xC0FFEE01);
    for (std::size_t n : {2u, 3u, 4u}) {
        for (int sample = 0; sample < 2; ++sample) {
            FormPair fp = random_pair(rng, n, 6);
            for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
                for (unsigned k : {1u, 2u}) {
                    std::vector<Variant> variants{Variant::all(), Variant::non_zero_all()};
                    for (std::size_t i = 0; i < n; ++i)
                        variants.push_back(Variant::fix_zero(i));
                    for (const auto& v : variants) out.push_back({fp, p, k, v});
                }
            }
        }
    }
    return out;
}

} // namespace

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
    Ctx ctx;
    ctx.progress = progress;

    ctx.run(1, "prob3 renders 0.99951 at 5 decimals", 1.0, [](std::string& detail) {
        Rat v = prob3();
        std::string s = render_decimal(v, 5);
        detail = "prob3 = " + s;
        return s == "0.99951";
    });

    ctx.run(2, "prob2(2) = 0.969978; finite product x tail >= 0.969976831011652 at 15 digits",
            1000.0, [](std::string& detail) {
        std::string s2 = render_decimal(prob2_at(2), 6);
        Rat finite(1);
        PrimeList plist = primes_up_to(540);
        for (std::size_t i = 0; i < plist.size(); ++i)
            if (plist.mod3[i] == 2) finite *= prob2_at(plist.primes[i]);
        Rat lower = finite * tail_enclosure(Int(32767), 541).lo;
        std::string s15 = render_decimal(lower, 15);
        detail = "prob2(2) = " + s2 + ", lower bound = " + s15;
        bool ok2 = s2 == "0.969978";
        bool ok15 = rat_from_decimal(s15) >= rat_from_decimal("0.969976831011652");
        return ok2 && ok15;
    });

    ctx.run(3, "prob1(7) = 0.99990129 at 8 decimals; two exact routes agree", 1000.0,
            [](std::string& detail) {
        Rat a = prob1_at(7), b = prob1_at_gf(7);
        std::string s = render_decimal(a, 8);
        detail = "prob1(7) = " + s + (a == b ? ", routes equal" : ", routes DIFFER");
        return s == "0.99990129" && a == b;
    });

    ctx.run(4, "M-good probability interval rounds to [0.9694, 0.9700]", 5000.0,
            [](std::string& detail) {
        ProbabilityReport rep = prob_mgood_interval();
        std::string lo = render_decimal(rep.lower, 4), hi = render_decimal(rep.upper, 4);
        detail = "[" + lo + ", " + hi + "], prob1_lower = " +
                 render_decimal(rep.prob1_lower, 6);
        return lo == "0.9694" && hi == "0.9700" && rep.lower <= rep.upper &&
               rep.prob1_lower >= Rat(9999) / Rat(10000);
    });

    ctx.run(5, "optimizer: delta = 566/34905, exponent 2327, lambda 2328, certified",
            1000.0, [](std::string& detail) {
        auto cs = build_constraints();
        auto res = solve_minmax(cs, Rat(0), Rat(1) / Rat(30));
        bool delta_ok = res.delta_star == Rat(566) / Rat(34905);
        bool opt_ok = res.optimal_exponent == 2327;
        bool active_ok = res.active.size() == 2 &&
                         std::find(res.active.begin(), res.active.end(), "566/(15d)") !=
                             res.active.end() &&
                         std::find(res.active.begin(), res.active.end(), "1195/(1-30d)") !=
                             res.active.end();
        bool lambda_ok = res.lambda_exponent == 2328;
        bool cert = certify(cs, res, 10000);
        detail = "delta = " + rat_string(res.delta_star) +
                 ", exponent = " + rat_string(res.optimal_exponent) +
                 ", lambda = " + std::to_string(res.lambda_exponent) +
                 (cert ? ", certificate ok" : ", certificate FAILED");
        return delta_ok && opt_ok && active_ok && lambda_ok && cert;
    });

    ctx.run(6, "five-variable system mod 7 has exactly one solution", 1000.0,
            [](std::string& detail) {
        FormPair fp = FormPair::from_columns({1, 0, 2, 4, 6}, {0, 1, 2, 2, 2});
        Int v = rho_bruteforce(fp, 7, 1, Variant::all()).value;
        detail = "rho(7) = " + v.get_str() + " over 16807 points";
        return v == 1;
    });

    ctx.run(7, "mod-9 sweep over distinct-ratio coefficient triples: no failures",
            60000.0, [](std::string& detail) {
        Mod9Report rep = verify_mod9_lemma();
        detail = std::to_string(rep.tuples_checked) + " tuples, " +
                 std::to_string(rep.failures) + " failures";
        return rep.failures == 0 && rep.tuples_checked > 0;
    });

    // Criteria 8 and 9 share the fixed instance matrix.
    auto instances = build_instance_matrix();

    ctx.run(8, "oracle equivalence rho_dp == rho_bruteforce on the instance matrix",
            120000.0, [&](std::string& detail) {
        std::size_t mismatches = 0;
        for (const auto& inst : instances) {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < inst.k; ++i) q *= inst.p;
            Int dp = rho_dp(inst.pair, q, inst.variant).value;
            Int bf = rho_bruteforce(inst.pair, inst.p, inst.k, inst.variant).value;
            if (dp != bf) ++mismatches;
        }
        detail = std::to_string(instances.size()) + " instances, " +
                 std::to_string(mismatches) + " mismatches";
        return instances.size() >= 200 && mismatches == 0;
    });

    ctx.run(9, "partial-sum identity sum A(p^i) = p^{-(n-2)k} rho(p^k)", 0.0,
            [&](std::string& detail) {
        std::size_t checked = 0, failures = 0;
        for (const auto& inst : instances) {
            if (inst.variant.kind != Variant::Kind::All) continue; // identity is per (pair,p,k)
            ++checked;
            std::uint64_t q = 1;
            for (unsigned i = 0; i < inst.k; ++i) q *= inst.p;
            Rat sum(0);
            for (unsigned i = 0; i <= inst.k; ++i) sum += a_of_prime_power(inst.pair, inst.p, i);
            long e = static_cast<long>(inst.pair.n()) - 2;
            Rat rhs = Rat(rho_dp(inst.pair, q, Variant::all()).value) /
                      rat_pow(Rat(Int(inst.p)), e * static_cast<long>(inst.k));
            if (sum != rhs) ++failures;
        }
        detail = std::to_string(checked) + " identities, " + std::to_string(failures) +
                 " failures";
        return checked > 0 && failures == 0;
    });

    ctx.run(10, "A(q) multiplicativity on 50 coprime pairs; complex route within 1e-6",
            0.0, [](std::string& detail) {
        FormPair fp = FormPair::from_columns({1, 1, 1}, {0, 1, 2});
        std::size_t pairs = 0, failures = 0;
        for (std::uint64_t q1 = 2; q1 <= 30 && pairs < 50; ++q1) {
            for (std::uint64_t q2 = q1 + 1; q2 <= 60 && pairs < 50; ++q2) {
                if (std::gcd(q1, q2) != 1 || q1 * q2 > 500) continue;
                ++pairs;
                if (a_of_q(fp, q1 * q2) != a_of_q(fp, q1) * a_of_q(fp, q2)) ++failures;
            }
        }
        std::size_t complex_checked = 0, complex_failures = 0;
        for (std::uint64_t q = 1; q <= 30; ++q) {
            ++complex_checked;
            auto direct = a_of_q_direct(fp, q);
            double exact = a_of_q(fp, q).get_d();
            if (std::abs(direct.real() - exact) > 1e-6 || std::abs(direct.imag()) > 1e-6)
                ++complex_failures;
        }
        detail = std::to_string(pairs) + " coprime pairs, " + std::to_string(failures) +
                 " failures; " + std::to_string(complex_checked) + " complex checks, " +
                 std::to_string(complex_failures) + " off";
        return pairs >= 50 && failures == 0 && complex_failures == 0;
    });

    ctx.run(11, "lifting counts: exactly p^{n-2} extensions (p=5,7); mod-27 lifts exist (p=3)",
            60000.0, [](std::string& detail) {
        std::mt19937_64 rng(0xC0FFEE02);
        std::size_t bad = 0, total_qualifying = 0;
        for (std::uint64_t p : {5u, 7u}) {
            for (int t = 0; t < 20; ++t) {
                FormPair fp = random_rank2_pair(rng, 3, 10, p);
                auto rep = verify_lifting_count(fp, p, 1);
                total_qualifying += rep.qualifying;
                if (!rep.all_exact || rep.expected_extensions != Int(p)) ++bad;
            }
        }
        std::size_t bad3 = 0, qualifying3 = 0;
        for (int t = 0; t < 20; ++t) {
            // most 3-column systems carry no qualifying mod-9 base at all;
            // resample until one does so the check is not vacuous
            FormPair fp = random_rank2_pair(rng, 3, 10, 3);
            while (rho_bruteforce(fp, 3, 2, Variant::pair_witness()).value == 0)
                fp = random_rank2_pair(rng, 3, 10, 3);
            auto rep = verify_lifting_count(fp, 3, 2);
            qualifying3 += rep.qualifying;
            if (!rep.all_liftable) ++bad3;
        }
        detail = std::to_string(total_qualifying) + " qualifying bases (p=5,7), " +
                 std::to_string(bad) + " bad; " + std::to_string(qualifying3) +
                 " qualifying mod-9 bases, " + std::to_string(bad3) + " unliftable";
        return bad == 0 && bad3 == 0 && total_qualifying > 0 && qualifying3 > 0;
    });

    ctx.run(12, "Gauss-sum properties: S(0,q)=q, vanishing at p=2 mod 3, Weil bound, S(1,9)",
            0.0, [](std::string& detail) {
        int failures = 0;
        for (std::uint64_t q = 1; q <= 50; ++q) {
            auto s = gauss_sum(Int(0), q);
            if (std::abs(s.value.real() - static_cast<double>(q)) > s.error_bound ||
                std::abs(s.value.imag()) > s.error_bound)
                ++failures;
        }
        PrimeList plist = primes_up_to(200);
        for (std::size_t i = 0; i < plist.size(); ++i) {
            std::uint64_t p = plist.primes[i];
            for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 4); ++a) {
                auto s = gauss_sum(Int(a), p);
                if (plist.mod3[i] == 2 && std::abs(s.value) > 1e-9) ++failures;
                if (std::abs(s.value) > 2.0 * std::sqrt(static_cast<double>(p)) + 1e-6)
                    ++failures;
            }
        }
        double expected = 3.0 * (1.0 + 2.0 * std::cos(2.0 * std::numbers::pi / 9.0));
        auto s19 = gauss_sum(Int(1), 9);
        if (std::abs(std::abs(s19.value) - expected) > 1e-9) ++failures;
        detail = failures == 0 ? "all properties hold" : std::to_string(failures) + " failures";
        return failures == 0;
    });

    ctx.run(13, "Monte Carlo coverage within 3 sigma (I at 7; II at 2, 5; III at 3)",
            0.0, [](std::string& detail) {
        struct Case {
            std::uint64_t p;
            Condition cond;
        };
        const Case cases[] = {{7, Condition::I},
                              {2, Condition::II},
                              {5, Condition::II},
                              {3, Condition::III}};
        const std::uint64_t seed = 0xC0FFEE03;
        std::ostringstream d;
        bool all_ok = true;
        for (const auto& cse : cases) {
            auto mc = monte_carlo_condition(cse.p, cse.cond, 1'000'000, seed);
            if (!mc.within_3sigma) // one retry with a fresh seed
                mc = monte_carlo_condition(cse.p, cse.cond, 1'000'000, seed + 1);
            all_ok &= mc.within_3sigma;
            d << condition_name(cse.cond) << "@" << cse.p << ": " << mc.frequency
              << (mc.within_3sigma ? " ok; " : " OUT; ");
        }
        detail = d.str();
        return all_ok;
    });

    ctx.run(14, "local densities at p in {7,13,19,31} over 100 random M-good pairs",
            300000.0, [&](std::string& detail) {
        std::mt19937_64 rng(0xC0FFEE04);
        const std::uint64_t primes[] = {7, 13, 19, 31};
        std::map<std::uint64_t, std::vector<double>> deviations;
        std::size_t bad = 0;
        for (int t = 0; t < 100; ++t) {
            FormPair fp = random_pair(rng, 16, 100);
            while (!check_mgood(fp).is_mgood) fp = random_pair(rng, 16, 100);
            for (std::uint64_t p : primes) {
                Int rho = rho_dp(fp, p, Variant::all()).value;
                Int rho_nz = rho_dp(fp, p, Variant::non_zero_all()).value;
                if (rho < 1 || rho_nz <= 0) ++bad;
                Rat dev = Rat(rho) / Rat(int_pow(Int(p), 14)) - 1;
                deviations[p].push_back(dev.get_d());
            }
        }
        std::ostringstream d;
        d << (bad == 0 ? "all rho >= 1 and rho_nz > 0; " : std::to_string(bad) + " bad; ");
        d << "rho(p)/p^14 - 1 (min/med/max):";
        for (std::uint64_t p : primes) {
            auto& v = deviations[p];
            std::sort(v.begin(), v.end());
            d << " p=" << p << " [" << v.front() << ", " << v[v.size() / 2] << ", "
              << v.back() << "]";
        }
        if (ctx.progress) (*ctx.progress) << "  density report: " << d.str() << std::endl;
        detail = d.str();
        return bad == 0;
    });

    return ctx.results;
}

} // namespace cubicpair
