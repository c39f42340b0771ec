#include "cubicpair/local_counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubicpair/primes.hpp"
#include "cubicpair/projective.hpp"

namespace cubicpair {

namespace {

std::uint64_t checked_prime_power(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > kEnumerationCap) throw std::domain_error("p^k out of range");
        q *= p;
    }
    return q;
}

// q^n <= cap, computed without overflow.
void check_enumeration_feasible(std::uint64_t q, std::size_t n,
                                std::uint64_t cap = kEnumerationCap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / q)
            throw std::domain_error(
                "enumeration infeasible: p^{kn} exceeds the cap of " +
                std::to_string(cap) + " points");
        total *= q;
    }
}

// Per-variable contribution tables (c_i v^3 mod q, d_i v^3 mod q) over the
// values v the variant allows at position i.
struct ValueTables {
    std::vector<std::vector<std::uint64_t>> fc, gc;
};

ValueTables build_tables(const FormPair& pair, std::uint64_t q, std::uint64_t p,
                         Variant variant) {
    ValueTables t;
    std::size_t n = pair.n();
    t.fc.resize(n);
    t.gc.resize(n);
    std::vector<std::uint64_t> cubes(q);
    for (std::uint64_t v = 0; v < q; ++v)
        cubes[v] = mulmod_u64(mulmod_u64(v, v, q), v, q);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t ci = mod_u64(pair.c(i), q), di = mod_u64(pair.d(i), q);
        bool fixed_zero = variant.kind == Variant::Kind::FixZero && variant.index == i;
        for (std::uint64_t v = 0; v < q; ++v) {
            if (fixed_zero && v != 0) continue;
            if (variant.kind == Variant::Kind::NonZeroAll && v % p == 0) continue;
            t.fc[i].push_back(mulmod_u64(ci, cubes[v], q));
            t.gc[i].push_back(mulmod_u64(di, cubes[v], q));
        }
    }
    return t;
}

} // namespace

std::string Variant::str() const {
    switch (kind) {
        case Kind::All: return "all";
        case Kind::NonZeroAll: return "nonzero";
        case Kind::FixZero: return "fix-zero-" + std::to_string(index);
        case Kind::NonZeroPairWitness: return "pair-witness";
    }
    return "?";
}

LocalCount rho_bruteforce(const FormPair& pair, std::uint64_t p, unsigned k,
                          Variant variant, std::uint64_t enumeration_cap) {
    std::uint64_t q = checked_prime_power(p, k);
    check_enumeration_feasible(q, pair.n(), enumeration_cap);
    const std::size_t n = pair.n();

    if (variant.kind == Variant::Kind::FixZero && variant.index >= n)
        throw std::invalid_argument("rho_bruteforce: FixZero index out of range");

    std::uint64_t count = 0;

    if (variant.kind == Variant::Kind::NonZeroPairWitness) {
        // Enumerate plain solutions and test each for a qualifying pair.
        std::vector<std::vector<bool>> delta_unit(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    delta_unit[i][j] =
                        mod_u64(pair.c(i) * pair.d(j) - pair.c(j) * pair.d(i), p) != 0;
        enumerate_solutions(pair, q, [&](const std::vector<std::uint64_t>& x) {
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i] % p == 0) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (x[j] % p == 0 || !delta_unit[i][j]) continue;
                    ++count;
                    return;
                }
            }
        });
        return {p, k, variant, Int(count)};
    }

    ValueTables tables = build_tables(pair, q, p, variant);
    // Iterative depth-first sweep accumulating the two partial sums.
    // Invariant: pos[L] == 0 whenever the sweep enters level L from above.
    std::vector<std::size_t> pos(n, 0);
    std::vector<std::uint64_t> s1(n + 1, 0), s2(n + 1, 0);
    std::size_t level = 0;
    while (true) {
        if (pos[level] == tables.fc[level].size()) {
            if (level == 0) break;
            pos[level] = 0;
            --level;
            ++pos[level];
            continue;
        }
        s1[level + 1] = (s1[level] + tables.fc[level][pos[level]]) % q;
        s2[level + 1] = (s2[level] + tables.gc[level][pos[level]]) % q;
        if (level + 1 == n) {
            if (s1[n] == 0 && s2[n] == 0) ++count;
            ++pos[level];
        } else {
            ++level;
        }
    }
    return {p, k, variant, Int(count)};
}

void enumerate_solutions(const FormPair& pair, std::uint64_t q,
                         const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    auto factors = factorize(q);
    if (factors.size() != 1)
        throw std::invalid_argument("enumerate_solutions: q must be a prime power");
    check_enumeration_feasible(q, pair.n());
    const std::size_t n = pair.n();
    std::vector<std::vector<std::uint64_t>> fc(n), gc(n);
    {
        ValueTables t = build_tables(pair, q, factors[0].first, Variant::all());
        fc = std::move(t.fc);
        gc = std::move(t.gc);
    }
    std::vector<std::uint64_t> x(n, 0);
    std::vector<std::uint64_t> s1(n + 1, 0), s2(n + 1, 0);
    // simple recursive descent; depth is tiny
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        if (level == n) {
            if (s1[n] == 0 && s2[n] == 0) fn(x);
            return;
        }
        for (std::uint64_t v = 0; v < q; ++v) {
            x[level] = v;
            s1[level + 1] = (s1[level] + fc[level][v]) % q;
            s2[level + 1] = (s2[level] + gc[level][v]) % q;
            rec(level + 1);
        }
    };
    rec(0);
}

LocalCount rho_dp(const FormPair& pair, std::uint64_t q, Variant variant,
                  std::uint64_t modulus_cap) {
    if (q == 0 || q > modulus_cap)
        throw std::domain_error("rho_dp: q must be in [1, " +
                                std::to_string(modulus_cap) + "]");
    auto factors = factorize(q);
    if (factors.size() != 1) {
        if (q == 1) {
            // empty system: one (empty-sum) solution vector per variant rules
            return {0, 0, variant, Int(1)};
        }
        throw std::invalid_argument(
            "rho_dp: q must be a prime power (use rho_composite for composite q)");
    }
    std::uint64_t p = factors[0].first;
    unsigned k = factors[0].second;
    const std::size_t n = pair.n();
    if (variant.kind == Variant::Kind::NonZeroPairWitness)
        throw std::invalid_argument(
            "rho_dp: pair-witness counts need enumeration (rho_bruteforce)");
    if (variant.kind == Variant::Kind::FixZero && variant.index >= n)
        throw std::invalid_argument("rho_dp: FixZero index out of range");

    // Multiplicity of each cube value over the allowed residue ranges.
    std::vector<std::uint64_t> cube_all(q, 0), cube_unit(q, 0);
    for (std::uint64_t v = 0; v < q; ++v) {
        std::uint64_t cb = mulmod_u64(mulmod_u64(v, v, q), v, q);
        ++cube_all[cb];
        if (v % p != 0) ++cube_unit[cb];
    }

    std::vector<Int> cur(q * q, Int(0)), next(q * q, Int(0));
    cur[0] = 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> support; // (ab-key, mult)
    for (std::size_t i = 0; i < n; ++i) {
        bool fixed_zero = variant.kind == Variant::Kind::FixZero && variant.index == i;
        const std::vector<std::uint64_t>& cubes =
            variant.kind == Variant::Kind::NonZeroAll ? cube_unit : cube_all;
        std::uint64_t ci = mod_u64(pair.c(i), q), di = mod_u64(pair.d(i), q);

        // collapse to the distinct (c_i t, d_i t) contributions
        std::vector<std::uint64_t> mult(q * q, 0);
        support.clear();
        if (fixed_zero) {
            mult[0] = 1;
            support.emplace_back(0, 1);
        } else {
            for (std::uint64_t t = 0; t < q; ++t) {
                if (cubes[t] == 0) continue;
                std::uint64_t key = mulmod_u64(ci, t, q) * q + mulmod_u64(di, t, q);
                if (mult[key] == 0) support.emplace_back(key, 0);
                mult[key] += cubes[t];
            }
            for (auto& [key, m] : support) m = mult[key];
        }

        for (auto& v : next) v = 0;
        for (const auto& [key, m] : support) {
            std::uint64_t a = key / q, b = key % q;
            for (std::uint64_t st = 0; st < q * q; ++st) {
                if (cur[st] == 0) continue;
                std::uint64_t t1 = st / q + a;
                if (t1 >= q) t1 -= q;
                std::uint64_t t2 = st % q + b;
                if (t2 >= q) t2 -= q;
                mpz_addmul_ui(next[t1 * q + t2].get_mpz_t(), cur[st].get_mpz_t(), m);
            }
        }
        std::swap(cur, next);
    }
    return {p, k, variant, cur[0]};
}

Int rho_composite(const FormPair& pair, std::uint64_t q, Variant variant) {
    if (q == 0) throw std::invalid_argument("rho_composite: q must be >= 1");
    Int value = 1;
    for (const auto& [p, k] : factorize(q)) {
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < k; ++i) pk *= p;
        value *= rho_dp(pair, pk, variant).value;
    }
    return value;
}

LiftWitness hensel_lift(const FormPair& pair, const std::vector<Int>& x,
                        std::size_t i, std::size_t j, std::uint64_t p, unsigned k,
                        const Int& lambda, const Int& mu) {
    const std::size_t n = pair.n();
    if (x.size() != n) throw std::invalid_argument("hensel_lift: vector length mismatch");
    if (i >= n || j >= n || i == j)
        throw std::invalid_argument("hensel_lift: bad coordinate pair");
    if (!is_prime(p)) throw std::invalid_argument("hensel_lift: p must be prime");
    if (k == 0) throw std::invalid_argument("hensel_lift: k must be >= 1");
    if (p == 3 && k < 2)
        throw std::invalid_argument("hensel_lift: p = 3 requires k >= 2 (mod 9 base)");

    Int pk = int_pow(Int(p), k);
    Int pk1 = pk * Int(p);

    auto [f, g] = pair.evaluate(x);
    Int rf = (f - lambda) % pk, rg = (g - mu) % pk;
    if (rf != 0 || rg != 0)
        throw std::invalid_argument("hensel_lift: x does not solve the system mod p^k");

    std::uint64_t xi = mod_u64(x[i], p), xj = mod_u64(x[j], p);
    std::uint64_t delta = mod_u64(pair.c(i) * pair.d(j) - pair.c(j) * pair.d(i), p);
    if (xi == 0 || xj == 0 || delta == 0)
        throw std::invalid_argument(
            "hensel_lift: lifting condition x_i x_j (c_i d_j - c_j d_i) != 0 mod p fails");

    // Linear system for the corrections (K_i, K_j) mod p. For p != 3 the
    // Jacobian keeps its factor 3 and the correction sits at level p^k; for
    // p = 3 the factor 3 is divided out and the correction sits at 3^{k-1}.
    std::uint64_t jac = (p == 3) ? 1 : 3 % p;
    auto coef = [&](const Int& cd, const Int& xv) {
        return mulmod_u64(jac,
                          mulmod_u64(mod_u64(cd, p),
                                     mulmod_u64(mod_u64(xv, p), mod_u64(xv, p), p), p),
                          p);
    };
    std::uint64_t a = coef(pair.c(i), x[i]), b = coef(pair.c(j), x[j]);
    std::uint64_t cc = coef(pair.d(i), x[i]), dd = coef(pair.d(j), x[j]);

    Int rhs_f_int = -(f - lambda) / pk;
    Int rhs_g_int = -(g - mu) / pk;
    std::uint64_t r1 = mod_u64(rhs_f_int, p), r2 = mod_u64(rhs_g_int, p);

    auto sub_mod = [p](std::uint64_t u, std::uint64_t v) { return (u + p - v) % p; };
    std::uint64_t det = sub_mod(mulmod_u64(a, dd, p), mulmod_u64(b, cc, p));
    if (det == 0)
        throw std::logic_error("hensel_lift: singular correction system");
    std::uint64_t det_inv = inv_mod_p(det, p);
    std::uint64_t ki =
        mulmod_u64(sub_mod(mulmod_u64(r1, dd, p), mulmod_u64(r2, b, p)), det_inv, p);
    std::uint64_t kj =
        mulmod_u64(sub_mod(mulmod_u64(a, r2, p), mulmod_u64(cc, r1, p)), det_inv, p);

    Int step = (p == 3) ? int_pow(Int(3), k - 1) : pk;

    LiftWitness w;
    w.base.resize(n);
    w.lifted.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        Int xv = x[t] % pk;
        if (xv < 0) xv += pk;
        w.base[t] = xv;
        w.lifted[t] = xv;
    }
    w.lifted[i] = (w.base[i] + Int(ki) * step) % pk1;
    w.lifted[j] = (w.base[j] + Int(kj) * step) % pk1;
    w.i = i;
    w.j = j;
    w.p = p;
    w.k = k;
    w.lambda = lambda;
    w.mu = mu;

    auto [lf, lg] = pair.evaluate(w.lifted);
    w.residual_f = (lf - lambda) % pk1;
    w.residual_g = (lg - mu) % pk1;
    if (w.residual_f < 0) w.residual_f += pk1;
    if (w.residual_g < 0) w.residual_g += pk1;
    if (w.residual_f != 0 || w.residual_g != 0)
        throw std::logic_error("hensel_lift: lifted vector fails the congruences");
    return w;
}

LiftCountReport verify_lifting_count(const FormPair& pair, std::uint64_t p,
                                     unsigned k) {
    const std::size_t n = pair.n();
    std::uint64_t q = checked_prime_power(p, k);
    check_enumeration_feasible(q * p, n); // must enumerate mod p^{k+1}
    if (p == 3 && k < 2)
        throw std::invalid_argument("verify_lifting_count: p = 3 requires k >= 2");

    LiftCountReport rep;
    rep.p = p;
    rep.k = k;
    rep.expected_extensions = int_pow(Int(p), static_cast<unsigned long>(n - 2));

    std::vector<std::vector<bool>> delta_unit(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                delta_unit[i][j] =
                    mod_u64(pair.c(i) * pair.d(j) - pair.c(j) * pair.d(i), p) != 0;

    bool first = true;
    enumerate_solutions(pair, q, [&](const std::vector<std::uint64_t>& x) {
        ++rep.solutions;
        std::optional<std::pair<std::size_t, std::size_t>> witness;
        for (std::size_t i = 0; i < n && !witness; ++i) {
            if (x[i] % p == 0) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (x[j] % p == 0 || !delta_unit[i][j]) continue;
                witness = {i, j};
                break;
            }
        }
        if (!witness) return;
        ++rep.qualifying;

        if (p != 3) {
            // Count y = x + p^k z with F(y) = G(y) = 0 mod p^{k+1} directly.
            std::uint64_t q1 = q * p;
            std::vector<Int> y(n);
            std::uint64_t found = 0;
            std::vector<std::uint64_t> z(n, 0);
            while (true) {
                for (std::size_t t = 0; t < n; ++t) y[t] = Int(x[t] + q * z[t]);
                auto [f, g] = pair.evaluate(y);
                if (mod_u64(f, q1) == 0 && mod_u64(g, q1) == 0) ++found;
                std::size_t lvl = 0;
                while (lvl < n && ++z[lvl] == p) z[lvl++] = 0;
                if (lvl == n) break;
            }
            if (first) {
                rep.min_extensions = rep.max_extensions = found;
                first = false;
            } else {
                rep.min_extensions = std::min(rep.min_extensions, found);
                rep.max_extensions = std::max(rep.max_extensions, found);
            }
            if (Int(found) != rep.expected_extensions) rep.all_exact = false;
        } else {
            // The constructive lift itself must succeed (existence check).
            std::vector<Int> xv(n);
            for (std::size_t t = 0; t < n; ++t) xv[t] = Int(x[t]);
            try {
                hensel_lift(pair, xv, witness->first, witness->second, p, k);
            } catch (const std::exception&) {
                rep.all_liftable = false;
            }
        }
    });
    return rep;
}

Mod9Report verify_mod9_lemma() {
    Mod9Report rep;
    // class id mod 3 for a column (c,d): 0..3 the P^1(F_3) classes, 4 = 0/0
    auto class_id = [](std::uint64_t c, std::uint64_t d) -> int {
        std::uint64_t cr = c % 3, dr = d % 3;
        if (dr != 0) return static_cast<int>((cr * (dr == 1 ? 1 : 2)) % 3);
        if (cr != 0) return 3;
        return 4;
    };
    std::uint64_t cube9[3] = {0, 1, 8};

    for (std::uint64_t c1 = 0; c1 < 9; ++c1)
    for (std::uint64_t d1 = 0; d1 < 9; ++d1) {
        int r1 = class_id(c1, d1);
        if (r1 == 4) continue;
        for (std::uint64_t c2 = 0; c2 < 9; ++c2)
        for (std::uint64_t d2 = 0; d2 < 9; ++d2) {
            int r2 = class_id(c2, d2);
            if (r2 == 4 || r2 == r1) continue;
            for (std::uint64_t c3 = 0; c3 < 9; ++c3)
            for (std::uint64_t d3 = 0; d3 < 9; ++d3) {
                int r3 = class_id(c3, d3);
                if (r3 == 4 || r3 == r1 || r3 == r2) continue;
                ++rep.tuples_checked;
                bool solved = false;
                // x^3 mod 9 depends only on x mod 3
                for (std::uint64_t x1 = 0; x1 < 3 && !solved; ++x1)
                for (std::uint64_t x2 = 0; x2 < 3 && !solved; ++x2)
                for (std::uint64_t x3 = 0; x3 < 3 && !solved; ++x3) {
                    int nonzero = (x1 != 0) + (x2 != 0) + (x3 != 0);
                    if (nonzero < 2) continue;
                    std::uint64_t f = (c1 * cube9[x1] + c2 * cube9[x2] + c3 * cube9[x3]) % 9;
                    std::uint64_t g = (d1 * cube9[x1] + d2 * cube9[x2] + d3 * cube9[x3]) % 9;
                    if (f == 0 && g == 0) solved = true;
                }
                if (!solved) {
                    ++rep.failures;
                    if (rep.failure_examples.size() < 10)
                        rep.failure_examples.push_back({c1, c2, c3, d1, d2, d3});
                }
            }
        }
    }
    return rep;
}

unsigned matrix_rank_mod_p(const FormPair& pair, std::uint64_t p) {
    const std::size_t n = pair.n();
    std::vector<std::uint64_t> cr(n), dr(n);
    bool any_nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
        cr[i] = mod_u64(pair.c(i), p);
        dr[i] = mod_u64(pair.d(i), p);
        if (cr[i] != 0 || dr[i] != 0) any_nonzero = true;
    }
    if (!any_nonzero) return 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::uint64_t cross =
                (mulmod_u64(cr[i], dr[j], p) + p - mulmod_u64(cr[j], dr[i], p)) % p;
            if (cross != 0) return 2;
        }
    return 1;
}

LocalCount rank2_linear_count(const FormPair& pair, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank2_linear_count: p must be prime");
    if (p % 3 == 1)
        throw std::invalid_argument(
            "rank2_linear_count: requires p = 2 mod 3 or p = 3 (cubing bijective)");
    unsigned rank = matrix_rank_mod_p(pair, p);
    LocalCount out;
    out.p = p;
    out.k = 1;
    out.variant = Variant::all();
    out.value = int_pow(Int(p), static_cast<unsigned long>(pair.n() - rank));
    return out;
}

Int rho_lift_lower_bound(const FormPair& pair, std::uint64_t q) {
    auto factors = factorize(q);
    if (factors.size() != 1)
        throw std::invalid_argument("rho_lift_lower_bound: q must be a prime power");
    if (matrix_rank_mod_p(pair, factors[0].first) < 2) return 0;
    return rho_dp(pair, q, Variant::non_zero_all()).value;
}

} // namespace cubicpair
