#include "cubicpair/numeric.hpp"

#include <cstdlib>

namespace cubicpair {

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
        Rat inv = 1 / base;
        return rat_pow(inv, -exp);
    }
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(),
               static_cast<unsigned long>(exp));
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(),
               static_cast<unsigned long>(exp));
    r.canonicalize();
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::uint64_t mod_u64(const Int& a, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mod_u64: zero modulus");
    Int r = a % Int(m);
    if (r < 0) r += Int(m);
    return r.get_ui();
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid; p prime and a not divisible by p.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    if (new_r == 0) throw std::domain_error("inv_mod_p: not invertible");
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod_p: not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::string render_decimal(const Rat& x, int digits) {
    if (digits < 0) throw std::invalid_argument("render_decimal: negative digits");
    bool neg = x < 0;
    Rat ax = neg ? Rat(-x) : x;
    Int scale = int_pow(Int(10), static_cast<unsigned long>(digits));
    // floor(ax*scale + 1/2) = floor((2*num*scale + den) / (2*den))
    Int num = ax.get_num() * scale * 2 + ax.get_den();
    Int rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), Int(ax.get_den() * 2).get_mpz_t());
    std::string s = rounded.get_str();
    if (digits == 0) return (neg && rounded != 0 ? "-" : "") + s;
    if (s.size() <= static_cast<std::size_t>(digits))
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    if (neg && rounded != 0) s.insert(0, "-");
    return s;
}

std::string rat_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(Int(text, 10));
    } else {
        Int num(text.substr(0, slash), 10);
        Int den(text.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
        r = Rat(num) / Rat(den);
    }
    r.canonicalize();
    return r;
}

Rat ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Rat(q);
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    if (lo < 0 || o.lo < 0)
        throw std::domain_error("RatInterval::operator*: negative endpoint");
    return RatInterval(lo * o.lo, hi * o.hi);
}

RatInterval RatInterval::operator*(const Rat& scalar) const {
    if (scalar < 0) throw std::domain_error("RatInterval::operator*: negative scalar");
    return RatInterval(lo * scalar, hi * scalar);
}

} // namespace cubicpair
