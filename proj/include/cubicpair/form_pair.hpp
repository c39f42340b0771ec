#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cubicpair/numeric.hpp"

namespace cubicpair {

// Coefficient matrix (c; d) of a pair of diagonal cubic forms
//   F = c_1 x_1^3 + ... + c_n x_n^3,  G = d_1 x_1^3 + ... + d_n x_n^3.
// Invariants: n >= 1, no column is (0,0), max_coeff = max |c_i|,|d_i| >= 1.
// Immutable after construction; all operations on it are pure.
class FormPair {
  public:
    static FormPair from_columns(std::vector<Int> c, std::vector<Int> d);

    // JSON {"n":int,"c":[...],"d":[...]} with integers as numbers or decimal
    // strings, or CSV with two rows (c-row then d-row). parse() sniffs.
    static FormPair parse_json(const std::string& text);
    static FormPair parse_csv(const std::string& text);
    static FormPair parse(const std::string& text);

    std::size_t n() const { return c_.size(); }
    const std::vector<Int>& c() const { return c_; }
    const std::vector<Int>& d() const { return d_; }
    const Int& c(std::size_t i) const { return c_[i]; }
    const Int& d(std::size_t i) const { return d_[i]; }
    const Int& max_coeff() const { return max_coeff_; } // the quantity M
    Int prime_bound() const { return max_coeff_ * max_coeff_; }

    // Exact evaluation of (F(x), G(x)).
    std::pair<Int, Int> evaluate(const std::vector<Int>& x) const;

    std::string to_json() const;

  private:
    FormPair(std::vector<Int> c, std::vector<Int> d, Int m);
    std::vector<Int> c_, d_;
    Int max_coeff_;
};

// Column ratio c_i/d_i over Q, with infinity for d_i = 0. Two columns carry
// the same ratio iff c_i d_j = c_j d_i. Canonical form: den > 0, gcd 1.
struct RationalRatio {
    bool infinite = false;
    Int num = 0;
    Int den = 1;

    static RationalRatio of_column(const Int& c, const Int& d);

    bool operator==(const RationalRatio& o) const {
        return infinite == o.infinite && num == o.num && den == o.den;
    }
    bool operator<(const RationalRatio& o) const;
    std::string str() const;
};

// Ratio class -> ascending column indices (0-based). Multiplicities sum to n.
std::map<RationalRatio, std::vector<std::size_t>> ratio_classes(const FormPair& pair);
std::map<RationalRatio, std::size_t> ratio_multiset(const FormPair& pair);

} // namespace cubicpair
