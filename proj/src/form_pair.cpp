#include "cubicpair/form_pair.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace cubicpair {

namespace {

Int json_int(const nlohmann::json& v) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return Int(v.get<std::string>(), 10);
    throw std::invalid_argument("expected integer or decimal string");
}

std::vector<Int> json_int_vector(const nlohmann::json& v) {
    if (!v.is_array()) throw std::invalid_argument("expected array of integers");
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(json_int(e));
    return out;
}

// Integers that fit in 64 bits are emitted as numbers, larger ones as
// decimal strings.
nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return nlohmann::json(v.get_si());
    return nlohmann::json(v.get_str());
}

} // namespace

FormPair::FormPair(std::vector<Int> c, std::vector<Int> d, Int m)
    : c_(std::move(c)), d_(std::move(d)), max_coeff_(std::move(m)) {}

FormPair FormPair::from_columns(std::vector<Int> c, std::vector<Int> d) {
    if (c.empty()) throw std::invalid_argument("FormPair: n must be >= 1");
    if (c.size() != d.size())
        throw std::invalid_argument("FormPair: c and d must have equal length");
    Int m = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0 && d[i] == 0)
            throw std::invalid_argument("FormPair: zero column at index " + std::to_string(i));
        Int ac = abs(c[i]), ad = abs(d[i]);
        if (ac > m) m = ac;
        if (ad > m) m = ad;
    }
    return FormPair(std::move(c), std::move(d), std::move(m));
}

FormPair FormPair::parse_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        if (!j.is_object() || !j.contains("c") || !j.contains("d"))
            throw std::invalid_argument("pair JSON must contain \"c\" and \"d\" arrays");
        auto c = json_int_vector(j["c"]);
        auto d = json_int_vector(j["d"]);
        if (j.contains("n")) {
            auto n = j["n"].get<std::int64_t>();
            if (n <= 0 || static_cast<std::size_t>(n) != c.size())
                throw std::invalid_argument("pair JSON: n does not match coefficient arrays");
        }
        return from_columns(std::move(c), std::move(d));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON pair: ") + e.what());
    }
}

FormPair FormPair::parse_csv(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        // tolerate comma or whitespace separators
        for (auto& ch : line)
            if (ch == ',' || ch == '\t') ch = ' ';
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) {
            try {
                row.emplace_back(tok, 10);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("malformed CSV integer: " + tok);
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.size() != 2)
        throw std::invalid_argument("pair CSV must have exactly two rows (c then d)");
    if (rows[0].size() != rows[1].size())
        throw std::invalid_argument("pair CSV rows differ in length");
    return from_columns(std::move(rows[0]), std::move(rows[1]));
}

FormPair FormPair::parse(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);
    return parse_csv(text);
}

std::pair<Int, Int> FormPair::evaluate(const std::vector<Int>& x) const {
    if (x.size() != n())
        throw std::invalid_argument("evaluate: vector length mismatch");
    Int f = 0, g = 0;
    for (std::size_t i = 0; i < n(); ++i) {
        Int cube = x[i] * x[i] * x[i];
        f += c_[i] * cube;
        g += d_[i] * cube;
    }
    return {f, g};
}

std::string FormPair::to_json() const {
    nlohmann::json j;
    j["n"] = n();
    nlohmann::json cj = nlohmann::json::array(), dj = nlohmann::json::array();
    for (const auto& v : c_) cj.push_back(int_to_json(v));
    for (const auto& v : d_) dj.push_back(int_to_json(v));
    j["c"] = std::move(cj);
    j["d"] = std::move(dj);
    return j.dump();
}

RationalRatio RationalRatio::of_column(const Int& c, const Int& d) {
    RationalRatio r;
    if (d == 0) {
        if (c == 0) throw std::invalid_argument("RationalRatio: zero column");
        r.infinite = true;
        r.num = 1;
        r.den = 0;
        return r;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    r.num = c / g;
    r.den = d / g;
    if (r.den < 0) {
        r.num = -r.num;
        r.den = -r.den;
    }
    return r;
}

bool RationalRatio::operator<(const RationalRatio& o) const {
    if (infinite != o.infinite) return !infinite && o.infinite;
    if (num != o.num) return num < o.num;
    return den < o.den;
}

std::string RationalRatio::str() const {
    if (infinite) return "inf";
    if (den == 1) return num.get_str();
    return num.get_str() + "/" + den.get_str();
}

std::map<RationalRatio, std::vector<std::size_t>> ratio_classes(const FormPair& pair) {
    std::map<RationalRatio, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < pair.n(); ++i)
        out[RationalRatio::of_column(pair.c(i), pair.d(i))].push_back(i);
    return out;
}

std::map<RationalRatio, std::size_t> ratio_multiset(const FormPair& pair) {
    std::map<RationalRatio, std::size_t> out;
    for (const auto& [ratio, indices] : ratio_classes(pair)) out[ratio] = indices.size();
    return out;
}

} // namespace cubicpair
