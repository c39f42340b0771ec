#include "cubicpair/optimize.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cubicpair {

Rat LinFrac::eval(const Rat& delta) const {
    Rat den = b0 + b1 * delta;
    if (den == 0) throw std::domain_error("LinFrac::eval: pole");
    return (a0 + a1 * delta) / den;
}

bool LinFrac::has_pole_at(const Rat& delta) const { return b0 + b1 * delta == 0; }

int LinFrac::direction(const Rat& lo, const Rat& hi) const {
    if (b1 != 0) {
        Rat root = -b0 / b1;
        if (lo < root && root < hi)
            throw std::domain_error("LinFrac::direction: pole inside the interval");
    } else if (b0 == 0) {
        throw std::domain_error("LinFrac::direction: zero denominator");
    }
    // d/d(delta) has the constant sign of (a1 b0 - a0 b1) on a pole-free interval.
    Rat det = a1 * b0 - a0 * b1;
    if (det > 0) return 1;
    if (det < 0) return -1;
    return 0;
}

std::vector<ExponentConstraint> build_constraints() {
    Rat lo(0), hi(1, 30);
    std::vector<ExponentConstraint> cs;
    cs.push_back({"46/(5d)", ExponentConstraint::Kind::PLower,
                  {Rat(46), Rat(0), Rat(0), Rat(5)}, lo, hi});
    cs.push_back({"310/(3(1-20d))", ExponentConstraint::Kind::PLower,
                  {Rat(310), Rat(0), Rat(3), Rat(-60)}, lo, hi});
    cs.push_back({"566/(15d)", ExponentConstraint::Kind::PLower,
                  {Rat(566), Rat(0), Rat(0), Rat(15)}, lo, hi});
    cs.push_back({"1195/(1-30d)", ExponentConstraint::Kind::PLower,
                  {Rat(1195), Rat(0), Rat(1), Rat(-30)}, lo, hi});
    return cs;
}

namespace {

// Exact rational roots of E_i(delta) = E_j(delta) inside (lo, hi).
// Cross-multiplying gives a polynomial of degree <= 2 over Q.
std::vector<Rat> crossing_points(const LinFrac& f, const LinFrac& g, const Rat& lo,
                                 const Rat& hi) {
    // (a0+a1 d)(B0+B1 d) - (A0+A1 d)(b0+b1 d) = 0
    Rat c2 = f.a1 * g.b1 - g.a1 * f.b1;
    Rat c1 = f.a0 * g.b1 + f.a1 * g.b0 - g.a0 * f.b1 - g.a1 * f.b0;
    Rat c0 = f.a0 * g.b0 - g.a0 * f.b0;
    std::vector<Rat> roots;
    if (c2 == 0) {
        if (c1 != 0) roots.push_back(-c0 / c1);
    } else {
        Rat disc = c1 * c1 - 4 * c2 * c0;
        if (disc < 0) return {};
        // rational square root exists iff num and den are perfect squares
        Int num = disc.get_num(), den = disc.get_den();
        Int rs, rd;
        if (mpz_perfect_square_p(num.get_mpz_t()) &&
            mpz_perfect_square_p(den.get_mpz_t())) {
            mpz_sqrt(rs.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            Rat sq = Rat(rs) / Rat(rd);
            roots.push_back((-c1 + sq) / (2 * c2));
            roots.push_back((-c1 - sq) / (2 * c2));
        } else {
            throw std::domain_error(
                "solve_minmax: constraint crossing is irrational; not representable "
                "in exact rational arithmetic");
        }
    }
    std::vector<Rat> inside;
    for (const auto& r : roots)
        if (lo < r && r < hi && !f.has_pole_at(r) && !g.has_pole_at(r)) inside.push_back(r);
    return inside;
}

Rat envelope(const std::vector<ExponentConstraint>& cs, const Rat& delta) {
    Rat best;
    bool first = true;
    for (const auto& c : cs) {
        Rat v = c.exponent.eval(delta);
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

} // namespace

OptimizationResult solve_minmax(const std::vector<ExponentConstraint>& constraints,
                                const Rat& lo, const Rat& hi) {
    if (constraints.empty())
        throw std::invalid_argument("solve_minmax: empty constraint set");
    if (!(lo < hi)) throw std::invalid_argument("solve_minmax: empty interval");
    for (const auto& c : constraints)
        c.exponent.direction(lo, hi); // monotonicity/pole validation

    struct Candidate {
        Rat delta;
        bool at_boundary;
        std::string side;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < constraints.size(); ++i)
        for (std::size_t j = i + 1; j < constraints.size(); ++j)
            for (const auto& r :
                 crossing_points(constraints[i].exponent, constraints[j].exponent, lo, hi))
                cands.push_back({r, false, ""});

    auto endpoint_ok = [&](const Rat& d) {
        return std::none_of(constraints.begin(), constraints.end(),
                            [&](const auto& c) { return c.exponent.has_pole_at(d); });
    };
    if (endpoint_ok(lo)) cands.push_back({lo, true, "left"});
    if (endpoint_ok(hi)) cands.push_back({hi, true, "right"});
    if (cands.empty())
        throw std::domain_error("solve_minmax: no crossing and poles at both endpoints");

    std::optional<std::size_t> best;
    Rat best_val;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
        Rat v = envelope(constraints, cands[idx].delta);
        if (!best || v < best_val ||
            (v == best_val && cands[idx].delta < cands[*best].delta)) {
            best = idx;
            best_val = v;
        }
    }

    OptimizationResult res;
    res.delta_star = cands[*best].delta;
    res.optimal_exponent = best_val;
    res.boundary = cands[*best].at_boundary;
    res.boundary_side = cands[*best].side;
    for (const auto& c : constraints)
        if (c.exponent.eval(res.delta_star) == best_val) res.active.push_back(c.label);
    res.lambda_exponent = lambda_bound(res);

    res.delta_below_interval_end = res.delta_star < hi;
    // The tighter of the two P0 upper bounds is the first one exactly when
    // P >= M^{105/(4+55d)}; below 30 this follows from P >= M^30.
    res.p0_first_branch_threshold = Rat(105) / (Rat(4) + Rat(55) * res.delta_star);
    res.p0_first_branch_ok = res.p0_first_branch_threshold <= 30;
    return res;
}

bool certify(const std::vector<ExponentConstraint>& constraints,
             const OptimizationResult& result, unsigned grid_points) {
    if (constraints.empty())
        throw std::invalid_argument("certify: empty constraint set");
    if (grid_points == 0) throw std::invalid_argument("certify: need grid points");

    const Rat lo = constraints.front().lo, hi = constraints.front().hi;
    // Equalization certificate at delta_star.
    std::size_t active_hits = 0;
    for (const auto& c : constraints) {
        if (c.exponent.has_pole_at(result.delta_star)) return false;
        Rat v = c.exponent.eval(result.delta_star);
        if (v > result.optimal_exponent) return false;
        bool is_active = std::find(result.active.begin(), result.active.end(), c.label) !=
                         result.active.end();
        if (is_active) {
            if (v != result.optimal_exponent) return false;
            ++active_hits;
        }
    }
    if (active_hits != result.active.size()) return false;

    // Grid check: the envelope never dips below the reported optimum.
    Rat w = hi - lo;
    for (unsigned g = 1; g <= grid_points; ++g) {
        Rat delta = lo + w * (Rat(g) / Rat(grid_points + 1));
        if (envelope(constraints, delta) < result.optimal_exponent) return false;
    }
    return true;
}

long lambda_bound(const OptimizationResult& result) {
    Rat c = ceil_rat(result.optimal_exponent);
    return static_cast<long>(c.get_num().get_si()) + 1;
}

} // namespace cubicpair
