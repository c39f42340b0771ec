#include "cubicpair/json_io.hpp"

namespace cubicpair {

json rat_json(const Rat& x, int precision) {
    json j;
    j["rational"] = rat_string(x);
    j["decimal"] = render_decimal(x, precision);
    return j;
}

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json interval_json(const RatInterval& iv, int precision) {
    json j;
    j["lo"] = rat_json(iv.lo, precision);
    j["hi"] = rat_json(iv.hi, precision);
    return j;
}

json to_json(const PrimeVerdict& v) {
    json j;
    j["p"] = v.p;
    j["condition"] = condition_name(v.condition);
    j["satisfied"] = v.satisfied;
    json w;
    if (v.offending_class) w["offending_class"] = v.offending_class->str();
    if (v.condition == Condition::I) w["parallel_count"] = v.parallel_count;
    w["distinct_classes"] = v.distinct_classes;
    w["both_zero_count"] = v.both_zero_count;
    if (v.degenerate_all_both_zero) w["all_both_zero_as_one_ratio"] = true;
    j["witness"] = std::move(w);
    return j;
}

json to_json(const MGoodReport& r) {
    json j;
    j["is_mgood"] = r.is_mgood;
    j["prime_bound"] = int_json(r.prime_bound);
    j["failures"] = json::array();
    for (const auto& v : r.failures) j["failures"].push_back(to_json(v));
    if (!r.verdicts.empty()) {
        j["verdicts"] = json::array();
        for (const auto& v : r.verdicts) j["verdicts"].push_back(to_json(v));
    }
    return j;
}

json to_json(const PartitionAB& p) {
    json j;
    j["a_indices"] = p.a_indices;
    j["b_indices"] = p.b_indices;
    j["b_pattern"] = b_pattern_symbols(p.pattern);
    return j;
}

json to_json(const EtaVector& e) {
    json j;
    json eta = json::array();
    for (const auto& v : e.eta) eta.push_back(rat_string(v));
    j["eta"] = std::move(eta);
    j["sign_flips"] = e.sign_flips;
    if (!e.column_order.empty()) j["column_order"] = e.column_order;
    j["lower_bound"] = rat_string(e.lower_bound);
    j["upper_bound"] = rat_string(e.upper_bound);
    j["bounds_certified"] = e.bounds_certified;
    return j;
}

json to_json(const ReductionTrace& t) {
    json j;
    j["success"] = t.success;
    json steps = json::array();
    for (const auto& s : t.steps) {
        json step;
        step["replaced_row"] = s.replaced_row;
        step["sign"] = s.sign;
        json rem = json::array();
        for (const auto& v : s.remainder) rem.push_back(int_json(v));
        step["remainder"] = std::move(rem);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    json rows = json::array();
    for (const auto& row : t.final_rows) {
        json r = json::array();
        for (const auto& v : row) r.push_back(int_json(v));
        rows.push_back(std::move(r));
    }
    j["final_rows"] = std::move(rows);
    return j;
}

json to_json(const LocalCount& c) {
    json j;
    j["p"] = c.p;
    j["k"] = c.k;
    j["variant"] = c.variant.str();
    j["value"] = int_json(c.value);
    return j;
}

json to_json(const LiftWitness& w) {
    json j;
    auto vec = [](const std::vector<Int>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(int_json(x));
        return a;
    };
    j["base"] = vec(w.base);
    j["lifted"] = vec(w.lifted);
    j["i"] = w.i;
    j["j"] = w.j;
    j["p"] = w.p;
    j["k"] = w.k;
    j["lambda"] = int_json(w.lambda);
    j["mu"] = int_json(w.mu);
    j["residual_f"] = int_json(w.residual_f);
    j["residual_g"] = int_json(w.residual_g);
    return j;
}

json to_json(const LiftCountReport& r) {
    json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["solutions"] = r.solutions;
    j["qualifying"] = r.qualifying;
    j["expected_extensions"] = int_json(r.expected_extensions);
    if (r.p != 3) {
        j["all_exact"] = r.all_exact;
        j["min_extensions"] = r.min_extensions;
        j["max_extensions"] = r.max_extensions;
    } else {
        j["all_liftable"] = r.all_liftable;
    }
    return j;
}

json to_json(const Mod9Report& r) {
    json j;
    j["tuples_checked"] = r.tuples_checked;
    j["failures"] = r.failures;
    if (!r.failure_examples.empty()) {
        json ex = json::array();
        for (const auto& t : r.failure_examples)
            ex.push_back({t[0], t[1], t[2], t[3], t[4], t[5]});
        j["failure_examples"] = std::move(ex);
    }
    return j;
}

json to_json(const SeriesTruncation& s, int precision) {
    json j;
    j["p0"] = s.p0;
    j["truncated_series"] = rat_json(s.truncated_series, precision);
    j["euler_product"] = rat_json(s.euler_product, precision);
    j["remainder"] = rat_json(s.remainder, precision);
    j["positive"] = s.positive;
    json a = json::object();
    for (const auto& [q, v] : s.a_values) a[std::to_string(q)] = rat_string(v);
    j["a_values"] = std::move(a);
    json k = json::object();
    for (const auto& [p, kp] : s.k_map) k[std::to_string(p)] = kp;
    j["k_map"] = std::move(k);
    return j;
}

json to_json(const ProbabilityReport& r, int precision) {
    json j;
    j["prob3"] = rat_json(r.prob3_value, precision);
    j["prob1_at_7"] = rat_json(r.prob1_at_7, precision);
    json p2 = json::object();
    for (const auto& [p, v] : r.prob2_per_prime)
        p2[std::to_string(p)] = rat_json(v, precision);
    j["prob2_per_prime"] = std::move(p2);
    j["prob2_cut"] = r.prob2_cut;
    j["prob1_cut"] = r.prob1_cut;
    j["prob1_tail"] = interval_json(r.prob1_tail, precision);
    j["prob2_tail"] = interval_json(r.prob2_tail, precision);
    j["prob1_lower"] = rat_json(r.prob1_lower, precision);
    j["prob2_lower"] = rat_json(r.prob2_lower, precision);
    j["lower"] = rat_json(r.lower, precision);
    j["upper"] = rat_json(r.upper, precision);
    j["interval_4dp"] = {render_decimal(r.lower, 4), render_decimal(r.upper, 4)};
    return j;
}

json to_json(const MonteCarloResult& r, int precision) {
    json j;
    j["p"] = r.p;
    j["condition"] = condition_name(r.condition);
    j["trials"] = r.trials;
    j["successes"] = r.successes;
    j["seed"] = r.seed;
    j["exact"] = rat_json(r.exact, precision);
    j["frequency"] = r.frequency;
    j["sigma"] = r.sigma;
    j["within_3sigma"] = r.within_3sigma;
    return j;
}

json to_json(const OptimizationResult& r) {
    json j;
    j["delta"] = rat_string(r.delta_star);
    j["optimal_exponent"] = rat_string(r.optimal_exponent);
    j["lambda_exponent"] = r.lambda_exponent;
    j["active"] = r.active;
    j["boundary"] = r.boundary;
    if (r.boundary) j["boundary_side"] = r.boundary_side;
    j["delta_below_interval_end"] = r.delta_below_interval_end;
    j["p0_first_branch_threshold"] = rat_string(r.p0_first_branch_threshold);
    j["p0_first_branch_ok"] = r.p0_first_branch_ok;
    return j;
}

json to_json(const SearchResult& r) {
    json j;
    j["strategy"] = strategy_name(r.strategy);
    j["nodes_explored"] = r.nodes_explored;
    if (r.solution) {
        json sol = json::array();
        for (const auto& v : *r.solution) sol.push_back(int_json(v));
        j["solution"] = std::move(sol);
        j["sup_norm"] = int_json(r.sup_norm);
    } else {
        j["solution"] = nullptr;
    }
    return j;
}

json to_json(const LambdaProfile& p) {
    json j;
    json rows = json::array();
    for (const auto& r : p.rows) {
        json row;
        row["strategy"] = r.strategy;
        row["bound"] = r.bound;
        row["nodes"] = r.nodes;
        if (r.best_sup_norm) row["best_sup_norm"] = int_json(*r.best_sup_norm);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    if (p.best_sup_norm) j["best_sup_norm"] = int_json(*p.best_sup_norm);
    j["theorem_bound"] = int_json(p.theorem_bound);
    j["within_theorem_bound"] = p.within_theorem_bound;
    return j;
}

} // namespace cubicpair
