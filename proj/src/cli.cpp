#include "cubicpair/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cubicpair/acceptance.hpp"
#include "cubicpair/json_io.hpp"
#include "cubicpair/primes.hpp"

namespace cubicpair {

namespace {

constexpr std::uint64_t kDefaultSeed = 20250101; // fixed so default runs reproduce

struct Options {
    std::string input_path;
    std::string inline_pair;
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    int precision = 12;
    bool verbose = false;
};

FormPair load_pair(const Options& opt) {
    if (!opt.inline_pair.empty()) return FormPair::parse(opt.inline_pair);
    if (opt.input_path.empty())
        throw std::invalid_argument("no coefficient pair given (use --input or --pair)");
    std::ifstream in(opt.input_path);
    if (!in) throw std::invalid_argument("cannot open input file: " + opt.input_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return FormPair::parse(buf.str());
}

Variant parse_variant(const std::string& s) {
    if (s == "all") return Variant::all();
    if (s == "nonzero") return Variant::non_zero_all();
    if (s == "witness") return Variant::pair_witness();
    if (s.rfind("zero:", 0) == 0)
        return Variant::fix_zero(static_cast<std::size_t>(std::stoul(s.substr(5))));
    throw std::invalid_argument("unknown variant: " + s +
                                " (expected all | nonzero | zero:<i> | witness)");
}

void emit(std::ostream& out, const json& j, const Options& opt,
          const std::string& text_summary) {
    if (opt.format == "text")
        out << text_summary << "\n";
    else
        out << j.dump(2) << "\n";
}

std::vector<ExponentConstraint> load_constraints(const std::string& path, Rat& lo, Rat& hi) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open constraints file: " + path);
    json j = json::parse(in);
    if (j.contains("interval")) {
        lo = parse_rat(j["interval"].at(0).get<std::string>());
        hi = parse_rat(j["interval"].at(1).get<std::string>());
    }
    std::vector<ExponentConstraint> cs;
    for (const auto& c : j.at("constraints")) {
        ExponentConstraint ec;
        ec.label = c.at("label").get<std::string>();
        ec.exponent.a0 = parse_rat(c.at("num").at(0).get<std::string>());
        ec.exponent.a1 = parse_rat(c.at("num").at(1).get<std::string>());
        ec.exponent.b0 = parse_rat(c.at("den").at(0).get<std::string>());
        ec.exponent.b1 = parse_rat(c.at("den").at(1).get<std::string>());
        ec.lo = lo;
        ec.hi = hi;
        cs.push_back(std::move(ec));
    }
    return cs;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for pairs of diagonal cubic forms"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--input", opt.input_path, "pair file (JSON or CSV)");
    app.add_option("--pair", opt.inline_pair, "inline pair (JSON or CSV)");
    app.add_option("--format", opt.format, "output format: json, csv, text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", opt.seed, "RNG seed (default fixed for reproducibility)");
    app.add_option("--precision", opt.precision, "decimal digits in renderings")
        ->check(CLI::Range(1, 10000));
    app.add_flag("--verbose", opt.verbose, "include passing verdicts in reports");

    auto* cmd_mgood = app.add_subcommand("mgood", "check the M-good condition");

    auto* cmd_arrange =
        app.add_subcommand("arrange", "heavy ratio, A/B split, eta vector, mod-3 reduction");

    auto* cmd_rho = app.add_subcommand("rho", "local solution count mod p^k");
    std::uint64_t rho_p = 0;
    unsigned rho_k = 1;
    std::string rho_variant = "all", rho_method = "auto";
    std::uint64_t rho_max_enum = kEnumerationCap, rho_max_dp_q = kDpModulusCap;
    cmd_rho->add_option("--p", rho_p, "prime")->required();
    cmd_rho->add_option("--k", rho_k, "exponent k (modulus p^k)");
    cmd_rho->add_option("--variant", rho_variant, "all | nonzero | zero:<i> | witness");
    cmd_rho->add_option("--method", rho_method, "auto | dp | brute")
        ->check(CLI::IsMember({"auto", "dp", "brute"}));
    cmd_rho->add_option("--max-enum", rho_max_enum,
                        "feasibility override: enumeration point cap");
    cmd_rho->add_option("--max-dp-q", rho_max_dp_q,
                        "feasibility override: DP modulus cap");

    auto* cmd_mod9 = app.add_subcommand("verify-mod9", "exhaustive mod-9 solvability sweep");

    auto* cmd_lift = app.add_subcommand("verify-lift", "exhaustive lifting-count check");
    std::uint64_t lift_p = 0;
    unsigned lift_k = 1;
    cmd_lift->add_option("--p", lift_p, "prime")->required();
    cmd_lift->add_option("--k", lift_k, "base modulus exponent");

    auto* cmd_series = app.add_subcommand("series", "truncated singular series");
    std::uint64_t series_p0 = 10;
    cmd_series->add_option("--p0", series_p0, "truncation bound P0")->required();

    auto* cmd_prob = app.add_subcommand("prob", "M-good probability computations");
    bool prob_exact = false, prob_interval = false, prob_mc = false;
    std::uint64_t prob_p = 7, prob_trials = 100000;
    cmd_prob->add_flag("--exact", prob_exact, "exact per-prime values");
    cmd_prob->add_flag("--interval", prob_interval, "two-sided bound for P(M-good)");
    cmd_prob->add_flag("--mc", prob_mc, "Monte Carlo cross-check");
    cmd_prob->add_option("--p", prob_p, "prime for --exact / --mc");
    cmd_prob->add_option("--trials", prob_trials, "Monte Carlo trials");

    auto* cmd_opt = app.add_subcommand("optimize", "min-max exponent optimization");
    std::string opt_constraints;
    unsigned opt_grid = 10000;
    cmd_opt->add_option("--constraints", opt_constraints,
                        "JSON constraint file (default: built-in set)");
    cmd_opt->add_option("--grid", opt_grid, "certificate grid points (0 = skip)");

    auto* cmd_search = app.add_subcommand("search", "look for nontrivial integer zeros");
    long search_bound = 20;
    unsigned search_support = 4;
    std::string search_strategy = "profile";
    cmd_search->add_option("--bound", search_bound, "coordinate box bound");
    cmd_search->add_option("--support-size", search_support, "support size for mim");
    cmd_search->add_option("--strategy", search_strategy, "profile | equal-ratio | mim")
        ->check(CLI::IsMember({"profile", "equal-ratio", "mim"}));

    auto* cmd_check =
        app.add_subcommand("paper-check", "run the built-in verification suite");

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_mgood) {
            FormPair fp = load_pair(opt);
            MGoodReport rep = check_mgood(fp, opt.verbose);
            std::string text = std::string(rep.is_mgood ? "M-good" : "not M-good") +
                               " (prime bound " + rep.prime_bound.get_str() + ", " +
                               std::to_string(rep.failures.size()) + " failures)";
            emit(out, to_json(rep), opt, text);
            return 0;
        }
        if (*cmd_arrange) {
            FormPair fp = load_pair(opt);
            json j;
            std::ostringstream text;
            if (auto heavy = detect_heavy_ratio(fp)) {
                j["heavy_ratio"] = {{"ratio", heavy->ratio.str()},
                                    {"indices", heavy->indices}};
                text << "heavy ratio " << heavy->ratio.str() << " x"
                     << heavy->indices.size() << "; ";
            } else {
                PartitionAB part = partition_ab(fp);
                j["partition"] = to_json(part);
                EtaVector eta = eta_vector(fp, part);
                j["eta"] = to_json(eta);
                text << "B pattern " << b_pattern_symbols(part.pattern) << "; ";
            }
            auto classes = ratios_mod_p(fp, 3);
            std::size_t distinct = 0;
            {
                std::map<ProjectiveRatio, int> m;
                for (const auto& cl : classes)
                    if (cl.kind != ProjectiveRatio::Kind::BothZero) m[cl]++;
                distinct = m.size();
            }
            if (distinct <= 1) {
                j["mod3_reduction"] = to_json(rank1_mod3_reduce(fp));
                text << "mod-3 rank <= 1: reduction attached";
            }
            emit(out, j, opt, text.str());
            return 0;
        }
        if (*cmd_rho) {
            FormPair fp = load_pair(opt);
            Variant variant = parse_variant(rho_variant);
            std::uint64_t q = 1;
            for (unsigned i = 0; i < rho_k; ++i) q *= rho_p;
            LocalCount count;
            bool use_dp = rho_method == "dp" ||
                          (rho_method == "auto" && q <= rho_max_dp_q &&
                           variant.kind != Variant::Kind::NonZeroPairWitness);
            count = use_dp ? rho_dp(fp, q, variant, rho_max_dp_q)
                           : rho_bruteforce(fp, rho_p, rho_k, variant, rho_max_enum);
            json j = to_json(count);
            j["method"] = use_dp ? "dp" : "brute";
            emit(out, j, opt,
                 "rho = " + count.value.get_str() + " (" + (use_dp ? "dp" : "brute") + ")");
            return 0;
        }
        if (*cmd_mod9) {
            Mod9Report rep = verify_mod9_lemma();
            emit(out, to_json(rep), opt,
                 std::to_string(rep.tuples_checked) + " tuples, " +
                     std::to_string(rep.failures) + " failures");
            return rep.failures == 0 ? 0 : 1;
        }
        if (*cmd_lift) {
            FormPair fp = load_pair(opt);
            LiftCountReport rep = verify_lifting_count(fp, lift_p, lift_k);
            bool ok = lift_p == 3 ? rep.all_liftable : rep.all_exact;
            emit(out, to_json(rep), opt,
                 std::to_string(rep.qualifying) + "/" + std::to_string(rep.solutions) +
                     " qualifying, " + (ok ? "ok" : "FAILED"));
            return ok ? 0 : 1;
        }
        if (*cmd_series) {
            FormPair fp = load_pair(opt);
            SeriesTruncation s = truncated_series(fp, series_p0);
            if (opt.format == "csv") {
                out << "q,A(q)\n";
                for (const auto& [q, v] : s.a_values) out << q << "," << rat_string(v) << "\n";
                return 0;
            }
            emit(out, to_json(s, opt.precision), opt,
                 "series " + render_decimal(s.truncated_series, opt.precision) +
                     ", euler " + render_decimal(s.euler_product, opt.precision) +
                     ", remainder " + render_decimal(s.remainder, opt.precision));
            return 0;
        }
        if (*cmd_prob) {
            json j;
            std::ostringstream text;
            if (!prob_exact && !prob_interval && !prob_mc) prob_interval = true;
            if (prob_exact) {
                json e;
                e["prob3"] = rat_json(prob3(), opt.precision);
                text << "prob3 = " << render_decimal(prob3(), opt.precision) << "; ";
                if (prob_p % 3 == 2) {
                    e["prob2"] = rat_json(prob2_at(prob_p), opt.precision);
                    text << "prob2(" << prob_p << ") = "
                         << render_decimal(prob2_at(prob_p), opt.precision) << "; ";
                } else if (prob_p % 3 == 1) {
                    e["prob1"] = rat_json(prob1_at(prob_p), opt.precision);
                    text << "prob1(" << prob_p << ") = "
                         << render_decimal(prob1_at(prob_p), opt.precision) << "; ";
                }
                e["p"] = prob_p;
                j["exact"] = std::move(e);
            }
            if (prob_interval) {
                ProbabilityReport rep = prob_mgood_interval();
                j["interval"] = to_json(rep, opt.precision);
                text << "interval [" << render_decimal(rep.lower, 4) << ", "
                     << render_decimal(rep.upper, 4) << "]; ";
            }
            if (prob_mc) {
                Condition cond = prob_p == 3
                                     ? Condition::III
                                     : (prob_p % 3 == 1 ? Condition::I : Condition::II);
                MonteCarloResult mc =
                    monte_carlo_condition(prob_p, cond, prob_trials, opt.seed);
                j["mc"] = to_json(mc, opt.precision);
                text << "mc freq " << mc.frequency << " vs exact "
                     << render_decimal(mc.exact, 6)
                     << (mc.within_3sigma ? " (within 3 sigma)" : " (OUTSIDE 3 sigma)");
            }
            emit(out, j, opt, text.str());
            return 0;
        }
        if (*cmd_opt) {
            Rat lo(0), hi = Rat(1) / Rat(30);
            std::vector<ExponentConstraint> cs =
                opt_constraints.empty() ? build_constraints()
                                        : load_constraints(opt_constraints, lo, hi);
            if (!opt_constraints.empty() && !cs.empty()) {
                lo = cs.front().lo;
                hi = cs.front().hi;
            }
            OptimizationResult res = solve_minmax(cs, lo, hi);
            json j = to_json(res);
            if (opt_grid > 0) j["certified"] = certify(cs, res, opt_grid);
            emit(out, j, opt,
                 "delta = " + rat_string(res.delta_star) + ", exponent " +
                     rat_string(res.optimal_exponent) + ", lambda exponent " +
                     std::to_string(res.lambda_exponent));
            return 0;
        }
        if (*cmd_search) {
            FormPair fp = load_pair(opt);
            json j;
            std::ostringstream text;
            if (search_strategy == "profile") {
                LambdaProfile prof = lambda_profile(fp, search_bound);
                j = to_json(prof);
                if (prof.best_sup_norm)
                    text << "best sup-norm " << prof.best_sup_norm->get_str();
                else
                    text << "no solution in the searched boxes";
            } else if (search_strategy == "equal-ratio") {
                SearchResult r = search_equal_ratio(fp, search_bound);
                j = to_json(r);
                text << (r.solution ? "sup-norm " + r.sup_norm.get_str() : "none");
            } else {
                std::vector<std::size_t> order(fp.n());
                for (std::size_t i = 0; i < fp.n(); ++i) order[i] = i;
                std::stable_sort(order.begin(), order.end(),
                                 [&](std::size_t x, std::size_t y) {
                                     Int mx = std::max(abs(fp.c(x)), abs(fp.d(x)));
                                     Int my = std::max(abs(fp.c(y)), abs(fp.d(y)));
                                     return mx < my;
                                 });
                std::vector<std::size_t> support(
                    order.begin(),
                    order.begin() + std::min<std::size_t>(search_support, fp.n()));
                SearchResult r = search_meet_in_middle(fp, support, search_bound);
                j = to_json(r);
                text << (r.solution ? "sup-norm " + r.sup_norm.get_str() : "none");
            }
            emit(out, j, opt, text.str());
            return 0;
        }
        if (*cmd_check) {
            auto results = run_acceptance(&out);
            bool ok = all_passed(results);
            out << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << " ("
                << results.size() << " run)\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "unknown subcommand\n";
    return 2;
}

} // namespace cubicpair
