#include "cubicpair/mgood.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubicpair/parallel.hpp"
#include "cubicpair/primes.hpp"

namespace cubicpair {

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::I: return "I";
        case Condition::II: return "II";
        case Condition::III: return "III";
    }
    return "?";
}

namespace {

struct ClassTally {
    std::map<ProjectiveRatio, std::size_t> counts; // non-BothZero classes only
    std::size_t both_zero = 0;
};

ClassTally tally(const std::vector<ProjectiveRatio>& classes) {
    ClassTally t;
    for (const auto& cl : classes) {
        if (cl.kind == ProjectiveRatio::Kind::BothZero)
            ++t.both_zero;
        else
            ++t.counts[cl];
    }
    return t;
}

} // namespace

PrimeVerdict condition_i_of_classes(const std::vector<ProjectiveRatio>& classes,
                                    std::uint64_t p) {
    PrimeVerdict v;
    v.p = p;
    v.condition = Condition::I;
    ClassTally t = tally(classes);
    v.both_zero_count = t.both_zero;
    v.distinct_classes = t.counts.size();

    std::size_t worst = t.both_zero;
    std::optional<ProjectiveRatio> worst_class;
    for (const auto& [cl, cnt] : t.counts) {
        if (cnt + t.both_zero > worst) {
            worst = cnt + t.both_zero;
            worst_class = cl;
        }
    }
    v.parallel_count = worst;
    v.satisfied = worst <= 9;
    if (!v.satisfied) v.offending_class = worst_class;
    return v;
}

PrimeVerdict condition_ii_of_classes(const std::vector<ProjectiveRatio>& classes,
                                     std::uint64_t p) {
    PrimeVerdict v;
    v.p = p;
    v.condition = Condition::II;
    ClassTally t = tally(classes);
    v.both_zero_count = t.both_zero;
    v.distinct_classes = t.counts.size();
    v.satisfied = t.counts.size() >= 3;
    return v;
}

PrimeVerdict condition_iii_of_classes(const std::vector<ProjectiveRatio>& classes) {
    PrimeVerdict v;
    v.p = 3;
    v.condition = Condition::III;
    ClassTally t = tally(classes);
    v.both_zero_count = t.both_zero;
    v.distinct_classes = t.counts.size();
    if (t.counts.empty()) {
        v.degenerate_all_both_zero = true;
        v.satisfied = true; // all-0/0 counts as a single ratio
    } else {
        v.satisfied = t.counts.size() == 1 || t.counts.size() >= 3;
    }
    return v;
}

PrimeVerdict check_condition_i(const FormPair& pair, std::uint64_t p) {
    if (p % 3 != 1)
        throw std::invalid_argument("check_condition_i: requires p = 1 mod 3");
    return condition_i_of_classes(ratios_mod_p(pair, p), p);
}

PrimeVerdict check_condition_ii(const FormPair& pair, std::uint64_t p) {
    if (p % 3 != 2)
        throw std::invalid_argument("check_condition_ii: requires p = 2 mod 3");
    return condition_ii_of_classes(ratios_mod_p(pair, p), p);
}

PrimeVerdict check_condition_iii(const FormPair& pair) {
    return condition_iii_of_classes(ratios_mod_p(pair, 3));
}

MGoodReport check_mgood(const FormPair& pair, bool verbose) {
    MGoodReport report;
    report.prime_bound = pair.prime_bound();

    Int bound = report.prime_bound;
    if (bound > Int(100'000'000))
        throw std::domain_error("check_mgood: M^2 exceeds the 1e8 sieve cap");
    PrimeList plist = primes_up_to(bound.get_ui());

    std::vector<PrimeVerdict> verdicts(plist.size() + 1);
    // plain chars, not vector<bool>: slots are written concurrently
    std::vector<char> present(plist.size() + 1, 0);

    // Slot 0 is condition III at p = 3 (always checked, even when M = 1
    // leaves the p <= M^2 loops empty).
    verdicts[0] = check_condition_iii(pair);
    present[0] = 1;

    std::size_t chunks = std::min<std::size_t>(std::max<std::size_t>(plist.size(), 1), 64);
    run_chunks(chunks, [&](std::size_t chunk) {
        for (std::size_t i = chunk; i < plist.size(); i += chunks) {
            std::uint64_t p = plist.primes[i];
            if (plist.mod3[i] == 1) {
                verdicts[i + 1] = check_condition_i(pair, p);
                present[i + 1] = 1;
            } else if (plist.mod3[i] == 2) {
                verdicts[i + 1] = check_condition_ii(pair, p);
                present[i + 1] = 1;
            }
            // p = 3 itself is covered by slot 0.
        }
    });

    std::vector<PrimeVerdict> all;
    for (std::size_t i = 0; i < verdicts.size(); ++i)
        if (present[i]) all.push_back(verdicts[i]);
    std::sort(all.begin(), all.end(),
              [](const PrimeVerdict& a, const PrimeVerdict& b) { return a.p < b.p; });

    for (const auto& v : all)
        if (!v.satisfied) report.failures.push_back(v);
    report.is_mgood = report.failures.empty();
    if (verbose) report.verdicts = std::move(all);
    return report;
}

} // namespace cubicpair
