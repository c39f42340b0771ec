#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubicpair {

// One verification criterion with its hard-coded tolerance and budget.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
    double budget_ms = 0.0;
};

// Runs the full built-in verification suite. Every threshold is fixed here in
// code; a failure is reported, never loosened. When `progress` is non-null a
// PASS/FAIL line per criterion is streamed as results arrive.
std::vector<CriterionResult> run_acceptance(std::ostream* progress);

// True iff every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

} // namespace cubicpair
