#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pgcodes::suite {

struct Options {
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    /// Deterministic description of what was measured.
    std::vector<std::string> details;
    double seconds = 0.0;
};

CriterionResult hyperoval_counts(const Options& opt);
CriterionResult conic_counts(const Options& opt);
CriterionResult minimum_even_sets(const Options& opt);
CriterionResult counting_formula(const Options& opt);
CriterionResult bound_attainment(const Options& opt);
CriterionResult small_weight_words(const Options& opt);
CriterionResult property_suites(const Options& opt);
CriterionResult construction_soundness(const Options& opt);
CriterionResult out_of_reach(const Options& opt);

/// All criteria in order; `each` is called as soon as one finishes.
std::vector<CriterionResult> run_all(const Options& opt, const std::function<void(const CriterionResult&)>& each = {});

/// "[PASS] 3 title" followed by indented details; timings unless reproducible.
std::string format(const CriterionResult& r, bool reproducible);

}  // namespace pgcodes::suite
