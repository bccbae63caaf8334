#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cliquelab/rng.hpp"

namespace cliquelab {

struct SweepConfig {
    std::vector<long long> n_values;
    std::vector<double> p_values;     // explicit probabilities
    std::vector<double> x_exponents;  // p = n^{-x}; may be combined with p_values
    std::vector<std::string> algorithms;  // greedy, dominating, low_p, mid_p, exact
    int trials = 1;
    std::uint64_t master_seed = 0;
    long long clique_cap = 10'000'000;
    long long exact_node_budget = 100'000'000;
    int exact_auto_max_n = 64;
    bool measure_runtime = true;
    std::string output_path;

    static SweepConfig from_json_text(const std::string& text);
    void validate() const;
};

struct ResultRow {
    long long n = 0;
    double p = 0;
    double x_exponent = 0;  // implied exponent -log p / log n
    std::uint64_t seed = 0;
    std::string algorithm;
    int palette = 0;
    bool valid = false;
    int repairs = 0;
    double runtime_ms = 0;
    std::optional<double> predicted_main1;
    double predicted_main2 = 0;
    std::string regime;
    double ratio = 0;
    std::string error;
};

extern const char* kCsvHeader;
std::string to_csv(const ResultRow& row);

std::vector<ResultRow> run_sweep(const SweepConfig& config);
// Timestamp comment line, fixed header, then rows in canonical order.
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

struct LemmaParams {
    std::optional<long long> n;
    std::optional<double> p;
    std::optional<int> trials;
    std::optional<int> sets_per_trial;
    std::optional<int> r;
    std::optional<long long> s;
    std::optional<int> k;
};

struct LemmaReport {
    std::string name;
    bool pass = false;
    long long violations = 0;
    long long total = 0;
    double statistic = 0;  // lemma-specific (fraction, mean deviation, ...)
    std::string details;
};

// name in {xs-dominates, crux, gi-maxdeg, lambda-edges, xs-expectation,
// xs-concentration}
LemmaReport verify_lemma(const std::string& name, const LemmaParams& params, Seed seed);

struct ConjectureRow {
    double p = 0;
    int palette = 0;
    double log_n_over_p = 0;
    double ratio_upper = 0;   // palette / (log n / p)
    double lower_bound = 0;   // best Eq-style lower bound value
    double ratio_lower = 0;   // palette / lower bound
};

std::vector<ConjectureRow> probe_conjecture(long long n, const std::vector<double>& p_grid, Seed seed);

}  // namespace cliquelab
