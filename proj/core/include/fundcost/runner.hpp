#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fundcost/engine.hpp"
#include "fundcost/fva.hpp"
#include "fundcost/optimizer.hpp"
#include "fundcost/scenario.hpp"
#include "fundcost/stats.hpp"

namespace fundcost {

struct RunOptions {
    int threads = 1;  // 0 picks the hardware concurrency
    bool verbose = false;
};

// Wall-clock and sizing facts about a run. Excluded from reproducibility
// comparisons, which cover config and results only.
struct RuntimeInfo {
    double wall_seconds = 0.0;
    std::size_t n_paths = 0;
    int threads = 1;
};

// One sweep entry: the swept level, the quote it was priced under, and the
// priced components.
struct SweepRow {
    double level = 0.0;
    double maturity_years = 0.0;
    double alpha = 0.0;
    FvaResult result;
};

// Time profiles of the funding state under both debt rules, with per-step
// Monte Carlo standard errors, plus the distribution of the standard-rule
// NSFR as per-step histogram counts (row-major, times by buckets, the last
// bucket catching everything at or above histogram_max).
struct NsfrProfileResult {
    std::vector<double> times;
    std::vector<McEstimate> nsfr_standard;
    std::vector<McEstimate> nsfr_pinned;
    std::vector<McEstimate> debt_standard;
    std::vector<McEstimate> debt_pinned;
    int histogram_buckets = 0;  // uniform buckets, excluding the overflow
    double histogram_max = 0.0;
    std::vector<std::uint64_t> histogram;
};

// Cost of always rolling one quote, next to the unconstrained baseline of
// funding only the posted margin at that quote's spread.
struct PolicyComparisonRow {
    double maturity_years = 0.0;
    double alpha = 0.0;
    double spread = 0.0;
    McEstimate fixed_cost;
    McEstimate fca_baseline;
};

// Optimal maturity schedule and the comparison table around it. The value
// of optimal_cost is the backward-induction cost; its standard error comes
// from the per-path realizations of the chosen schedule.
struct OptimizeResult {
    FundingPolicy policy;
    std::vector<double> decision_times;      // payment dates where debt is rolled
    std::vector<double> chosen_maturities;   // quoted maturity picked at each
    McEstimate optimal_cost;
    std::vector<PolicyComparisonRow> fixed;
};

struct RunReport {
    ScenarioConfig config;
    std::optional<FvaResult> price;
    std::vector<SweepRow> sweep_rows;
    std::optional<NsfrProfileResult> profile;
    std::optional<OptimizeResult> optimize;
    RuntimeInfo runtime;
};

// Validates and executes one scenario. Identical config and seed produce
// identical results for any thread count.
RunReport run(const ScenarioConfig& config, const RunOptions& options = {});

}  // namespace fundcost
