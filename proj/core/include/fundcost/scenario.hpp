#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fundcost/balance_sheet.hpp"
#include "fundcost/engine.hpp"
#include "fundcost/fva.hpp"
#include "fundcost/swap.hpp"
#include "fundcost/vasicek.hpp"

namespace fundcost {

enum class RunMode { price, sweep_ois, sweep_spread, nsfr_profile, optimize };

std::string to_string(RunMode mode);
RunMode parse_run_mode(const std::string& name);

// Debt quote as configured. The shortfall spread defaults to the funding
// spread; the ASF weight is derived from the maturity bucket unless stated,
// in which case it must agree with the bucket.
struct QuoteConfig {
    double maturity_years = 1.0;
    double spread = 0.0051;
    std::optional<double> shortfall_spread;
    std::optional<double> alpha;
};

// Parameter sweep block. For spread sweeps, a level above
// alpha_boundary_spread is quoted at the long maturity and at the short
// maturity otherwise, which is how the level selects its ASF weight.
struct SweepConfig {
    std::vector<double> levels;
    double alpha_boundary_spread = 0.005;
    double short_maturity = 1.0;
    double long_maturity = 2.0;
};

// NSFR distribution reporting: uniform buckets over [0, histogram_max) plus
// one overflow bucket.
struct ProfileConfig {
    int histogram_buckets = 50;
    double histogram_max = 3.0;
};

// One scenario as read from a config file. long_run_mean tracks r0 when
// omitted, including when a sweep moves r0, so the echo keeps it omitted.
struct ScenarioConfig {
    int schema_version = 1;
    RunMode mode = RunMode::price;

    double r0 = 0.01;
    double mean_reversion = 0.5;
    std::optional<double> long_run_mean;
    double sigma = 0.01;
    std::size_t n_paths = 10000;
    std::uint64_t seed = 42;
    int steps_per_year = 12;

    SwapSpec swap;
    double im_fraction = 0.01;

    double reg_capital = 500000.0;
    double liability_floor = 10000.0;
    double one_year_alpha = 0.5;

    std::vector<QuoteConfig> quotes;
    std::optional<SweepConfig> sweep;
    std::optional<ProfileConfig> profile;
};

// Parses a config document, rejecting unknown keys and wrong types with the
// offending field path in the message. reg_capital defaults to 0.5% of the
// notional when omitted.
ScenarioConfig parse_scenario(const nlohmann::json& doc);
ScenarioConfig parse_scenario_text(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);

// Semantic validation across fields, including mode-specific requirements.
// Throws std::invalid_argument naming the field.
void validate_scenario(const ScenarioConfig& config);

// Config echo for reports. parse_scenario(scenario_to_json(c)) reproduces c
// exactly; defaulted keys are materialized except the tracking ones noted
// on ScenarioConfig.
nlohmann::json scenario_to_json(const ScenarioConfig& config);

// Resolved pieces consumed by the engine.
VasicekParams vasicek_params(const ScenarioConfig& config);
BalanceConfig balance_config(const ScenarioConfig& config);
WeightSchedule weight_schedule(const ScenarioConfig& config);
EngineConfig engine_config(const ScenarioConfig& config);
FundingQuote resolve_quote(const ScenarioConfig& config, const QuoteConfig& quote);

}  // namespace fundcost
