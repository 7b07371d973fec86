#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "fundcost/scenario.hpp"

using json = nlohmann::json;
using namespace fundcost;

namespace {

std::string minimal_text(const std::string& mode = "price") {
    return R"({"schema_version": 1, "mode": ")" + mode +
           R"(", "quotes": [{"maturity_years": 1.0, "spread": 0.0051}]})";
}

// What the message should carry is the offending field path.
void check_rejects(const std::string& text, const std::string& fragment) {
    try {
        const ScenarioConfig config = parse_scenario_text(text);
        validate_scenario(config);
        FAIL("expected rejection mentioning '" << fragment << "'");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
}

}  // namespace

TEST_CASE("scenario: minimal config fills documented defaults") {
    const ScenarioConfig config = parse_scenario_text(minimal_text());
    validate_scenario(config);

    CHECK(config.mode == RunMode::price);
    CHECK(config.r0 == 0.01);
    CHECK(config.sigma == 0.01);
    CHECK(config.n_paths == 10000);
    CHECK(config.seed == 42);
    CHECK(config.steps_per_year == 12);
    CHECK(config.swap.notional == 100.0e6);
    CHECK(config.swap.fixed_rate == 0.02);
    CHECK(config.im_fraction == 0.01);
    CHECK(config.liability_floor == 10000.0);
    CHECK(config.one_year_alpha == 0.5);
    CHECK_FALSE(config.long_run_mean.has_value());

    // Reg capital defaults to 0.5% of the notional.
    CHECK(config.reg_capital == 500000.0);
    const ScenarioConfig small = parse_scenario_text(
        R"({"schema_version": 1, "mode": "price", "swap": {"notional": 50000000.0},
            "quotes": [{"maturity_years": 1.0, "spread": 0.0051}]})");
    CHECK(small.reg_capital == 250000.0);

    // The long run mean tracks r0 until stated explicitly.
    CHECK(vasicek_params(config).long_run_mean == config.r0);
    const ScenarioConfig shifted = parse_scenario_text(
        R"({"schema_version": 1, "mode": "price", "rates": {"r0": 0.02, "long_run_mean": 0.03},
            "quotes": [{"maturity_years": 1.0, "spread": 0.0051}]})");
    CHECK(vasicek_params(shifted).long_run_mean == 0.03);
}

TEST_CASE("scenario: unknown keys and wrong types are named in the error") {
    check_rejects(R"({"schema_version": 1, "mode": "price", "paths": 10})", "unknown key 'paths'");
    check_rejects(
        R"({"schema_version": 1, "mode": "price", "rates": {"r0": 0.01, "speed": 0.5}})",
        "unknown key 'speed' in rates");
    check_rejects(R"({"schema_version": 1, "mode": "price", "rates": {"r0": "low"}})",
                  "rates.r0 must be a number");
    check_rejects(R"({"schema_version": 1, "mode": "price", "rates": {"n_paths": -5}})",
                  "rates.n_paths");
    check_rejects(R"({"mode": "price"})", "schema_version is required");
    check_rejects(R"({"schema_version": 1})", "mode is required");
    check_rejects(R"({"schema_version": 1, "mode": "warp"})", "mode must be one of");
    check_rejects(R"({"schema_version": 2, "mode": "price"})", "schema_version must be 1");
    check_rejects("{invalid", "invalid JSON");
    check_rejects(R"({"schema_version": 1, "mode": "price", "quotes": [{"spread": 0.005}]})",
                  "quotes[0].maturity_years is required");
}

TEST_CASE("scenario: semantic validation rejects bad field values") {
    check_rejects(
        R"({"schema_version": 1, "mode": "price", "swap": {"notional": -1.0},
            "quotes": [{"maturity_years": 1.0, "spread": 0.0051}]})",
        "notional");
    check_rejects(
        R"({"schema_version": 1, "mode": "price", "balance": {"one_year_alpha": 0.7},
            "quotes": [{"maturity_years": 1.0, "spread": 0.0051}]})",
        "one_year_alpha");
    check_rejects(
        R"({"schema_version": 1, "mode": "price",
            "quotes": [{"maturity_years": 1.0, "spread": -0.001}]})",
        "quotes[0]");
    check_rejects(
        R"({"schema_version": 1, "mode": "price",
            "quotes": [{"maturity_years": 0.75, "spread": 0.0051}]})",
        "whole number of payment periods");
    check_rejects(
        R"({"schema_version": 1, "mode": "price",
            "quotes": [{"maturity_years": 1.0, "spread": 0.0051, "alpha": 1.0}]})",
        "inconsistent with the maturity bucket");
    check_rejects(R"({"schema_version": 1, "mode": "optimize", "quotes": []})",
                  "quotes must be non-empty for mode 'optimize'");
    check_rejects(R"({"schema_version": 1, "mode": "sweep_spread"})",
                  "sweep block is required");
    check_rejects(
        R"({"schema_version": 1, "mode": "sweep_spread", "sweep": {"levels": []}})",
        "sweep.levels must be non-empty");
    check_rejects(
        R"({"schema_version": 1, "mode": "sweep_spread", "sweep": {"levels": [-0.001]}})",
        "sweep.levels[0]");
    check_rejects(
        R"({"schema_version": 1, "mode": "sweep_spread",
            "sweep": {"levels": [0.005], "short_maturity": 0.25}})",
        "at least six months");
    check_rejects(
        R"({"schema_version": 1, "mode": "nsfr_profile",
            "quotes": [{"maturity_years": 2.0, "spread": 0.0051}],
            "profile": {"histogram_buckets": 0}})",
        "histogram_buckets");
}

TEST_CASE("scenario: quote resolution derives the weight from the bucket") {
    const ScenarioConfig config = parse_scenario_text(minimal_text());

    QuoteConfig quote;
    quote.maturity_years = 2.0;
    quote.spread = 0.0052;
    const FundingQuote resolved = resolve_quote(config, quote);
    CHECK(resolved.alpha == 1.0);
    CHECK(resolved.shortfall_spread == 0.0052);

    quote.maturity_years = 1.0;
    CHECK(resolve_quote(config, quote).alpha == 0.5);
    quote.alpha = 0.5;
    CHECK(resolve_quote(config, quote).alpha == 0.5);

    quote.shortfall_spread = 0.0060;
    CHECK(resolve_quote(config, quote).shortfall_spread == 0.0060);

    ScenarioConfig full = config;
    full.one_year_alpha = 1.0;
    quote = QuoteConfig{};
    quote.maturity_years = 1.0;
    CHECK(resolve_quote(full, quote).alpha == 1.0);
}

TEST_CASE("scenario: config echo round trips exactly") {
    ScenarioConfig config = parse_scenario_text(minimal_text("sweep_ois"));
    config.sweep = SweepConfig{{0.005, 0.01, 0.015}, 0.005, 1.0, 2.0};
    validate_scenario(config);

    const json echo = scenario_to_json(config);
    const ScenarioConfig reparsed = parse_scenario(echo);
    validate_scenario(reparsed);
    CHECK(scenario_to_json(reparsed).dump() == echo.dump());

    // Omitted tracking fields stay omitted, stated ones stay stated.
    CHECK_FALSE(echo["rates"].contains("long_run_mean"));
    CHECK_FALSE(echo["quotes"][0].contains("shortfall_spread"));
    CHECK_FALSE(echo["quotes"][0].contains("alpha"));

    ScenarioConfig stated = config;
    stated.long_run_mean = 0.02;
    stated.quotes[0].alpha = 0.5;
    stated.quotes[0].shortfall_spread = 0.006;
    const json stated_echo = scenario_to_json(stated);
    CHECK(stated_echo["rates"]["long_run_mean"] == 0.02);
    CHECK(stated_echo["quotes"][0]["alpha"] == 0.5);
    const ScenarioConfig stated_reparsed = parse_scenario(stated_echo);
    CHECK(scenario_to_json(stated_reparsed).dump() == stated_echo.dump());
}

TEST_CASE("scenario: shipped configs parse and validate") {
    const std::string dir = FUNDCOST_CONFIG_DIR;
    for (const char* name : {"price_default.json", "sweep_ois.json", "sweep_spread.json",
                             "nsfr_profile.json", "optimize.json"}) {
        const ScenarioConfig config = load_scenario_file(dir + "/" + name);
        validate_scenario(config);
        CHECK(config.schema_version == 1);
        CHECK(config.n_paths == 10000);
    }
    CHECK(load_scenario_file(dir + "/sweep_ois.json").mode == RunMode::sweep_ois);
    CHECK(load_scenario_file(dir + "/optimize.json").quotes.size() == 3);
    CHECK_THROWS_AS(load_scenario_file(dir + "/does_not_exist.json"), std::invalid_argument);
}
