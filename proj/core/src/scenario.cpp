#include "fundcost/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

namespace fundcost {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument("config: " + message);
}

void require_object(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path + " must be an object");
}

void reject_unknown_keys(const json& node, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : node.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) fail("unknown key '" + item.key() + "' in " + path);
    }
}

double get_number(const json& node, const std::string& path, const char* key, double fallback) {
    if (!node.contains(key)) return fallback;
    const json& value = node.at(key);
    if (!value.is_number()) fail(path + "." + key + " must be a number");
    return value.get<double>();
}

std::optional<double> get_optional_number(const json& node, const std::string& path,
                                          const char* key) {
    if (!node.contains(key)) return std::nullopt;
    const json& value = node.at(key);
    if (!value.is_number()) fail(path + "." + key + " must be a number");
    return value.get<double>();
}

std::uint64_t get_unsigned(const json& node, const std::string& path, const char* key,
                           std::uint64_t fallback) {
    if (!node.contains(key)) return fallback;
    const json& value = node.at(key);
    if (!value.is_number_unsigned()) fail(path + "." + key + " must be a nonnegative integer");
    return value.get<std::uint64_t>();
}

int get_int(const json& node, const std::string& path, const char* key, int fallback) {
    if (!node.contains(key)) return fallback;
    const json& value = node.at(key);
    if (!value.is_number_integer()) fail(path + "." + key + " must be an integer");
    return value.get<int>();
}

bool get_bool(const json& node, const std::string& path, const char* key, bool fallback) {
    if (!node.contains(key)) return fallback;
    const json& value = node.at(key);
    if (!value.is_boolean()) fail(path + "." + key + " must be a boolean");
    return value.get<bool>();
}

}  // namespace

std::string to_string(RunMode mode) {
    switch (mode) {
        case RunMode::price: return "price";
        case RunMode::sweep_ois: return "sweep_ois";
        case RunMode::sweep_spread: return "sweep_spread";
        case RunMode::nsfr_profile: return "nsfr_profile";
        case RunMode::optimize: return "optimize";
    }
    throw std::invalid_argument("to_string: unknown run mode");
}

RunMode parse_run_mode(const std::string& name) {
    if (name == "price") return RunMode::price;
    if (name == "sweep_ois") return RunMode::sweep_ois;
    if (name == "sweep_spread") return RunMode::sweep_spread;
    if (name == "nsfr_profile") return RunMode::nsfr_profile;
    if (name == "optimize") return RunMode::optimize;
    fail("mode must be one of price, sweep_ois, sweep_spread, nsfr_profile, optimize (got '" +
         name + "')");
}

ScenarioConfig parse_scenario(const json& doc) {
    require_object(doc, "document root");
    reject_unknown_keys(doc, "document root",
                        {"schema_version", "mode", "rates", "swap", "balance", "quotes", "sweep",
                         "profile"});

    ScenarioConfig config;

    if (!doc.contains("schema_version")) fail("schema_version is required");
    if (!doc.at("schema_version").is_number_integer())
        fail("schema_version must be an integer");
    config.schema_version = doc.at("schema_version").get<int>();

    if (!doc.contains("mode")) fail("mode is required");
    if (!doc.at("mode").is_string()) fail("mode must be a string");
    config.mode = parse_run_mode(doc.at("mode").get<std::string>());

    if (doc.contains("rates")) {
        const json& rates = doc.at("rates");
        require_object(rates, "rates");
        reject_unknown_keys(rates, "rates",
                            {"r0", "mean_reversion", "long_run_mean", "sigma", "n_paths", "seed",
                             "steps_per_year"});
        config.r0 = get_number(rates, "rates", "r0", config.r0);
        config.mean_reversion = get_number(rates, "rates", "mean_reversion",
                                           config.mean_reversion);
        config.long_run_mean = get_optional_number(rates, "rates", "long_run_mean");
        config.sigma = get_number(rates, "rates", "sigma", config.sigma);
        config.n_paths = static_cast<std::size_t>(
            get_unsigned(rates, "rates", "n_paths", config.n_paths));
        config.seed = get_unsigned(rates, "rates", "seed", config.seed);
        config.steps_per_year = get_int(rates, "rates", "steps_per_year", config.steps_per_year);
    }

    if (doc.contains("swap")) {
        const json& swap = doc.at("swap");
        require_object(swap, "swap");
        reject_unknown_keys(swap, "swap",
                            {"notional", "fixed_rate", "maturity_years", "pay_fixed",
                             "payments_per_year", "im_fraction"});
        config.swap.notional = get_number(swap, "swap", "notional", config.swap.notional);
        config.swap.fixed_rate = get_number(swap, "swap", "fixed_rate", config.swap.fixed_rate);
        config.swap.maturity_years =
            get_number(swap, "swap", "maturity_years", config.swap.maturity_years);
        config.swap.pay_fixed = get_bool(swap, "swap", "pay_fixed", config.swap.pay_fixed);
        config.swap.payments_per_year =
            get_int(swap, "swap", "payments_per_year", config.swap.payments_per_year);
        config.im_fraction = get_number(swap, "swap", "im_fraction", config.im_fraction);
    }

    // Regulatory capital defaults to 0.5% of the resolved notional, so the
    // swap block is read first.
    config.reg_capital = 0.005 * config.swap.notional;
    if (doc.contains("balance")) {
        const json& balance = doc.at("balance");
        require_object(balance, "balance");
        reject_unknown_keys(balance, "balance",
                            {"reg_capital", "liability_floor", "one_year_alpha"});
        config.reg_capital = get_number(balance, "balance", "reg_capital", config.reg_capital);
        config.liability_floor =
            get_number(balance, "balance", "liability_floor", config.liability_floor);
        config.one_year_alpha =
            get_number(balance, "balance", "one_year_alpha", config.one_year_alpha);
    }

    if (doc.contains("quotes")) {
        const json& quotes = doc.at("quotes");
        if (!quotes.is_array()) fail("quotes must be an array");
        for (std::size_t i = 0; i < quotes.size(); ++i) {
            const std::string path = "quotes[" + std::to_string(i) + "]";
            const json& entry = quotes.at(i);
            require_object(entry, path);
            reject_unknown_keys(entry, path,
                                {"maturity_years", "spread", "shortfall_spread", "alpha"});
            QuoteConfig quote;
            if (!entry.contains("maturity_years")) fail(path + ".maturity_years is required");
            if (!entry.contains("spread")) fail(path + ".spread is required");
            quote.maturity_years = get_number(entry, path, "maturity_years", 0.0);
            quote.spread = get_number(entry, path, "spread", 0.0);
            quote.shortfall_spread = get_optional_number(entry, path, "shortfall_spread");
            quote.alpha = get_optional_number(entry, path, "alpha");
            config.quotes.push_back(quote);
        }
    }

    if (doc.contains("sweep")) {
        const json& sweep = doc.at("sweep");
        require_object(sweep, "sweep");
        reject_unknown_keys(sweep, "sweep",
                            {"levels", "alpha_boundary_spread", "short_maturity",
                             "long_maturity"});
        SweepConfig block;
        if (!sweep.contains("levels")) fail("sweep.levels is required");
        const json& levels = sweep.at("levels");
        if (!levels.is_array()) fail("sweep.levels must be an array");
        for (std::size_t i = 0; i < levels.size(); ++i) {
            if (!levels.at(i).is_number())
                fail("sweep.levels[" + std::to_string(i) + "] must be a number");
            block.levels.push_back(levels.at(i).get<double>());
        }
        block.alpha_boundary_spread =
            get_number(sweep, "sweep", "alpha_boundary_spread", block.alpha_boundary_spread);
        block.short_maturity = get_number(sweep, "sweep", "short_maturity", block.short_maturity);
        block.long_maturity = get_number(sweep, "sweep", "long_maturity", block.long_maturity);
        config.sweep = block;
    }

    if (doc.contains("profile")) {
        const json& profile = doc.at("profile");
        require_object(profile, "profile");
        reject_unknown_keys(profile, "profile", {"histogram_buckets", "histogram_max"});
        ProfileConfig block;
        block.histogram_buckets =
            get_int(profile, "profile", "histogram_buckets", block.histogram_buckets);
        block.histogram_max = get_number(profile, "profile", "histogram_max", block.histogram_max);
        config.profile = block;
    }

    return config;
}

ScenarioConfig parse_scenario_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str());
}

void validate_scenario(const ScenarioConfig& config) {
    if (config.schema_version != 1)
        fail("schema_version must be 1 (got " + std::to_string(config.schema_version) + ")");

    vasicek_params(config).validate();
    config.swap.validate();
    balance_config(config).validate();

    if (config.n_paths == 0) fail("rates.n_paths must be positive");
    if (config.steps_per_year <= 0) fail("rates.steps_per_year must be > 0");
    if (config.steps_per_year % config.swap.payments_per_year != 0)
        fail("rates.steps_per_year must be a multiple of swap.payments_per_year");
    if (config.im_fraction < 0.0) fail("swap.im_fraction must be >= 0");

    const bool needs_quotes = config.mode == RunMode::price ||
                              config.mode == RunMode::sweep_ois ||
                              config.mode == RunMode::nsfr_profile ||
                              config.mode == RunMode::optimize;
    if (needs_quotes && config.quotes.empty())
        fail("quotes must be non-empty for mode '" + to_string(config.mode) + "'");
    for (std::size_t i = 0; i < config.quotes.size(); ++i) {
        try {
            resolve_quote(config, config.quotes[i]);
        } catch (const std::invalid_argument& e) {
            fail("quotes[" + std::to_string(i) + "]: " + e.what());
        }
    }

    const bool needs_sweep =
        config.mode == RunMode::sweep_ois || config.mode == RunMode::sweep_spread;
    if (needs_sweep) {
        if (!config.sweep.has_value())
            fail("sweep block is required for mode '" + to_string(config.mode) + "'");
        if (config.sweep->levels.empty()) fail("sweep.levels must be non-empty");
    }
    if (config.sweep.has_value()) {
        const SweepConfig& sweep = *config.sweep;
        if (sweep.alpha_boundary_spread <= 0.0) fail("sweep.alpha_boundary_spread must be > 0");
        if (config.mode == RunMode::sweep_spread) {
            for (std::size_t i = 0; i < sweep.levels.size(); ++i) {
                if (sweep.levels[i] < 0.0)
                    fail("sweep.levels[" + std::to_string(i) + "] must be >= 0 for spread sweeps");
            }
            const WeightSchedule weights = weight_schedule(config);
            const double period = 1.0 / config.swap.payments_per_year;
            for (double maturity : {sweep.short_maturity, sweep.long_maturity}) {
                const double periods = maturity / period;
                if (maturity < 0.5 ||
                    std::abs(periods - std::llround(periods)) > 1e-9)
                    fail("sweep maturities must be at least six months and a whole number of "
                         "payment periods");
                weights.asf_weight(maturity);
            }
        }
    }

    if (config.profile.has_value()) {
        if (config.profile->histogram_buckets < 1) fail("profile.histogram_buckets must be >= 1");
        if (config.profile->histogram_max <= 0.0) fail("profile.histogram_max must be > 0");
    }
}

nlohmann::json scenario_to_json(const ScenarioConfig& config) {
    json rates{{"r0", config.r0},
               {"mean_reversion", config.mean_reversion},
               {"sigma", config.sigma},
               {"n_paths", config.n_paths},
               {"seed", config.seed},
               {"steps_per_year", config.steps_per_year}};
    if (config.long_run_mean.has_value()) rates["long_run_mean"] = *config.long_run_mean;

    json doc{{"schema_version", config.schema_version},
             {"mode", to_string(config.mode)},
             {"rates", rates},
             {"swap",
              {{"notional", config.swap.notional},
               {"fixed_rate", config.swap.fixed_rate},
               {"maturity_years", config.swap.maturity_years},
               {"pay_fixed", config.swap.pay_fixed},
               {"payments_per_year", config.swap.payments_per_year},
               {"im_fraction", config.im_fraction}}},
             {"balance",
              {{"reg_capital", config.reg_capital},
               {"liability_floor", config.liability_floor},
               {"one_year_alpha", config.one_year_alpha}}}};

    json quotes = json::array();
    for (const QuoteConfig& quote : config.quotes) {
        json entry{{"maturity_years", quote.maturity_years}, {"spread", quote.spread}};
        if (quote.shortfall_spread.has_value()) entry["shortfall_spread"] = *quote.shortfall_spread;
        if (quote.alpha.has_value()) entry["alpha"] = *quote.alpha;
        quotes.push_back(entry);
    }
    doc["quotes"] = quotes;

    if (config.sweep.has_value()) {
        doc["sweep"] = {{"levels", config.sweep->levels},
                        {"alpha_boundary_spread", config.sweep->alpha_boundary_spread},
                        {"short_maturity", config.sweep->short_maturity},
                        {"long_maturity", config.sweep->long_maturity}};
    }
    if (config.profile.has_value() || config.mode == RunMode::nsfr_profile) {
        const ProfileConfig block = config.profile.value_or(ProfileConfig{});
        doc["profile"] = {{"histogram_buckets", block.histogram_buckets},
                          {"histogram_max", block.histogram_max}};
    }
    return doc;
}

VasicekParams vasicek_params(const ScenarioConfig& config) {
    VasicekParams params;
    params.r0 = config.r0;
    params.mean_reversion = config.mean_reversion;
    params.long_run_mean = config.long_run_mean.value_or(config.r0);
    params.sigma = config.sigma;
    return params;
}

BalanceConfig balance_config(const ScenarioConfig& config) {
    BalanceConfig balance;
    balance.reg_capital = config.reg_capital;
    balance.liability_floor = config.liability_floor;
    balance.one_year_alpha = config.one_year_alpha;
    return balance;
}

WeightSchedule weight_schedule(const ScenarioConfig& config) {
    return WeightSchedule{config.one_year_alpha};
}

EngineConfig engine_config(const ScenarioConfig& config) {
    EngineConfig engine;
    engine.rates = vasicek_params(config);
    engine.swap = config.swap;
    engine.im_fraction = config.im_fraction;
    engine.balance = balance_config(config);
    engine.steps_per_year = config.steps_per_year;
    engine.n_paths = config.n_paths;
    engine.seed = config.seed;
    return engine;
}

FundingQuote resolve_quote(const ScenarioConfig& config, const QuoteConfig& quote) {
    const double period = 1.0 / config.swap.payments_per_year;
    const double periods = quote.maturity_years / period;
    if (std::abs(periods - std::llround(periods)) > 1e-9 || periods < 1.0 - 1e-9)
        throw std::invalid_argument(
            "maturity_years must be a whole number of payment periods");

    const WeightSchedule weights = weight_schedule(config);
    FundingQuote resolved = make_quote(quote.maturity_years, quote.spread, weights,
                                       quote.shortfall_spread);
    if (quote.alpha.has_value()) {
        if (*quote.alpha != 0.5 && *quote.alpha != 1.0)
            throw std::invalid_argument("alpha must be 0.5 or 1.0");
        if (*quote.alpha != resolved.alpha)
            throw std::invalid_argument("alpha is inconsistent with the maturity bucket");
    }
    return resolved;
}

}  // namespace fundcost
