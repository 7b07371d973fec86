#include "fundcost/report.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fundcost/scenario.hpp"

namespace fundcost {

namespace {

using nlohmann::json;

json estimate_to_json(const McEstimate& estimate) {
    return {{"value", estimate.value}, {"std_error", estimate.std_error}};
}

json fva_to_json(const FvaResult& result) {
    return {{"fva1", estimate_to_json(result.fva1)},
            {"fva2", estimate_to_json(result.fva2)},
            {"fva_total", {{"value", result.fva_total}, {"std_error", result.fva_total_se}}},
            {"fca_baseline", estimate_to_json(result.fca_baseline)},
            {"n_paths", result.n_paths}};
}

json series_to_json(const std::vector<McEstimate>& series) {
    json mean = json::array();
    json std_error = json::array();
    for (const McEstimate& estimate : series) {
        mean.push_back(estimate.value);
        std_error.push_back(estimate.std_error);
    }
    return {{"mean", mean}, {"std_error", std_error}};
}

std::string currency(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

void append_fva_text(std::ostringstream& out, const FvaResult& result) {
    out << "  fva1         " << currency(result.fva1.value) << "  (se "
        << currency(result.fva1.std_error) << ")\n";
    out << "  fva2         " << currency(result.fva2.value) << "  (se "
        << currency(result.fva2.std_error) << ")\n";
    out << "  fva_total    " << currency(result.fva_total) << "  (se "
        << currency(result.fva_total_se) << ")\n";
    out << "  fca_baseline " << currency(result.fca_baseline.value) << "  (se "
        << currency(result.fca_baseline.std_error) << ")\n";
}

void append_fva_csv(std::string& out, const FvaResult& result) {
    out += format_double(result.fva1.value) + "," + format_double(result.fva1.std_error) + ",";
    out += format_double(result.fva2.value) + "," + format_double(result.fva2.std_error) + ",";
    out += format_double(result.fva_total) + "," + format_double(result.fva_total_se) + ",";
    out += format_double(result.fca_baseline.value) + "," +
           format_double(result.fca_baseline.std_error);
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

json report_to_json(const RunReport& report) {
    json results;
    if (report.price.has_value()) results["price"] = fva_to_json(*report.price);
    if (!report.sweep_rows.empty()) {
        json rows = json::array();
        for (const SweepRow& row : report.sweep_rows) {
            json entry = fva_to_json(row.result);
            entry["level"] = row.level;
            entry["maturity_years"] = row.maturity_years;
            entry["alpha"] = row.alpha;
            rows.push_back(entry);
        }
        results["sweep"] = rows;
    }
    if (report.profile.has_value()) {
        const NsfrProfileResult& profile = *report.profile;
        const std::size_t bins = static_cast<std::size_t>(profile.histogram_buckets) + 1;
        json counts = json::array();
        for (std::size_t k = 0; k < profile.times.size(); ++k) {
            json row = json::array();
            for (std::size_t b = 0; b < bins; ++b) row.push_back(profile.histogram[k * bins + b]);
            counts.push_back(row);
        }
        results["nsfr_profile"] = {{"times", profile.times},
                                   {"nsfr_standard", series_to_json(profile.nsfr_standard)},
                                   {"nsfr_pinned", series_to_json(profile.nsfr_pinned)},
                                   {"debt_standard", series_to_json(profile.debt_standard)},
                                   {"debt_pinned", series_to_json(profile.debt_pinned)},
                                   {"histogram",
                                    {{"buckets", profile.histogram_buckets},
                                     {"max", profile.histogram_max},
                                     {"counts", counts}}}};
    }
    if (report.optimize.has_value()) {
        const OptimizeResult& optimize = *report.optimize;
        json fixed = json::array();
        for (const PolicyComparisonRow& row : optimize.fixed) {
            fixed.push_back({{"maturity_years", row.maturity_years},
                             {"alpha", row.alpha},
                             {"spread", row.spread},
                             {"fixed_cost", estimate_to_json(row.fixed_cost)},
                             {"fca_baseline", estimate_to_json(row.fca_baseline)}});
        }
        results["optimize"] = {{"optimal",
                                {{"cost", estimate_to_json(optimize.optimal_cost)},
                                 {"decision_times", optimize.decision_times},
                                 {"maturities", optimize.chosen_maturities}}},
                               {"fixed", fixed}};
    }

    return {{"schema_version", 1},
            {"mode", to_string(report.config.mode)},
            {"config", scenario_to_json(report.config)},
            {"results", results},
            {"runtime",
             {{"wall_seconds", report.runtime.wall_seconds},
              {"n_paths", report.runtime.n_paths},
              {"threads", report.runtime.threads}}}};
}

std::string report_to_text(const RunReport& report) {
    std::ostringstream out;
    out << "mode: " << to_string(report.config.mode) << "\n";
    out << "paths: " << report.runtime.n_paths << "\n";

    if (report.price.has_value()) {
        out << "pricing results\n";
        append_fva_text(out, *report.price);
    }
    if (!report.sweep_rows.empty()) {
        out << "sweep results\n";
        for (const SweepRow& row : report.sweep_rows) {
            char header[128];
            std::snprintf(header, sizeof(header), "level %.4f  maturity %.2fy  alpha %.1f\n",
                          row.level, row.maturity_years, row.alpha);
            out << header;
            append_fva_text(out, row.result);
        }
    }
    if (report.profile.has_value()) {
        const NsfrProfileResult& profile = *report.profile;
        char line[160];
        std::snprintf(line, sizeof(line),
                      "nsfr profile: %zu steps, start %.4f (se %.4f), end %.4f (se %.4f)\n",
                      profile.times.size(), profile.nsfr_standard.front().value,
                      profile.nsfr_standard.front().std_error,
                      profile.nsfr_standard.back().value,
                      profile.nsfr_standard.back().std_error);
        out << line;
    }
    if (report.optimize.has_value()) {
        const OptimizeResult& optimize = *report.optimize;
        out << "optimal maturity schedule\n";
        for (std::size_t a = 0; a < optimize.decision_times.size(); ++a) {
            char line[96];
            std::snprintf(line, sizeof(line), "  t=%.2f  roll %.2fy debt\n",
                          optimize.decision_times[a], optimize.chosen_maturities[a]);
            out << line;
        }
        out << "  optimal cost " << currency(optimize.optimal_cost.value) << "  (se "
            << currency(optimize.optimal_cost.std_error) << ")\n";
        for (const PolicyComparisonRow& row : optimize.fixed) {
            char line[160];
            std::snprintf(line, sizeof(line),
                          "  fixed %.2fy: cost %s (se %s), margin-only baseline %s (se %s)\n",
                          row.maturity_years, currency(row.fixed_cost.value).c_str(),
                          currency(row.fixed_cost.std_error).c_str(),
                          currency(row.fca_baseline.value).c_str(),
                          currency(row.fca_baseline.std_error).c_str());
            out << line;
        }
    }
    return out.str();
}

std::vector<std::pair<std::string, std::string>> report_csv_files(const RunReport& report) {
    std::vector<std::pair<std::string, std::string>> files;

    if (report.price.has_value()) {
        std::string out =
            "fva1,fva1_se,fva2,fva2_se,fva_total,fva_total_se,fca_baseline,fca_baseline_se\n";
        append_fva_csv(out, *report.price);
        out += "\n";
        files.emplace_back("report.csv", out);
    }
    if (!report.sweep_rows.empty()) {
        std::string out =
            "level,maturity_years,alpha,fva1,fva1_se,fva2,fva2_se,fva_total,fva_total_se,"
            "fca_baseline,fca_baseline_se\n";
        for (const SweepRow& row : report.sweep_rows) {
            out += format_double(row.level) + "," + format_double(row.maturity_years) + "," +
                   format_double(row.alpha) + ",";
            append_fva_csv(out, row.result);
            out += "\n";
        }
        files.emplace_back("report.csv", out);
    }
    if (report.profile.has_value()) {
        const NsfrProfileResult& profile = *report.profile;
        std::string series =
            "time,nsfr_standard,nsfr_standard_se,nsfr_pinned,nsfr_pinned_se,debt_standard,"
            "debt_standard_se,debt_pinned,debt_pinned_se\n";
        for (std::size_t k = 0; k < profile.times.size(); ++k) {
            series += format_double(profile.times[k]) + ",";
            series += format_double(profile.nsfr_standard[k].value) + "," +
                      format_double(profile.nsfr_standard[k].std_error) + ",";
            series += format_double(profile.nsfr_pinned[k].value) + "," +
                      format_double(profile.nsfr_pinned[k].std_error) + ",";
            series += format_double(profile.debt_standard[k].value) + "," +
                      format_double(profile.debt_standard[k].std_error) + ",";
            series += format_double(profile.debt_pinned[k].value) + "," +
                      format_double(profile.debt_pinned[k].std_error) + "\n";
        }
        files.emplace_back("nsfr_series.csv", series);

        const std::size_t bins = static_cast<std::size_t>(profile.histogram_buckets) + 1;
        const double width = profile.histogram_max / profile.histogram_buckets;
        std::string grid = "time,bucket,count\n";
        for (std::size_t k = 0; k < profile.times.size(); ++k) {
            for (std::size_t b = 0; b < bins; ++b) {
                const double edge = b + 1 == bins ? profile.histogram_max
                                                  : width * static_cast<double>(b);
                grid += format_double(profile.times[k]) + "," + format_double(edge) + "," +
                        std::to_string(profile.histogram[k * bins + b]) + "\n";
            }
        }
        files.emplace_back("nsfr_histogram.csv", grid);
    }
    if (report.optimize.has_value()) {
        const OptimizeResult& optimize = *report.optimize;
        std::string policy = "decision_time,maturity_years\n";
        for (std::size_t a = 0; a < optimize.decision_times.size(); ++a) {
            policy += format_double(optimize.decision_times[a]) + "," +
                      format_double(optimize.chosen_maturities[a]) + "\n";
        }
        files.emplace_back("policy.csv", policy);

        std::string comparison =
            "policy,maturity_years,alpha,spread,cost,cost_se,fca_baseline,fca_baseline_se\n";
        comparison += "optimal,,,," + format_double(optimize.optimal_cost.value) + "," +
                      format_double(optimize.optimal_cost.std_error) + ",,\n";
        for (const PolicyComparisonRow& row : optimize.fixed) {
            comparison += "fixed," + format_double(row.maturity_years) + "," +
                          format_double(row.alpha) + "," + format_double(row.spread) + "," +
                          format_double(row.fixed_cost.value) + "," +
                          format_double(row.fixed_cost.std_error) + "," +
                          format_double(row.fca_baseline.value) + "," +
                          format_double(row.fca_baseline.std_error) + "\n";
        }
        files.emplace_back("comparison.csv", comparison);
    }
    return files;
}

std::vector<std::string> write_report(const RunReport& report, const std::string& format,
                                      const std::string& out_dir) {
    if (format != "json" && format != "csv" && format != "text" && format != "all")
        throw std::invalid_argument("emit: format must be json, csv, text or all");

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("emit: cannot create directory '" + out_dir + "'");

    const auto write_file = [&](const std::string& name, const std::string& contents) {
        const std::filesystem::path path = std::filesystem::path(out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("emit: cannot write '" + path.string() + "'");
        out << contents;
        if (!out) throw std::runtime_error("emit: cannot write '" + path.string() + "'");
        return path.string();
    };

    std::vector<std::string> written;
    if (format == "json" || format == "all")
        written.push_back(write_file("report.json", report_to_json(report).dump(2) + "\n"));
    if (format == "text" || format == "all")
        written.push_back(write_file("report.txt", report_to_text(report)));
    if (format == "csv" || format == "all") {
        for (const auto& [name, contents] : report_csv_files(report))
            written.push_back(write_file(name, contents));
    }
    return written;
}

}  // namespace fundcost
