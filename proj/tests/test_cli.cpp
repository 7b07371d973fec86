#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"

using json = nlohmann::json;

namespace {

const std::string cli = FUNDCOST_CLI_PATH;
const std::string config_dir = FUNDCOST_CONFIG_DIR;

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    const std::filesystem::path capture =
        std::filesystem::temp_directory_path() / "fundcost_cli_output.txt";
    const std::string command = cli + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(command.c_str());

    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    std::filesystem::remove(capture);
    return result;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    json doc;
    in >> doc;
    return doc;
}

}  // namespace

TEST_CASE("cli: validate accepts the shipped configs") {
    for (const char* name : {"price_default.json", "sweep_ois.json", "sweep_spread.json",
                             "nsfr_profile.json", "optimize.json"}) {
        const CliResult result = run_cli("validate --config " + config_dir + "/" + name);
        CHECK(result.exit_code == 0);
        CHECK(result.output.find("config ok") != std::string::npos);
    }
}

TEST_CASE("cli: missing and malformed configs fail with a diagnostic") {
    const CliResult missing = run_cli("validate --config /tmp/fundcost_no_such_config.json");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("error:") != std::string::npos);

    const std::filesystem::path bad =
        std::filesystem::temp_directory_path() / "fundcost_bad_config.json";
    std::ofstream(bad) << R"({"schema_version": 1, "mode": "price", "typo": true})";
    const CliResult rejected = run_cli("validate --config " + bad.string());
    CHECK(rejected.exit_code == 1);
    CHECK(rejected.output.find("unknown key 'typo'") != std::string::npos);
    std::filesystem::remove(bad);

    const CliResult no_args = run_cli("run");
    CHECK(no_args.exit_code != 0);
}

TEST_CASE("cli: run writes the requested report") {
    const std::filesystem::path out =
        std::filesystem::temp_directory_path() / "fundcost_cli_run";
    std::filesystem::remove_all(out);

    const CliResult result = run_cli("run --config " + config_dir +
                                     "/price_default.json --paths 500 --out " + out.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("fva_total") != std::string::npos);

    const json report = load_json(out / "report.json");
    CHECK(report["mode"] == "price");
    CHECK(report["config"]["rates"]["n_paths"] == 500);
    CHECK(report["results"]["price"]["fva_total"]["value"].get<double>() > 0.0);
    std::filesystem::remove_all(out);
}

TEST_CASE("cli: overrides land in the config echo") {
    const std::filesystem::path out =
        std::filesystem::temp_directory_path() / "fundcost_cli_override";
    std::filesystem::remove_all(out);

    const CliResult result =
        run_cli("run --config " + config_dir + "/price_default.json --paths 400 --seed 7" +
                " --mode nsfr_profile --format json --out " + out.string());
    CHECK(result.exit_code == 0);

    const json report = load_json(out / "report.json");
    CHECK(report["mode"] == "nsfr_profile");
    CHECK(report["config"]["rates"]["seed"] == 7);
    CHECK(report["config"]["rates"]["n_paths"] == 400);
    CHECK(report["results"].contains("nsfr_profile"));
    std::filesystem::remove_all(out);
}

TEST_CASE("cli: thread count changes nothing but the runtime block") {
    const std::filesystem::path serial_dir =
        std::filesystem::temp_directory_path() / "fundcost_cli_serial";
    const std::filesystem::path threaded_dir =
        std::filesystem::temp_directory_path() / "fundcost_cli_threaded";
    std::filesystem::remove_all(serial_dir);
    std::filesystem::remove_all(threaded_dir);

    const std::string base = "run --config " + config_dir + "/optimize.json --paths 500 ";
    CHECK(run_cli(base + "--threads 1 --out " + serial_dir.string()).exit_code == 0);
    CHECK(run_cli(base + "--threads 4 --out " + threaded_dir.string()).exit_code == 0);

    json serial = load_json(serial_dir / "report.json");
    json threaded = load_json(threaded_dir / "report.json");
    serial.erase("runtime");
    threaded.erase("runtime");
    CHECK(serial.dump() == threaded.dump());
    std::filesystem::remove_all(serial_dir);
    std::filesystem::remove_all(threaded_dir);
}
