#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef KERNELHOM_CLI_PATH
#error "KERNELHOM_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    std::string command = std::string(KERNELHOM_CLI_PATH) + " " + args +
                          " > " + out_path + " 2> cli_stderr.tmp";
    int status = std::system(command.c_str());
    CliResult result;
#ifdef _WIN32
    result.exit_code = status;
#else
    result.exit_code = WEXITSTATUS(status);
#endif
    result.output = slurp(out_path);
    return result;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

const char* kKbJson = R"({"n":2,"measures":[0.5,0.5],"matrix":[[1,0],[0,1]]})";
const char* kKdJson =
    R"({"n":2,"measures":[0.5,0.5],"matrix":[[1,-1],[-1,1]]})";
const char* kHalfJson = R"({"n":1,"measures":[1],"matrix":[[0.5]]})";

}  // namespace

TEST_CASE("verify subcommand on pinned kernels") {
    write_file("kb.json", kKbJson);
    write_file("kd.json", kKdJson);
    write_file("half.json", kHalfJson);

    CliResult main_run = run_cli("verify --graph cycle:3 --kernel kb.json "
                                 "--claim main");
    CHECK(main_run.exit_code == 0);
    auto main_json = nlohmann::json::parse(main_run.output);
    REQUIRE(main_json.is_array());
    REQUIRE(main_json.size() == 1);
    CHECK(main_json[0]["claim_id"] == "main");
    CHECK(main_json[0]["pass"] == true);
    CHECK(std::abs(main_json[0]["slack"].get<double>()) <= 1e-10);

    CliResult common_run = run_cli("verify --graph path:5 --kernel half.json "
                                   "--claim common");
    CHECK(common_run.exit_code == 0);
    auto common_json = nlohmann::json::parse(common_run.output);
    CHECK(std::abs(common_json[0]["slack"].get<double>()) <= 1e-10);

    CliResult cycle_run = run_cli("verify --graph cycle:4 --kernel kd.json "
                                  "--claim even-cycle:4");
    CHECK(cycle_run.exit_code == 0);
    auto cycle_json = nlohmann::json::parse(cycle_run.output);
    CHECK(cycle_json[0]["lhs"].get<double>() == doctest::Approx(1.0));
    CHECK(cycle_json[0]["rhs"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("verify reports every claim under --claim all") {
    write_file("kb.json", kKbJson);
    CliResult all_run =
        run_cli("verify --graph cycle:4 --kernel kb.json --claim all");
    CHECK(all_run.exit_code == 0);
    auto arr = nlohmann::json::parse(all_run.output);
    CHECK(arr.size() == 9);
    for (const auto& r : arr) CHECK(r["pass"] == true);
}

TEST_CASE("csv output has the documented columns") {
    write_file("kb.json", kKbJson);
    CliResult run = run_cli("verify --graph path:3 --kernel kb.json "
                            "--claim identities --format csv");
    CHECK(run.exit_code == 0);
    CHECK(run.output.rfind("claim_id,graph,lhs,rhs,slack,pass,seed,trial\n",
                           0) == 0);

    CliResult spec_csv = run_cli("spectrum --kernel kb.json --format csv");
    CHECK(spec_csv.exit_code == 0);
    CHECK(spec_csv.output.rfind("eigenvalue,weight\n", 0) == 0);
    CHECK(spec_csv.output.find("m,moment,path_density\n") !=
          std::string::npos);
}

TEST_CASE("spectrum subcommand") {
    write_file("kd.json", kKdJson);
    write_file("half.json", kHalfJson);

    CliResult kd_run = run_cli("spectrum --kernel kd.json");
    CHECK(kd_run.exit_code == 0);
    auto kd_json = nlohmann::json::parse(kd_run.output);
    CHECK(kd_json["spectrum"]["eigenvalues"][0].get<double>() ==
          doctest::Approx(1.0));
    CHECK(std::abs(kd_json["spectrum"]["eigenvalues"][1].get<double>()) <=
          1e-12);
    CHECK(kd_json["spectrum"]["residual"].get<double>() ==
          doctest::Approx(1.0));
    REQUIRE(kd_json["moments"].size() == 11);
    CHECK(kd_json["moments"][2]["moment"].get<double>() ==
          doctest::Approx(0.0));

    CliResult half_run = run_cli("spectrum --kernel half.json");
    auto half_json = nlohmann::json::parse(half_run.output);
    CHECK(half_json["spectrum"]["eigenvalues"][0].get<double>() ==
          doctest::Approx(0.5));
    CHECK(half_json["spectrum"]["weights"][0].get<double>() ==
          doctest::Approx(1.0));
    // Moment column must track the path densities.
    for (const auto& row : half_json["moments"]) {
        CHECK(row["moment"].get<double>() ==
              doctest::Approx(row["path_density"].get<double>()));
    }
}

TEST_CASE("usage and validation errors exit with code 2") {
    CHECK(run_cli("verify --graph path:4").exit_code == 2);  // missing flags
    CHECK(run_cli("nonsense").exit_code == 2);

    write_file("kb.json", kKbJson);
    CHECK(run_cli("verify --graph blob --kernel kb.json --claim main")
              .exit_code == 2);
    CHECK(run_cli("verify --graph path:4 --kernel missing.json --claim main")
              .exit_code == 2);
    CHECK(run_cli("verify --graph path:4 --kernel kb.json --claim nope")
              .exit_code == 2);
    CHECK(run_cli("scan --graph path:4 --claim main --trials 0")
              .exit_code == 2);

    write_file("bad.json", R"({"n":1,"measures":[1],"matrix":[[0]],"x":1})");
    CHECK(run_cli("verify --graph path:4 --kernel bad.json --claim main")
              .exit_code == 2);
}

TEST_CASE("verdict failures exit with code 1") {
    write_file("kb.json", kKbJson);
    // Negative tolerance turns exact equalities into failures; the claim
    // machinery and exit-code plumbing must report them.
    CliResult run = run_cli("verify --graph cycle:3 --kernel kb.json "
                            "--claim main --tol=-1");
    CHECK(run.exit_code == 1);
    auto arr = nlohmann::json::parse(run.output);
    CHECK(arr[0]["pass"] == false);
}

TEST_CASE("scan output is byte-identical across runs") {
    CliResult a = run_cli("scan --graph path:5 --trials 40 --n 3 --seed 42 "
                          "--claim all");
    CliResult b = run_cli("scan --graph path:5 --trials 40 --n 3 --seed 42 "
                          "--claim all");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());

    auto summary = nlohmann::json::parse(a.output);
    CHECK(summary["failures"] == 0);
    CHECK(summary["trials"] == 40);

    CliResult c = run_cli("scan --graph path:5 --trials 40 --n 3 --seed 43 "
                          "--claim all");
    CHECK(a.output != c.output);

    CliResult csv = run_cli("scan --graph cycle:5 --trials 10 --n 3 --seed 1 "
                            "--claim nonneg --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("graph,claim,trials,n,seed,signed,bound,", 0) == 0);
}

TEST_CASE("KERNELHOM_TOL environment variable sets the tolerance") {
    write_file("kb.json", kKbJson);
    CliResult run = run_cli("verify --graph path:3 --kernel kb.json "
                            "--claim common --tol 1e-6");
    auto arr = nlohmann::json::parse(run.output);
    CHECK(arr[0]["tolerance"].get<double>() == doctest::Approx(1e-6));

    const std::string out_path = "cli_stdout.tmp";
    std::string command = std::string("KERNELHOM_TOL=1e-4 ") +
                          KERNELHOM_CLI_PATH +
                          " verify --graph path:3 --kernel kb.json "
                          "--claim common > " +
                          out_path + " 2> cli_stderr.tmp";
    REQUIRE(std::system(command.c_str()) == 0);
    auto env_arr = nlohmann::json::parse(slurp(out_path));
    CHECK(env_arr[0]["tolerance"].get<double>() == doctest::Approx(1e-4));
}
