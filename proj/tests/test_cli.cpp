#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "kacpal/cli.hpp"
#include "kacpal/report.hpp"

using namespace kacpal;

namespace {

struct Run {
    int code;
    Json report;
};

Run run_cli(std::vector<std::string> args) {
    const auto path = std::filesystem::temp_directory_path() / "kacpal_cli_test.json";
    std::filesystem::remove(path);
    args.insert(args.begin(), "kacpal");
    args.push_back("--out");
    args.push_back(path.string());
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    const int code = cli::run(static_cast<int>(argv.size()), argv.data());
    Json j;
    if (std::filesystem::exists(path)) {
        std::ifstream f(path);
        j = Json::parse(f);
    }
    return {code, j};
}

bool has_check(const Json& report, const std::string& name, bool pass) {
    for (const auto& c : report["checks"])
        if (c["name"] == name) return c["pass"] == pass;
    return false;
}

}  // namespace

TEST_CASE("verify H_8 over all pairs") {
    Run r = run_cli({"verify", "2", "2", "--scope", "all"});
    CHECK(r.code == 0);
    CHECK(r.report["passed"] == true);
    CHECK(r.report["result"]["dim"] == 8);
    CHECK(r.report["config"]["scope"] == "all");
    CHECK(r.report["schema"] == kReportSchema);
    CHECK(r.report["field"]["N"] == 4);
    CHECK(has_check(r.report, "associativity", true));
    CHECK(has_check(r.report, "integral.integral_counit", true));
}

TEST_CASE("flags can replace positionals") {
    Run r = run_cli({"verify", "--n", "3", "--m", "2"});
    CHECK(r.code == 0);
    CHECK(r.report["result"]["dim"] == 18);
}

TEST_CASE("negative controls give exit code 1") {
    Run r = run_cli({"verify", "2", "3", "--scope", "sampled:50", "--mutate", "drop-gamma-s1s1"});
    CHECK(r.code == 1);
    CHECK(has_check(r.report, "associativity", false));
    Run t = run_cli({"module-algebra-check", "2", "2", "1", "0", "--degree", "2", "--drop-twist"});
    CHECK(t.code == 1);
    CHECK(has_check(t.report, "module_algebra_generators", false));
}

TEST_CASE("usage errors and refusals") {
    CHECK(run_cli({"verify", "2"}).code == 2);
    CHECK(run_cli({"verify", "1", "2"}).code == 2);
    CHECK(run_cli({"verify", "2", "2", "--scope", "some"}).code == 2);
    CHECK(run_cli({"verify", "2", "2", "--format", "xml"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"invariants", "2", "2", "1", "0", "--subalgebra", "half"}).code == 2);
    CHECK(run_cli({"verify", "4", "4", "--scope", "all"}).code == 3);
    CHECK(run_cli({"inner-faithful", "2", "13", "1", "0", "--bruteforce"}).code == 2);
    CHECK(run_cli({"inner-faithful", "4", "7", "1", "0", "--bruteforce"}).code == 3);
    CHECK(run_cli({"export", "4", "4"}).code == 3);
}

TEST_CASE("reports are deterministic apart from timings") {
    Run a = run_cli({"verify", "2", "3", "--scope", "sampled:200", "--seed", "9"});
    Run b = run_cli({"verify", "2", "3", "--scope", "sampled:200", "--seed", "9"});
    CHECK(a.code == 0);
    a.report.erase("timings");
    b.report.erase("timings");
    CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("gamma-table for m = 3") {
    Run r = run_cli({"gamma-table", "2", "3"});
    CHECK(r.code == 0);
    CHECK(r.report["result"]["table"].size() == 36);
    const Json expect = to_json(t_of(2, 3, 1));
    bool found = false;
    for (const auto& cell : r.report["result"]["table"])
        if (cell["w"] == "s1" && cell["v"] == "s1") {
            found = true;
            CHECK(cell["gamma"] == expect);
        }
    CHECK(found);
    CHECK(r.report["result"]["closed_form_table"].size() == 25);
    CHECK(has_check(r.report, "closed_form_table", true));
}

TEST_CASE("twist-check") {
    Run r = run_cli({"twist-check", "3", "--search", "20"});
    CHECK(r.code == 0);
    CHECK(r.report["result"]["conditions"].size() == 7);
    CHECK(r.report["result"]["search"]["candidates"] == 20);
}

TEST_CASE("representation commands") {
    Run r = run_cli({"rep-check", "2", "2", "1", "0"});
    CHECK(r.code == 0);
    CHECK(r.report["result"]["simple"] == true);
    CHECK(r.report["result"]["X"][0][0][0] == Json::array({"-1/1", "0/1"}));

    Run f = run_cli({"inner-faithful", "2", "2", "1", "1", "--bruteforce"});
    CHECK(f.code == 0);
    CHECK(f.report["result"]["criterion"] == false);
    CHECK(f.report["result"]["bruteforce"]["inner_faithful"] == false);
    CHECK(f.report["result"]["bruteforce"]["subgroup_count"] == 5);
}

TEST_CASE("invariants command") {
    Run r = run_cli({"invariants", "2", "2", "1", "0", "--degree", "4"});
    CHECK(r.code == 0);
    std::vector<int> dims;
    for (const auto& d : r.report["result"]["degrees"]) dims.push_back(d["dim"].get<int>());
    CHECK(dims == std::vector<int>{1, 0, 1, 0, 2});
    CHECK(r.report["result"]["degrees"][2]["text"][0] == "u1^2 + u2^2");
}

TEST_CASE("export and embed-check") {
    Run r = run_cli({"export", "2", "2"});
    CHECK(r.code == 0);
    CHECK(r.report["result"]["mul"].size() == 8);
    CHECK(r.report["result"]["mul"][0].size() == 8);
    for (const auto& e : r.report["result"]["counit"]) CHECK(e == Json::array({"1/1", "0/1"}));
    CHECK(run_cli({"embed-check", "2", "2"}).code == 0);
}
