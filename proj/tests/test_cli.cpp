#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef MAXFF_CLI_PATH
#error "MAXFF_CLI_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MAXFF_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("classify prints both counts and exits cleanly") {
    const RunResult r = run_cli("classify --d 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("formula 2, enumeration 2") != std::string::npos);
    CHECK(r.output.find("{ 2 }") != std::string::npos);
}

TEST_CASE("classes is an alias for classify") {
    const RunResult a = run_cli("classify --d 15");
    const RunResult b = run_cli("classes --d 15");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("gap listing includes d + 2 at the finite ramified places") {
    const RunResult r = run_cli("gaps --q 13 --i 1 --place zero");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find(" 9 ") != std::string::npos);
}

TEST_CASE("count reports maximality") {
    const RunResult r = run_cli("count --q 9 --i 1 --method naive");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("226") != std::string::npos);
    CHECK(r.output.find("maximal: yes") != std::string::npos);
}

TEST_CASE("aut names the case that fired") {
    const RunResult r = run_cli("aut --q 13 --i 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("42") != std::string::npos);
    CHECK(r.output.find("i^2 + i + 1 = 0") != std::string::npos);
}

TEST_CASE("json output carries the fixed schema") {
    const RunResult r = run_cli("count --q 13 --i 1 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["command"] == "count");
    CHECK(doc["params"]["q"] == 13);
    CHECK(doc["results"]["places"] == 482);
    CHECK(doc["results"]["maximal"] == true);
    REQUIRE(doc["checks"].is_array());
    CHECK(doc["checks"][0]["pass"] == true);
    CHECK(doc["checks"][0].contains("name"));
    CHECK(doc["checks"][0].contains("detail"));
}

TEST_CASE("identical invocations give byte-identical output") {
    const std::string args = "verify --q 9 --format json";
    CHECK(run_cli(args).output == run_cli(args).output);
}

TEST_CASE("maps reports relation checks for a congruent pair") {
    const RunResult r = run_cli("maps --q 13 --i 1 --j 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("sweep runs the counting cross-checks") {
    const RunResult r = run_cli("sweep --max-d 99");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("values agree") != std::string::npos);
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(run_cli("count --q 11 --i 1").exit_code == 2);       // q = 3 (mod 4)
    CHECK(run_cli("count --q 13 --i 7").exit_code == 2);       // index reduces to 0
    CHECK(run_cli("gaps --q 13 --i 1 --place bad").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("classify").exit_code == 2);                 // missing --d
}

TEST_CASE("help is not an error") {
    CHECK(run_cli("--help").exit_code == 0);
}
