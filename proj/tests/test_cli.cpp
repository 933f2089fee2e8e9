#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int status;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(QSC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_CASE("verify: all pass gives exit 0 and valid json") {
    CliResult r = run_cli("verify --statement guo_c --n 3,5 --trials 1 --seed 42");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["tool"] == "qsc");
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["records"].size() == 4);  // 2 n values x both modes
}

TEST_CASE("verify: applicability error gives exit 2") {
    CliResult r = run_cli("verify --statement guo_conj --n 5");
    CHECK(r.status == 2);

    CliResult even = run_cli("verify --statement guo_c --n 4");
    CHECK(even.status == 2);

    CliResult unknown = run_cli("verify --statement not_a_thing --n 3");
    CHECK(unknown.status == 2);

    CliResult no_n = run_cli("verify --statement guo_c");
    CHECK(no_n.status == 2);
}

TEST_CASE("scan: failing congruence gives exit 1 with records present") {
    CliResult r = run_cli(
        "scan --statement guo_conj --n 3 --m-mode half --trials 1 --extra-exponent 12 --format json");
    CHECK(r.status == 1);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["summary"]["failed"] == 1);
    CHECK(j["records"][0]["pass"] == false);
}

TEST_CASE("scan at the conjectured exponent passes") {
    CliResult r = run_cli("scan --statement conj_4_1 --n 3 --extra-exponent 4 --format text");
    CHECK(r.status == 0);
    CHECK(r.output.find("[PASS]") != std::string::npos);
}

TEST_CASE("padic command") {
    CliResult r = run_cli("padic --statement long_a --primes 5,7 --format json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["records"].size() == 2);

    CliResult bad = run_cli("padic --statement swisher --primes 7");
    CHECK(bad.status == 2);
}

TEST_CASE("identity command and csv output") {
    CliResult r = run_cli("identity --truncation 2 --trials 1 --format csv");
    CHECK(r.status == 0);
    CHECK(r.output.find("statement,n,") == 0);
    CHECK(r.output.find("chu_vandermonde") != std::string::npos);
    CHECK(r.output.find("watson_8phi7") != std::string::npos);
}

TEST_CASE("byte-identical reports for identical configs") {
    std::string args = "verify --statement thm_1_1 --n 3 --trials 2 --seed 7 --format json";
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("full mode on a fixed-truncation statement is a config error") {
    CliResult r = run_cli("verify --statement lem_2_1 --n 3 --m-mode full");
    CHECK(r.status == 2);

    // under 'both' it runs its single supported mode
    CliResult both = run_cli("verify --statement lem_2_1 --n 3 --m-mode both --format json");
    CHECK(both.status == 0);
    auto j = nlohmann::json::parse(both.output);
    CHECK(j["records"].size() == 1);
    CHECK(j["records"][0]["m_mode"] == "half");
}

TEST_CASE("certify flag runs the full grid") {
    CliResult r = run_cli(
        "verify --statement thm_1_1 --n 3 --m-mode half --certify --format json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["records"].size() == 49);  // 7 points per slot at n = 3, half mode

    CliResult unsupported = run_cli("verify --statement eq_par --n 3 --certify");
    CHECK(unsupported.status == 2);
}

TEST_CASE("range parsing in --n") {
    CliResult r = run_cli("verify --statement guo_c --n 3:9:2 --m-mode half --trials 1");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["records"].size() == 4);  // 3, 5, 7, 9
}

TEST_CASE("output file writing") {
    std::string path = "/tmp/qsc_test_report.json";
    std::remove(path.c_str());
    CliResult r = run_cli("verify --statement guo_c --n 3 --m-mode half --trials 1 --out " + path);
    CHECK(r.status == 0);
    CHECK(r.output.empty());
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::fclose(f);
    std::remove(path.c_str());
}
