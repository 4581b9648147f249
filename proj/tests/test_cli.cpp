#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LOGVERLINDE_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("fusion emission") {
    auto r = run_cli("fusion --p 3 --ring grothendieck --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["basis"].size() == 6);
    CHECK(j["ringKind"] == "Grothendieck");
    // determinism: byte-identical on identical inputs
    CHECK(run_cli("fusion --p 3 --ring grothendieck --format json").out == r.out);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify --p 2 --suite all --tol 1e-8").exit_code == 0);
    CHECK(run_cli("verify --p 2 --suite modular --tau bogus").exit_code == 2);
    CHECK(run_cli("verify --p 1 --suite fusion").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("no requested check is skipped") {
    auto all = nlohmann::json::parse(run_cli("verify --p 2 --suite all --format json").out);
    size_t total = 0;
    for (const char* s : {"fusion", "hopf", "modular", "jordan", "sf"}) {
        auto one = nlohmann::json::parse(run_cli(std::string("verify --p 2 --suite ") + s + " --format json").out);
        total += one["checks"].size();
    }
    CHECK(all["checks"].size() == total);
}

TEST_CASE("verify json schema") {
    auto r = run_cli("verify --p 2 --suite sf --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("suite"));
    CHECK(j.contains("p"));
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK((c["status"] == "pass" || c["status"] == "fail"));
        CHECK(c.contains("residual"));
        CHECK(c.contains("detail"));
    }
}

TEST_CASE("hopf and smatrix emission") {
    auto r = run_cli("hopf --p 2 --kind log --insertion modP --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "log");
    CHECK(j["insertion"] == "modP");

    auto s = run_cli("smatrix --p 2 --format json");
    CHECK(s.exit_code == 0);
    auto js = nlohmann::json::parse(s.out);
    CHECK(js["basis"].size() == 5);
}

TEST_CASE("chars csv") {
    auto r = run_cli("chars --p 2 --tau 2i");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 11) == "char,re,im\n");
}
