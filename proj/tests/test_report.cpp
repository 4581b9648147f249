#include "doctest.h"
#include "logverlinde/report.hpp"

using namespace verlinde;

TEST_CASE("report emission") {
    Report r;
    r.suite = "demo";
    r.p = 2;
    CHECK(r.to_json()["checks"].empty());
    r.add("alpha", true, 1e-9, "fine");
    r.add("beta", false, std::nullopt, "ratio 3/2 vs 5/2");
    CHECK_FALSE(r.all_pass());
    auto j = r.to_json();
    CHECK(j["suite"] == "demo");
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][1]["status"] == "fail");
    CHECK(j["checks"][1]["residual"].is_null());
    CHECK(j["checks"][1]["detail"] == "ratio 3/2 vs 5/2");
    // identical inputs give byte-identical output
    Report r2;
    r2.suite = "demo";
    r2.p = 2;
    r2.add("alpha", true, 1e-9, "fine");
    r2.add("beta", false, std::nullopt, "ratio 3/2 vs 5/2");
    CHECK(r.to_json().dump() == r2.to_json().dump());
    CHECK(r.to_text() == r2.to_text());
}
