#include <doctest.h>

#include <json.hpp>

#include "kforms/errors.hpp"
#include "kforms/verify.hpp"

using namespace kforms;

TEST_CASE("the suite catalog is stable") {
    const auto& names = suite_names();
    CHECK(names.size() == 13);
    CHECK(names.front() == "cap-laws");
    CHECK_THROWS_AS(run_verify("no-such-suite", 1, Profile::by_name("small")),
                    UsageError);
    CHECK_THROWS_AS(Profile::by_name("huge"), UsageError);
}

TEST_CASE("reports are deterministic in seed and profile") {
    Profile p = Profile::by_name("small");
    VerifyReport a = run_verify("cap-laws", 42, p);
    VerifyReport b = run_verify("cap-laws", 42, p);
    CHECK(a.passed);
    CHECK(report_text(a) == report_text(b));
    CHECK(report_json(a) == report_json(b));
}

TEST_CASE("reports carry one entry per check") {
    VerifyReport r = run_verify("cap-laws", 7, Profile::by_name("small"));
    REQUIRE(r.suites.size() == 1);
    CHECK(r.suites[0].name == "cap-laws");
    CHECK(r.suites[0].checks.size() == 7);
    for (const auto& c : r.suites[0].checks) {
        CHECK(c.instances >= 200);
        CHECK(c.passed);
        CHECK(c.detail.empty());
    }

    // The JSON report is machine readable and mirrors the result.
    nlohmann::json j = nlohmann::json::parse(report_json(r));
    CHECK(j.at("suite") == "cap-laws");
    CHECK(j.at("seed") == 7);
    CHECK(j.at("profile") == "small");
    CHECK(j.at("passed") == true);
    CHECK(j.at("suites").size() == 1);

    std::string text = report_text(r);
    CHECK(text.find("[PASS] cap-laws/associative") != std::string::npos);
    CHECK(text.find("result: PASS") != std::string::npos);
}
