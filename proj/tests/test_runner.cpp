#include <doctest.h>

#include "hookforge/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>

using namespace hookforge;

TEST_CASE("selector names round-trip") {
    for (const char* name :
         {"all", "theorem1", "theorem1prime", "lemma1", "prop2", "prop3", "bijection", "egf", "substitution"}) {
        const auto sel = parse_selector(name);
        REQUIRE(sel.has_value());
        CHECK(selector_name(*sel) == name);
    }
    CHECK_FALSE(parse_selector("theorem2").has_value());
    CHECK_FALSE(parse_selector("").has_value());
}

TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(validate(c));
    c.max_n = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.trials = -1;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.series_order = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("theorem1prime selector yields one record per n") {
    RunConfig c;
    c.check = CheckSelector::theorem1prime;
    c.max_n = 12;
    const auto reports = run_checks(c);
    CHECK(reports.size() == 13);
    CHECK(all_passed(reports));
    for (const auto& r : reports) CHECK(r.check == "theorem1prime");
}

TEST_CASE("reports are sorted whatever the thread count") {
    RunConfig c;
    c.max_n = 6;
    c.seed = 3;
    c.threads = 1;
    const auto serial = run_checks(c);
    c.threads = 4;
    const auto parallel = run_checks(c);
    CHECK(render_json(serial, false) == render_json(parallel, false));
    CHECK(std::is_sorted(serial.begin(), serial.end(), [](const auto& a, const auto& b) {
        return a.check != b.check ? a.check < b.check : a.params < b.params;
    }));
    CHECK(all_passed(serial));
}

TEST_CASE("progress callback sees every check") {
    RunConfig c;
    c.check = CheckSelector::substitution;
    c.max_n = 5;
    std::vector<std::string> lines;
    const auto reports = run_checks(c, [&](const std::string& line) { lines.push_back(line); });
    CHECK(lines.size() == reports.size());
    CHECK(lines.size() == 5);
}

TEST_CASE("json schema") {
    RunConfig c;
    c.check = CheckSelector::prop3;
    c.max_n = 3;
    c.trials = 2;
    const auto reports = run_checks(c);
    const auto doc = nlohmann::json::parse(render_json(reports, false));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == reports.size());
    for (const auto& entry : doc) {
        CHECK(entry.size() == 5);
        CHECK(entry["check"].is_string());
        CHECK(entry["params"].is_object());
        CHECK(entry["verdict"] == "pass");
        CHECK(entry["witness"].is_null());
        CHECK(entry["millis"].is_null());
    }
    const auto timed = nlohmann::json::parse(render_json(reports, true));
    CHECK(timed[0]["millis"].is_number());
}

TEST_CASE("failed reports render with their witness") {
    VerificationReport bad;
    bad.check = "prop3";
    bad.params = {{"n", std::int64_t{2}}};
    bad.fail("sum=1/2");
    bad.fail("ignored second reason");
    CHECK_FALSE(all_passed({bad}));
    const auto doc = nlohmann::json::parse(render_json({bad}, false));
    CHECK(doc[0]["verdict"] == "fail");
    CHECK(doc[0]["witness"] == "sum=1/2");
    const std::string text = render_text({bad}, false);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("witness: sum=1/2") != std::string::npos);
    CHECK(text.find("1 checks, 1 failed") != std::string::npos);
}

TEST_CASE("thread cap from the environment") {
    ::setenv("HOOKFORGE_THREADS", "2", 1);
    CHECK(resolve_threads(8) == 2);
    CHECK(resolve_threads(1) == 1);
    ::setenv("HOOKFORGE_THREADS", "junk", 1);
    CHECK(resolve_threads(3) == 3);
    ::unsetenv("HOOKFORGE_THREADS");
    CHECK(resolve_threads(5) == 5);
}
