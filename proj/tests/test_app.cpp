#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enr/app/checks.hpp"

#include <set>
#include <sstream>

using namespace enr;

namespace {

const CheckSession& session() {
    static const CheckSession s(RunOptions{});
    return s;
}

}  // namespace

TEST_CASE("report serialization") {
    CHECK(report_json(CheckReport{"x", {}}).dump() == R"({"checks":[],"suite":"x"})");

    CheckReport r{"demo", {{"a.one", CheckStatus::Pass, "fine", 0.5}, {"a.two", CheckStatus::Fail, "bad", 0.1}}};
    std::ostringstream text;
    emit_report(r, ReportFormat::Text, text);
    CHECK(text.str().find("✓ a.one") != std::string::npos);
    CHECK(text.str().find("✗ a.two") != std::string::npos);
    CHECK(text.str().find("demo: 1 passed, 1 failed, 0 skipped") != std::string::npos);
    CHECK_FALSE(r.passed());

    std::ostringstream js;
    emit_report(r, ReportFormat::Json, js);
    const auto j = nlohmann::json::parse(js.str());
    CHECK(j["checks"][1]["status"] == "fail");
    CHECK_FALSE(j["checks"][0].contains("seconds"));
}

TEST_CASE("fixtures") {
    const auto& fx = session().fixtures();
    CHECK(fx.missing_sources().empty());
    for (const char* name : {"field", "lattice", "pushforward", "sections", "salem", "projrep", "kappa"}) {
        const auto& j = fx.raw(name);
        CHECK(nlohmann::json::parse(j.dump()) == j);
    }
    CHECK(fx.gram().rows() == 18);
    CHECK(fx.fiber_points().size() == 8);
    CHECK(fx.sections_fp().size() == 8);
    CHECK(fx.tau8_bounds().first == Rational(158233, 100000));
    CHECK_THROWS_AS(FixtureSet("/nonexistent"), FixtureError);
    CHECK_THROWS_AS(fx.raw("missing"), FixtureError);
}

TEST_CASE("suites") {
    CHECK_THROWS_AS(suite_checks("bogus"), UnknownSuite);
    CHECK_THROWS_AS(run_suite("bogus"), UnknownSuite);
    CHECK_THROWS_AS(CheckSession(RunOptions{ENR_DEFAULT_FIXTURE_DIR, 91, {}, false}), std::invalid_argument);

    // all is the union of the other suites, each check listed once
    std::vector<std::string> union_ids;
    for (const auto& s : suite_names())
        if (s != "all")
            for (const auto& id : suite_checks(s)) union_ids.push_back(id);
    const auto all = suite_checks("all");
    CHECK(std::set<std::string>(all.begin(), all.end()) == std::set<std::string>(union_ids.begin(), union_ids.end()));
    CHECK(all.size() == union_ids.size());
}

TEST_CASE("sanity suite") {
    const auto r = run_suite(session(), "sanity");
    CHECK(r.checks.size() == 6);
    CHECK(r.count(CheckStatus::Pass) == 6);
    const auto j = report_json(r);
    CHECK(j["checks"].size() == 6);
    for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
    // deterministic output
    CHECK(report_json(run_suite(session(), "sanity")).dump() == j.dump());
}

TEST_CASE("gram and vinberg suites") {
    const auto g = run_suite(session(), "gram");
    CHECK(g.checks[0].status == CheckStatus::Pass);
    CHECK(g.checks[0].details == "324 of 324 entries agree with G_B");
    CHECK(g.checks[1].status == CheckStatus::Skip);

    const auto v = run_suite(session(), "vinberg");
    CHECK(v.passed());
    CHECK(v.checks[0].details.rfind("0 ", 0) == 0);
    CHECK(v.checks[1].details.rfind("2 ", 0) == 0);
    CHECK(v.checks[2].details.find("|D1| = 32") != std::string::npos);
    CHECK(v.checks[3].details == "|D2| = 160");
}

TEST_CASE("a root that does not match the published sections") {
    const CheckSession s(RunOptions{ENR_DEFAULT_FIXTURE_DIR, 113, 21, false});
    const auto r = run_suite(s, "specialize");
    CHECK(r.checks[0].details.find("matches") == std::string::npos);
    // the lifted sections still reduce onto the curve, but not to the published ones
    CHECK(r.checks[1].status == CheckStatus::Pass);
    CHECK(r.checks[2].status == CheckStatus::Fail);
}
