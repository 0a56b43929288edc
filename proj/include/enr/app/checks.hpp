#pragma once

#include "enr/app/fixtures.hpp"

#include <functional>
#include <iosfwd>
#include <memory>

namespace enr {

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class CheckStatus { Pass, Fail, Skip };
std::string status_name(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Fail;
    std::string details;
    double seconds = 0;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    size_t count(CheckStatus s) const;
};

struct RunOptions {
    std::string fixtures = ENR_DEFAULT_FIXTURE_DIR;
    std::uint64_t prime = 113;
    std::optional<std::uint64_t> root;  ///< overrides the automatic root match
    bool char0 = false;                 ///< also run the slower number-field recomputations
};

/// Shared state for one run: fixtures plus lazily computed surfaces.
class CheckSession {
public:
    explicit CheckSession(RunOptions opts);
    ~CheckSession();
    CheckSession(const CheckSession&) = delete;
    CheckSession& operator=(const CheckSession&) = delete;

    const RunOptions& options() const { return opts_; }
    const FixtureSet& fixtures() const { return fx_; }

    struct State;
    State& state() const { return *state_; }

private:
    RunOptions opts_;
    FixtureSet fx_;
    std::unique_ptr<State> state_;
};

const std::vector<std::string>& suite_names();
/// Check ids of a suite in report order.
std::vector<std::string> suite_checks(const std::string& suite);

CheckResult run_check(const CheckSession& session, const std::string& id);
CheckReport run_suite(const CheckSession& session, const std::string& suite);
CheckReport run_suite(const std::string& suite, const RunOptions& opts = {});

enum class ReportFormat { Text, Json };
/// JSON omits timings so that repeated runs are byte-identical.
nlohmann::json report_json(const CheckReport& r);
void emit_report(const CheckReport& r, ReportFormat f, std::ostream& out);

}  // namespace enr
