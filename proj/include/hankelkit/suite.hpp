#pragma once

// Reproduction suite: each acceptance criterion is a named bundle of
// measurements compared against a nominal tolerance.

#include <optional>
#include <string>
#include <vector>

namespace hankelkit {

enum class SuiteStatus { Pass, Boundary, Fail };
std::string to_string(SuiteStatus s);

/// One measured quantity. Numeric measurements pass when error <= scaled
/// tolerance, are "boundary" when only the nominal tolerance is met, and fail
/// otherwise. Logical measurements (no tolerance) are pass/fail.
struct SuiteMeasurement {
    std::string what;
    double error = 0.0;
    std::optional<double> tolerance;
    bool ok = false;  // used when tolerance is empty
    std::string detail;
    SuiteStatus status = SuiteStatus::Fail;
};

struct SuiteCriterion {
    int id = 0;
    std::string title;
    std::vector<SuiteMeasurement> measurements;
    SuiteStatus status = SuiteStatus::Fail;
    double seconds = 0.0;
    std::string summary() const;
};

struct SuiteOptions {
    double tolerance_scale = 1.0;
    /// Test hook: corrupt one reference constant of the given criterion.
    std::optional<int> inject_fault;
    /// Restrict to these criteria (all when empty).
    std::vector<int> only;
};

struct SuiteReport {
    std::vector<SuiteCriterion> criteria;
    bool all_pass() const;  // boundary counts as passing
    std::vector<int> failed() const;
};

inline constexpr int kSuiteCriterionCount = 10;

SuiteReport run_suite(const SuiteOptions& options = {});
SuiteCriterion run_criterion(int id, const SuiteOptions& options = {});

}  // namespace hankelkit
