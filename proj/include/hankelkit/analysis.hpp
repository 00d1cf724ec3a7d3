#pragma once

// Classification pipeline behind the command-line tool: runs every applicable
// criterion on a tensor and serializes the outcome as a versioned JSON report.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hankelkit/classes.hpp"
#include "hankelkit/symtensor.hpp"

namespace hankelkit {

inline constexpr const char* kReportSchema = "hankelkit/1";
inline constexpr const char* kToolVersion = "1.0.0";

/// Malformed or out-of-domain input (exit code 2).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Two pipeline stages contradict each other, or a certificate the library
/// built fails its own verification (exit code 3).
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

struct AnalyzeOptions {
    bool refute = false;
    int starts = 64;
    int iterations = 500;
    std::uint64_t seed = 42;
};

/// Parses {"m": int, "n": int, "v": [reals]}.
GeneratingVector parse_generating_vector(const nlohmann::json& doc);

/// Full pipeline on one tensor; `input` is echoed into the report.
nlohmann::json analyze_tensor(const HankelTensor& t, const AnalyzeOptions& options, const nlohmann::json& input);

/// Builds a named family (truncated, quasi-truncated, noncd, moment,
/// vandermonde) from its parameters and analyzes it, adding family records.
nlohmann::json analyze_family(const std::string& name, const nlohmann::json& params, const AnalyzeOptions& options);

/// Dispatches a document of either input shape.
nlohmann::json analyze_document(const nlohmann::json& doc, const AnalyzeOptions& options);

/// One line: "psd=yes sos=yes strong=no pd=unknown".
std::string verdict_line(const nlohmann::json& report);

/// Report with the timing field removed, for byte-level comparisons.
nlohmann::json without_timings(nlohmann::json report);

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const CriterionRecord& c);

}  // namespace hankelkit
