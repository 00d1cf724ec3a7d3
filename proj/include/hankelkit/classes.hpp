#pragma once

// Truncated and quasi-truncated Hankel tensors: constructors, closed-form
// PSD/SOS/strong criteria, and the witness points that refute them.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hankelkit/certificates.hpp"
#include "hankelkit/hankel_matrix.hpp"
#include "hankelkit/sos_bound.hpp"
#include "hankelkit/symtensor.hpp"

namespace hankelkit {

enum class Answer { Yes, No, Unknown };
std::string to_string(Answer a);

/// A point refuting some property: a form point (f(x) < 0, or <= 0 for PD)
/// or an associated-matrix vector (y^T A y < 0).
struct Witness {
    enum class Kind { Form, Matrix };
    Kind kind = Kind::Form;
    std::vector<double> point;
    double value = 0.0;
    std::string refutes;  // "psd", "pd" or "strong"
    std::string origin;
};

struct CriterionRecord {
    std::string name;
    bool satisfied = false;
    double slack = 0.0;  // how far inside (>= 0) or outside (< 0) the inequality is
    std::string note;
};

struct ClassificationVerdict {
    Answer psd = Answer::Unknown;
    Answer sos = Answer::Unknown;
    Answer strong = Answer::Unknown;
    Answer pd = Answer::Unknown;
    bool boundary = false;
    std::vector<Witness> witnesses;
    std::vector<CriterionRecord> criteria;
    std::vector<std::string> notes;
    std::optional<StructuredDecomposition> certificate;
};

struct TruncatedSpec {
    int order = 0;
    int dim = 0;  // odd
    double v0 = 0.0;
    double vmid = 0.0;  // at (n-1)m/2
    double vend = 0.0;  // at (n-1)m
};

struct QuasiTruncatedSpec {
    int order = 0;
    int dim = 0;  // odd
    double v0 = 0.0;
    double v1 = 0.0;
    double vmid = 0.0;
    double vend1 = 0.0;  // at (n-1)m - 1
    double vend = 0.0;
};

HankelTensor build_truncated(const TruncatedSpec& spec);
HankelTensor build_quasi_truncated(const QuasiTruncatedSpec& spec);

enum class Family { General, Truncated, QuasiTruncated };
std::string to_string(Family f);

/// Pattern match on the generating vector's support (truncated is reported
/// in preference to quasi-truncated).
Family detect_family(const GeneratingVector& gen);
std::optional<TruncatedSpec> as_truncated(const GeneratingVector& gen);
std::optional<QuasiTruncatedSpec> as_quasi_truncated(const GeneratingVector& gen);

/// Strong iff vmid = 0; otherwise the vector e_i - e_j with i + j = (n-1)m/2 + 2
/// gives y^T A y = -2 vmid. Needs nonnegative anchors.
ClassificationVerdict truncated_strong_dichotomy(const TruncatedSpec& spec);

inline constexpr double kSexticBandTolerance = 1e-9;

/// The sextic threshold 560 + 70 sqrt 70.
double sextic_threshold();

/// Complete PSD/SOS/PD classification of m = 6, n = 3 truncated tensors.
ClassificationVerdict classify_sextic_truncated(double v0, double v6, double v12,
                                                double band = kSexticBandTolerance);

/// Even-order quasi-truncated tensor with vmid = 0: PSD iff v1 = vend1 = 0.
ClassificationVerdict quasi_midzero_dichotomy(const QuasiTruncatedSpec& spec);

struct BinarySexticCheck {
    bool pass = false;
    double slack = 0.0;  // (v0/5)^{5/6} v6^{1/6} - |v1| when the diagonals are nonnegative
    std::optional<std::array<double, 2>> witness;
};

/// PSD test for v0 x1^6 + 6 v1 x1^5 x2 + v6 x2^6.
BinarySexticCheck binary_sextic_check(double v0, double v1, double v6);

struct QuasiNecessaryResult {
    std::vector<CriterionRecord> checks;
    std::vector<CriterionRecord> violations;
    std::vector<Witness> witnesses;
    bool balanced = false;  // v1 v12^{5/6} = v11 v0^{5/6} within 1e-10
};

/// Necessary conditions for a sixth-order, n = 3 quasi-truncated tensor to be PSD.
QuasiNecessaryResult quasi_sextic_necessary(double v0, double v1, double v6, double v11, double v12);

struct QuasiSufficientResult {
    double t1 = 0.0;
    double t2 = 0.0;
    StructuredDecomposition decomposition;
};

/// Searches (t1, t2) on a logarithmic grid for the SOS sufficient condition.
/// An empty result is inconclusive.
std::optional<QuasiSufficientResult> quasi_sextic_sufficient(double v0, double v1, double v6, double v11,
                                                              double v12);

/// Candidate refutation points known in closed form for this tensor's family.
std::vector<std::vector<double>> structured_witnesses(const HankelTensor& t);

/// Sixth-order n = 3 quasi-truncated form (v1 = v11 = 0 gives the truncated one).
double quasi_sextic_value(double v0, double v1, double v6, double v11, double v12,
                          const std::array<double, 3>& x);

}  // namespace hankelkit
