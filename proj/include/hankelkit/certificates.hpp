#pragma once

// Explicit nonnegativity certificates for Hankel forms, and the numerical
// machinery that confirms or refutes positive semi-definiteness.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hankelkit/sos_bound.hpp"
#include "hankelkit/symtensor.hpp"

namespace hankelkit {

inline constexpr double kDecompositionTolerance = 1e-9;
inline constexpr double kBinaryOracleTolerance = 1e-12;

/// Weighted arithmetic-geometric check for a diagonal-minus-tail form
/// sum_i d_i x_i^m + c x^alpha: with w_i = alpha_i / m the diagonal dominates
/// the mixed term when prod_i (d_i / w_i)^{w_i} >= |c|.
struct AgmCertificate {
    std::optional<Exponent> mixed_exponent;
    double mixed_coefficient = 0.0;
    double geometric_bound = 0.0;  // prod (d_i/w_i)^{w_i}; unused without a mixed term
    double min_diagonal = 0.0;
    double slack = 0.0;            // geometric_bound - |mixed_coefficient|, or min_diagonal
    bool holds = false;
};

struct WeightedSquare {
    double coefficient = 0.0;  // >= 0
    SparseForm form;           // degree m/2
    std::string label;
};

struct DmtPiece {
    SparseForm form;
    AgmCertificate certificate;
    std::string label;
};

/// target = sum coefficient * square^2 + sum residual pieces, each residual
/// being a diagonal-minus-tail form carrying its own AGM certificate.
struct StructuredDecomposition {
    int n_vars = 0;
    int degree = 0;
    std::vector<WeightedSquare> squares;
    std::vector<DmtPiece> residuals;

    SparseForm assemble() const;
    /// Smallest AGM slack over the residual pieces (+inf when there are none).
    double min_agm_slack() const;
};

/// Certificate for a form with nonnegative-diagonal-plus-one-mixed-term shape.
/// Throws DomainError when the form has more than one mixed monomial.
AgmCertificate agm_certificate(const SparseForm& dmt, double tol = kDecompositionTolerance);

struct DecompositionCheck {
    bool pass = false;
    double max_discrepancy = 0.0;  // relative, coefficientwise
    bool squares_nonnegative = false;
    bool certificates_hold = false;
    bool binary_pieces_psd = false;
    std::vector<std::string> notes;
};

DecompositionCheck verify_decomposition(const HankelTensor& t, const StructuredDecomposition& d,
                                        double tol = kDecompositionTolerance);

/// Sixth-order, n = 3 truncated tensor: two squares plus one diagonal-minus-tail
/// residual. Requires v_0, v_12 > 0 (>= 0 when v_6 = 0), v_6 >= 0 and
/// sqrt(v_0 v_12) >= (560 + 70 sqrt 70) v_6 up to the relative tolerance.
StructuredDecomposition build_sextic_truncated_decomposition(double v0, double v6, double v12,
                                                             double tol = kDecompositionTolerance);

/// Order-m, n = 3 truncated tensor with v_0 = v_{2m}: squares
/// x_2^{k-p}(x_1^p + x_3^p) plus per-p AGM pieces on each side.
StructuredDecomposition build_truncated_sos_decomposition(int order, double v0, double vmid,
                                                          const TruncatedSosBound& bound,
                                                          double tol = kDecompositionTolerance);

/// Slack of each inequality gating the quasi-truncated sextic decomposition
/// (all >= 0 means admissible).
struct QuasiSexticSlack {
    double first_offdiag = 0.0;   // |v1| bound
    double last_offdiag = 0.0;    // |v11| bound
    double middle_diagonal = 0.0; // x_2^6 budget
    double agm_product = 0.0;     // product vs cube bound, relative to the cube bound
    bool admissible(double tol = 0.0) const;
};

QuasiSexticSlack quasi_sextic_slack(double v0, double v1, double v6, double v11, double v12,
                                    double t1, double t2);

/// Five-part decomposition of a sixth-order, n = 3 quasi-truncated tensor.
StructuredDecomposition build_quasi_sextic_decomposition(double v0, double v1, double v6, double v11,
                                                         double v12, double t1, double t2,
                                                         double tol = kDecompositionTolerance);

struct BinaryPsdResult {
    bool is_psd = false;
    double min_value = 0.0;                // minimum over the unit circle
    std::array<double, 2> direction{1.0, 0.0};
};

/// Exact-up-to-root-isolation PSD test for a binary form of even degree.
BinaryPsdResult binary_psd_oracle(const SparseForm& form, double tol = kBinaryOracleTolerance);

/// Real roots of a polynomial (ascending coefficients) inside [lo, hi], isolated
/// with Sturm sequences and bisected to the given width.
std::vector<double> sturm_real_roots(const std::vector<double>& coeffs, double lo, double hi,
                                     double width = 1e-12);

struct RefuteOptions {
    std::uint64_t seed = 42;
    int starts = 64;
    int iterations = 500;
};

struct RefutationResult {
    bool found = false;
    std::vector<double> x;
    double value = 0.0;
    int starts_used = 0;
    std::uint64_t seed = 0;
    std::string source;  // "probe" or "sphere-descent"
};

/// Minimizes f on the unit sphere from seeded random starts (projected gradient
/// with Armijo backtracking) and evaluates the supplied probe points. Returns
/// the most negative point found; never claims PSD.
RefutationResult refute_psd(const HankelTensor& t, const RefuteOptions& options = {},
                            std::span<const std::vector<double>> probes = {});

/// Projected gradient descent on the sphere from one start; exposed for tests.
std::vector<double> sphere_descent(const HankelTensor& t, std::vector<double> x, int iterations);

}  // namespace hankelkit
