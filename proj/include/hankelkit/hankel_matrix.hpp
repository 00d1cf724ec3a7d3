#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hankelkit/symtensor.hpp"

namespace hankelkit {

inline constexpr double kPsdTolerance = 1e-9;
inline constexpr double kPseudoInverseCutoff = 1e-10;

/// Square Hankel matrix a_ij = v_{i+j-2} of size ceil(((n-1)m+2)/2).
/// When (n-1)m is odd the bottom-right entry is a free parameter.
struct AssociatedHankelMatrix {
    Eigen::MatrixXd entries;
    std::optional<double> free_corner;

    int size() const { return static_cast<int>(entries.rows()); }
    /// g(y) = y^T A y
    double quadratic_form(const Eigen::VectorXd& y) const { return y.dot(entries * y); }
};

struct PsdMatrixVerdict {
    bool is_psd = false;
    double min_eigenvalue = 0.0;
    std::optional<Eigen::VectorXd> witness;  // y with y^T A y < 0 when !is_psd
};

int associated_matrix_size(const GeneratingVector& gen);

AssociatedHankelMatrix build_matrix(const GeneratingVector& gen,
                                    std::optional<double> free_corner = std::nullopt);

/// Eigenvalue test: PSD iff lambda_min >= -tol * max(1, ||A||_inf).
PsdMatrixVerdict is_psd_matrix(const Eigen::MatrixXd& a, double tol = kPsdTolerance);

struct StrongHankelVerdict {
    PsdMatrixVerdict verdict;
    std::optional<double> chosen_corner;  // only for odd (n-1)m
    AssociatedHankelMatrix matrix;         // the matrix the verdict refers to
};

/// Decides whether some associated Hankel matrix is PSD. For odd (n-1)m the
/// free corner exists iff the leading block B is PSD and the off-corner column
/// lies in range(B); then theta = c^T B^+ c + 1 is used.
StrongHankelVerdict is_strong_hankel(const HankelTensor& t, double tol = kPsdTolerance);

}  // namespace hankelkit
