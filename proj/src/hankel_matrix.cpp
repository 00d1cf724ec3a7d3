#include "hankelkit/hankel_matrix.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "hankelkit/errors.hpp"

namespace hankelkit {

int associated_matrix_size(const GeneratingVector& gen) {
    // ceil((span + 2) / 2)
    return (gen.span() + 3) / 2;
}

AssociatedHankelMatrix build_matrix(const GeneratingVector& gen, std::optional<double> free_corner) {
    const bool odd = gen.span() % 2 == 1;
    if (odd && !free_corner) {
        throw DomainError("odd (n-1)m: the associated Hankel matrix needs a free corner value");
    }
    if (!odd && free_corner) {
        throw DomainError("even (n-1)m: the associated Hankel matrix is unique, no free corner allowed");
    }
    const int s = associated_matrix_size(gen);
    AssociatedHankelMatrix out;
    out.entries.resize(s, s);
    out.free_corner = free_corner;
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            const int k = i + j;
            out.entries(i, j) = k <= gen.span() ? gen[static_cast<std::size_t>(k)] : *free_corner;
        }
    }
    return out;
}

PsdMatrixVerdict is_psd_matrix(const Eigen::MatrixXd& a, double tol) {
    if (a.rows() != a.cols()) throw DomainError("PSD test needs a square matrix");
    PsdMatrixVerdict out;
    if (a.rows() == 0) {
        out.is_psd = true;
        return out;
    }
    const double scale = std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw DomainError("PSD test needs a symmetric matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    out.min_eigenvalue = eig.eigenvalues()(0);
    out.is_psd = out.min_eigenvalue >= -tol * scale;
    if (!out.is_psd) {
        Eigen::VectorXd y = eig.eigenvectors().col(0);
        if (y.dot(a * y) < 0.0) out.witness = y;
    }
    return out;
}

StrongHankelVerdict is_strong_hankel(const HankelTensor& t, double tol) {
    const auto& gen = t.gen();
    if (gen.span() % 2 == 0) {
        auto a = build_matrix(gen);
        auto verdict = is_psd_matrix(a.entries, tol);
        return {std::move(verdict), std::nullopt, std::move(a)};
    }

    const int s = associated_matrix_size(gen);
    const int b_size = s - 1;
    // Temporary corner 0 just to read off B and c.
    auto probe = build_matrix(gen, 0.0);
    Eigen::MatrixXd b = probe.entries.topLeftCorner(b_size, b_size);
    Eigen::VectorXd c = probe.entries.col(s - 1).head(b_size);

    double theta = 1.0;
    if (b_size > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(b);
        const Eigen::VectorXd& lam = eig.eigenvalues();
        const double cutoff = kPseudoInverseCutoff * std::max(std::abs(lam.maxCoeff()), std::abs(lam.minCoeff()));
        Eigen::VectorXd proj = eig.eigenvectors().transpose() * c;
        double q = 0.0;
        for (int i = 0; i < b_size; ++i) {
            if (std::abs(lam(i)) > cutoff) q += proj(i) * proj(i) / lam(i);
        }
        theta = std::max(q, 0.0) + 1.0;
    }
    auto a = build_matrix(gen, theta);
    auto verdict = is_psd_matrix(a.entries, tol);
    if (!verdict.is_psd && b_size > 0) {
        // A vector supported on B refutes every choice of the corner at once.
        const auto lead = is_psd_matrix(b, tol);
        if (!lead.is_psd && lead.witness) {
            Eigen::VectorXd y = Eigen::VectorXd::Zero(s);
            y.head(b_size) = *lead.witness;
            verdict.witness = y;
        }
    }
    return {std::move(verdict), theta, std::move(a)};
}

}  // namespace hankelkit
