#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "hankelkit/errors.hpp"
#include "hankelkit/hankel_matrix.hpp"
#include "support.hpp"

using namespace hankelkit;

namespace {

// PSD test by symmetric Gaussian elimination with diagonal pivoting: a PSD
// matrix never produces a negative pivot, and once the largest remaining
// pivot is (numerically) zero, the remaining block must vanish as well.
bool pivoted_elimination_psd(Eigen::MatrixXd a) {
    const double scale = std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());
    const double pivot_tol = 1e-10 * scale;
    const double block_tol = 1e-5 * scale;
    std::vector<bool> done(static_cast<std::size_t>(a.rows()), false);
    for (Eigen::Index step = 0; step < a.rows(); ++step) {
        Eigen::Index p = -1;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (!done[static_cast<std::size_t>(i)] && (p < 0 || a(i, i) > a(p, p))) p = i;
        }
        const double d = a(p, p);
        if (d < -pivot_tol) return false;
        if (d <= pivot_tol) {
            for (Eigen::Index i = 0; i < a.rows(); ++i) {
                for (Eigen::Index j = 0; j < a.rows(); ++j) {
                    if (!done[static_cast<std::size_t>(i)] && !done[static_cast<std::size_t>(j)] &&
                        std::abs(a(i, j)) > block_tol) {
                        return false;
                    }
                }
            }
            return true;
        }
        done[static_cast<std::size_t>(p)] = true;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index j = 0; j < a.rows(); ++j) {
                if (!done[static_cast<std::size_t>(i)] && !done[static_cast<std::size_t>(j)]) {
                    a(i, j) -= a(i, p) * a(p, j) / d;
                }
            }
        }
    }
    return true;
}

Eigen::MatrixXd random_matrix(std::mt19937_64& gen, int rows, int cols) {
    const auto v = testing::uniform_vector(gen, static_cast<std::size_t>(rows * cols));
    return Eigen::Map<const Eigen::MatrixXd>(v.data(), rows, cols);
}

// v_k = sum_i w_i g_i^k: moments of a positive discrete measure.
std::vector<double> discrete_moments(std::mt19937_64& gen, int atoms, std::size_t len) {
    const auto g = testing::uniform_vector(gen, static_cast<std::size_t>(atoms));
    const auto w = testing::uniform_vector(gen, static_cast<std::size_t>(atoms), 0.2, 1.0);
    std::vector<double> v(len, 0.0);
    for (int i = 0; i < atoms; ++i) {
        double p = 1.0;
        for (auto& vk : v) {
            vk += w[static_cast<std::size_t>(i)] * p;
            p *= g[static_cast<std::size_t>(i)];
        }
    }
    return v;
}

}  // namespace

TEST_CASE("associated matrix layout") {
    const GeneratingVector gen(6, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
    CHECK(associated_matrix_size(gen) == 7);
    const auto a = build_matrix(gen);
    CHECK(a.size() == 7);
    CHECK(a.entries(0, 0) == 1.0);
    CHECK(a.entries(6, 6) == 13.0);
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) CHECK(a.entries(i, j) == gen[static_cast<std::size_t>(i + j)]);
    }
    CHECK_THROWS_AS(build_matrix(gen, 1.0), DomainError);

    const GeneratingVector odd(3, 2, {1, 2, 3, 4});
    CHECK(associated_matrix_size(odd) == 3);
    CHECK_THROWS_AS(build_matrix(odd), DomainError);
    const auto b = build_matrix(odd, 9.0);
    CHECK(b.entries(2, 2) == 9.0);
    CHECK(b.entries(1, 2) == 4.0);
    CHECK(b.entries(2, 1) == 4.0);

    Eigen::VectorXd y(3);
    y << 1.0, -1.0, 0.5;
    CHECK(b.quadratic_form(y) == doctest::Approx(y.dot(b.entries * y)));
}

TEST_CASE("matrix PSD test on small examples") {
    CHECK(is_psd_matrix(Eigen::MatrixXd::Identity(4, 4)).is_psd);
    CHECK(is_psd_matrix(Eigen::MatrixXd(0, 0)).is_psd);

    Eigen::MatrixXd m(2, 2);
    m << 1, 2, 2, 1;
    const auto v = is_psd_matrix(m);
    CHECK_FALSE(v.is_psd);
    CHECK(v.min_eigenvalue == doctest::Approx(-1.0));
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->dot(m * *v.witness) < 0.0);
    CHECK(std::abs((*v.witness)(0) + (*v.witness)(1)) < 1e-12);

    Eigen::MatrixXd ns(2, 2);
    ns << 1, 2, 0, 1;
    CHECK_THROWS_AS(is_psd_matrix(ns), DomainError);
    CHECK_THROWS_AS(is_psd_matrix(Eigen::MatrixXd::Zero(2, 3)), DomainError);
}

TEST_CASE("eigenvalue PSD test agrees with pivoted elimination on 500 matrices") {
    auto gen = testing::rng(101);
    std::uniform_int_distribution<int> size(1, 10);
    std::uniform_real_distribution<double> shift(0.01, 1.0);
    int disagreements = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = size(gen);
        Eigen::MatrixXd a;
        int expected = -1;  // 1 PSD, 0 not PSD, -1 decided by the oracle only
        switch (trial % 4) {
            case 0: {  // full-rank Gram matrix
                const auto b = random_matrix(gen, n, n);
                a = b * b.transpose() + 0.01 * Eigen::MatrixXd::Identity(n, n);
                expected = 1;
                break;
            }
            case 1: {  // rank-deficient Gram matrix
                const int r = std::max(1, n / 2);
                const auto b = random_matrix(gen, n, r);
                a = b * b.transpose();
                expected = 1;
                break;
            }
            case 2: {  // rank-deficient Gram matrix pushed below zero
                if (n == 1) {
                    a = Eigen::MatrixXd::Constant(1, 1, -shift(gen));
                } else {
                    const auto b = random_matrix(gen, n, n - 1);
                    a = b * b.transpose() - shift(gen) * Eigen::MatrixXd::Identity(n, n);
                }
                expected = 0;
                break;
            }
            default: {
                const auto b = random_matrix(gen, n, n);
                a = 0.5 * (b + b.transpose());
                break;
            }
        }
        a = 0.5 * (a + a.transpose()).eval();
        const bool oracle = pivoted_elimination_psd(a);
        const auto verdict = is_psd_matrix(a);
        if (expected >= 0) REQUIRE(oracle == (expected == 1));
        if (verdict.is_psd != oracle) ++disagreements;
        if (!verdict.is_psd) {
            REQUIRE(verdict.witness.has_value());
            REQUIRE(verdict.witness->dot(a * *verdict.witness) < 0.0);
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("strong test on even spans") {
    const HankelTensor hilbert(GeneratingVector(2, 2, {1.0, 0.5, 1.0 / 3.0}));
    const auto h = is_strong_hankel(hilbert);
    CHECK(h.verdict.is_psd);
    CHECK_FALSE(h.chosen_corner.has_value());

    std::vector<double> v(13, 0.0);
    v[0] = v[12] = 1.0;
    v[6] = 1.0;
    const auto t = is_strong_hankel(HankelTensor(GeneratingVector(6, 3, v)));
    CHECK_FALSE(t.verdict.is_psd);
    REQUIRE(t.verdict.witness.has_value());
    CHECK(t.matrix.quadratic_form(*t.verdict.witness) < 0.0);

    v[6] = 0.0;
    CHECK(is_strong_hankel(HankelTensor(GeneratingVector(6, 3, v))).verdict.is_psd);
}

TEST_CASE("odd-span strong test agrees with a corner scan on 100 instances") {
    auto gen = testing::rng(202);
    const std::pair<int, int> shapes[] = {{1, 2}, {3, 2}, {5, 2}, {7, 2}, {1, 4}, {3, 4}};
    int strong_count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto [m, n] = shapes[trial % 6];
        const std::size_t len = static_cast<std::size_t>((n - 1) * m + 1);
        const int s = (static_cast<int>(len) + 2) / 2;
        std::vector<double> v;
        switch ((trial / 6) % 3) {
            case 0: {  // moments of a positive measure: strong
                std::uniform_int_distribution<int> atoms(1, s);
                v = discrete_moments(gen, atoms(gen), len);
                break;
            }
            case 1: {  // few atoms, last entry moved off the moment curve
                v = discrete_moments(gen, 1, len);
                v.back() += 0.5;
                break;
            }
            default:
                v = testing::uniform_vector(gen, len);
                break;
        }
        const GeneratingVector g(m, n, v);
        // lambda_min(A(theta)) is nondecreasing in theta, so the scan's
        // largest corner decides; smaller ones cover any over-shoot.
        double best = -INFINITY;
        for (int k = -16; k <= 16; ++k) {
            const auto a = build_matrix(g, std::pow(10.0, k / 4.0));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a.entries);
            best = std::max(best, eig.eigenvalues()(0));
        }
        const bool scan_strong = best >= -1e-8;
        const auto verdict = is_strong_hankel(HankelTensor(g));
        REQUIRE(verdict.chosen_corner.has_value());
        REQUIRE(verdict.verdict.is_psd == scan_strong);
        if (scan_strong) {
            ++strong_count;
            REQUIRE(is_psd_matrix(build_matrix(g, *verdict.chosen_corner).entries).is_psd);
        } else if (verdict.verdict.witness) {
            const auto& y = *verdict.verdict.witness;
            REQUIRE(verdict.matrix.quadratic_form(y) < 0.0);
            if (y(y.size() - 1) == 0.0) {
                for (double corner : {-10.0, 0.0, 1e3, 1e6}) {
                    REQUIRE(build_matrix(g, corner).quadratic_form(y) < 0.0);
                }
            }
        }
    }
    CHECK(strong_count > 20);
    CHECK(strong_count < 80);
}

TEST_CASE("strong tensors of even order have nonnegative forms") {
    auto gen = testing::rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 2 + 2 * (trial % 3);
        const std::size_t len = static_cast<std::size_t>(2 * m + 1);
        const HankelTensor t(GeneratingVector(m, 3, discrete_moments(gen, 1 + trial % 5, len)));
        REQUIRE(is_strong_hankel(t).verdict.is_psd);
        const double scale = std::max(1.0, t.gen().max_abs());
        for (int k = 0; k < 200; ++k) {
            const auto x = testing::sphere_point(gen, 3);
            REQUIRE(eval(t, x) >= -1e-9 * scale);
        }
    }
}
