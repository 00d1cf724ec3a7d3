#pragma once

// Vandermonde decompositions, moment-generated strong Hankel tensors, their
// Riemann-sum rank-one approximations, and an SOS family that is not
// completely decomposable.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hankelkit/certificates.hpp"
#include "hankelkit/symtensor.hpp"

namespace hankelkit {

struct VandermondeDecomposition {
    int order = 0;
    int dim = 0;
    std::vector<double> weights;  // alpha_i
    std::vector<double> nodes;    // gamma_i
    double relative_residual = 0.0;
    /// For odd order: w_i = alpha_i^{1/m} u_i with A = sum w_i^{(x) m}.
    std::optional<std::vector<std::vector<double>>> cd_vectors;

    /// sum_i alpha_i gamma_i^k for k = 0..(n-1)m
    std::vector<double> reconstruct() const;
    /// sum_i alpha_i <u_i, x>^m
    double eval(std::span<const double> x) const;
    /// sum_i <w_i, x>^m (odd order only)
    double eval_cd(std::span<const double> x) const;
};

/// Chebyshev points of the first kind on [-1, 1], scaled by max(1, max_k |v_k|^{1/k}).
std::vector<double> default_vandermonde_nodes(const GeneratingVector& gen);

/// Solves the (span+1)-square Vandermonde system for the weights, with one
/// step of iterative refinement. Throws ConditioningError when the relative
/// residual exceeds 1e-6.
VandermondeDecomposition vandermonde_decompose(const GeneratingVector& gen,
                                               std::optional<std::vector<double>> nodes = std::nullopt);

struct MomentSpec {
    std::function<double(double)> h;
    double lower = 0.0;
    double upper = 1.0;
    int nodes = 256;
    std::string name;
};

/// Built-in generating functions: "uniform01", "gaussian" (truncated to
/// [-8, 8]) and "step:a,b,height".
MomentSpec named_moment_spec(const std::string& name);

/// Gauss-Legendre nodes and weights on [a, b].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre(int count, double a, double b);

/// v_k = integral of t^k h(t) dt over the support, k = 0..(n-1)m.
GeneratingVector moments_from_function(const MomentSpec& spec, int order, int dim);

struct RankOneApprox {
    int k = 0;
    double l = 0.0;
    int order = 0;
    int dim = 0;
    std::vector<std::vector<double>> vectors;  // u_j

    /// sum_j <u_j, x>^m
    double value(std::span<const double> x) const;
};

/// Riemann-sum vectors u_j = (h(t_j)/k)^{1/m} (1, t_j, ..., t_j^{n-1}),
/// t_j = j/k - l for j = 0..2kl.
RankOneApprox riemann_rank_one(const MomentSpec& spec, int order, int dim, int k, double l);

using Rational = boost::rational<std::int64_t>;

/// m = 2k, n = 2; v_0 = v_m = 1 and v_{2l} = v_{m-2l} = -1/binom(m, 2l).
struct NonCdFamily {
    int k = 0;
    std::vector<Rational> exact;  // generating vector
    GeneratingVector gen;

    int order() const { return 2 * k; }
    HankelTensor tensor() const { return HankelTensor(gen); }
    /// Coefficient of x1^{m-j} x2^j, j = 0..m.
    std::vector<Rational> form_coefficients() const;
};

struct NonCdAnalysis {
    bool identity_holds = false;              // displayed square sum equals the form
    std::vector<std::string> identity_mismatches;
    std::vector<Rational> square_sum;          // coefficients of the square sum, j = 0..m
    bool augmented_holds = false;              // form - square sum is a sum of monomial squares
    std::vector<std::pair<int, Rational>> augmented_squares;  // (j, c): c (x1^{k-j/2} x2^{j/2})^2
    Rational value_at_ones{0};                 // f(1, 1)
    bool negative_at_ones = false;             // f(1, 1) < 0, so the form is neither PSD nor SOS
    Rational obstruction_coefficient{0};       // coefficient of x1^{m-2} x2^2
};

NonCdFamily noncd_family(int k);
NonCdAnalysis analyze_noncd(const NonCdFamily& fam);

/// Double-precision certificate from the displayed squares (plus the monomial
/// squares of the augmentation when the identity alone does not balance).
StructuredDecomposition noncd_certificate(const NonCdFamily& fam, bool augmented);

struct CdObstruction {
    Rational coefficient{0};  // of x1^{m-2} x2^2
    bool holds = false;        // coefficient < 0 rules out any sum of real m-th powers
    std::string statement;
};

CdObstruction cd_obstruction(const NonCdFamily& fam);

std::string to_string(const Rational& r);

}  // namespace hankelkit
