#include "hankelkit/decompositions.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>
#include <gsl/gsl_integration.h>

#include "hankelkit/errors.hpp"

namespace hankelkit {

namespace {

double power_sum(const std::vector<double>& u, std::span<const double> x, int m) {
    double dot = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * x[i];
    return std::pow(dot, m);
}

std::vector<double> vandermonde_vector(double gamma, int dim) {
    std::vector<double> u(static_cast<std::size_t>(dim));
    double p = 1.0;
    for (auto& c : u) {
        c = p;
        p *= gamma;
    }
    return u;
}

}  // namespace

std::vector<double> VandermondeDecomposition::reconstruct() const {
    const auto r = static_cast<std::size_t>((dim - 1) * order + 1);
    std::vector<double> v(r, 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double p = 1.0;
        for (std::size_t k = 0; k < r; ++k) {
            v[k] += weights[i] * p;
            p *= nodes[i];
        }
    }
    return v;
}

double VandermondeDecomposition::eval(std::span<const double> x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * power_sum(vandermonde_vector(nodes[i], dim), x, order);
    return s;
}

double VandermondeDecomposition::eval_cd(std::span<const double> x) const {
    if (!cd_vectors) throw DomainError("completely decomposable rewriting exists for odd order only");
    double s = 0.0;
    for (const auto& w : *cd_vectors) s += power_sum(w, x, order);
    return s;
}

std::vector<double> default_vandermonde_nodes(const GeneratingVector& gen) {
    const int r = gen.span() + 1;
    double scale = 1.0;
    for (int k = 1; k <= gen.span(); ++k) {
        const double a = std::abs(gen[static_cast<std::size_t>(k)]);
        if (a > 0.0) scale = std::max(scale, std::pow(a, 1.0 / k));
    }
    std::vector<double> nodes(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) {
        nodes[static_cast<std::size_t>(i - 1)] = scale * std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * r));
    }
    if (r == 1) nodes[0] = 0.0;
    return nodes;
}

VandermondeDecomposition vandermonde_decompose(const GeneratingVector& gen, std::optional<std::vector<double>> nodes) {
    const int r = gen.span() + 1;
    std::vector<double> g = nodes ? std::move(*nodes) : default_vandermonde_nodes(gen);
    if (static_cast<int>(g.size()) != r) {
        std::ostringstream os;
        os << "Vandermonde decomposition needs exactly " << r << " nodes, got " << g.size();
        throw DomainError(os.str());
    }
    double node_scale = 1.0;
    for (double x : g) node_scale = std::max(node_scale, std::abs(x));
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            if (std::abs(g[static_cast<std::size_t>(i)] - g[static_cast<std::size_t>(j)]) <= 1e-10 * node_scale) {
                throw DomainError("Vandermonde nodes must be pairwise distinct");
            }
        }
    }

    Eigen::MatrixXd vm(r, r);
    for (int i = 0; i < r; ++i) {
        double p = 1.0;
        for (int k = 0; k < r; ++k) {
            vm(k, i) = p;
            p *= g[static_cast<std::size_t>(i)];
        }
    }
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(gen.values().data(), r);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(vm);
    Eigen::VectorXd alpha = lu.solve(rhs);
    alpha += lu.solve(rhs - vm * alpha);

    VandermondeDecomposition out;
    out.order = gen.order();
    out.dim = gen.dim();
    out.nodes = g;
    out.weights.assign(alpha.data(), alpha.data() + r);
    const double denom = std::max(rhs.cwiseAbs().maxCoeff(), 1e-300);
    out.relative_residual = (vm * alpha - rhs).cwiseAbs().maxCoeff() / denom;
    if (rhs.cwiseAbs().maxCoeff() == 0.0) out.relative_residual = (vm * alpha).cwiseAbs().maxCoeff();
    if (!(out.relative_residual <= 1e-6)) {
        std::ostringstream os;
        os << "Vandermonde solve residual " << out.relative_residual << " exceeds 1e-6; try different nodes";
        throw ConditioningError(os.str());
    }
    if (gen.order() % 2 == 1) {
        std::vector<std::vector<double>> cd;
        for (int i = 0; i < r; ++i) {
            const double a = out.weights[static_cast<std::size_t>(i)];
            // real m-th root of a signed weight, m odd
            const double root = std::copysign(std::pow(std::abs(a), 1.0 / gen.order()), a);
            auto u = vandermonde_vector(g[static_cast<std::size_t>(i)], gen.dim());
            for (auto& c : u) c *= root;
            cd.push_back(std::move(u));
        }
        out.cd_vectors = std::move(cd);
    }
    return out;
}

// ---------------------------------------------------------------------------

MomentSpec named_moment_spec(const std::string& name) {
    MomentSpec spec;
    spec.name = name;
    if (name == "uniform01") {
        spec.h = [](double t) { return (t >= 0.0 && t <= 1.0) ? 1.0 : 0.0; };
        spec.lower = 0.0;
        spec.upper = 1.0;
        return spec;
    }
    if (name == "gaussian") {
        spec.h = [](double t) { return std::exp(-t * t); };
        spec.lower = -8.0;
        spec.upper = 8.0;
        return spec;
    }
    const std::string prefix = "step:";
    if (name.rfind(prefix, 0) == 0) {
        std::istringstream in(name.substr(prefix.size()));
        double a = 0.0, b = 0.0, height = 0.0;
        char c1 = 0, c2 = 0;
        if (!(in >> a >> c1 >> b >> c2 >> height) || c1 != ',' || c2 != ',' || !(a < b)) {
            throw DomainError("step function must be written step:a,b,height with a < b");
        }
        spec.h = [a, b, height](double t) { return (t >= a && t <= b) ? height : 0.0; };
        spec.lower = a;
        spec.upper = b;
        return spec;
    }
    throw DomainError("unknown generating function '" + name + "'");
}

QuadratureRule gauss_legendre(int count, double a, double b) {
    if (count < 1) throw DomainError("quadrature needs at least one node");
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(count)), &gsl_integration_glfixed_table_free);
    if (!table) throw ResourceError("could not allocate the Gauss-Legendre table");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(count));
    rule.weights.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &rule.nodes[static_cast<std::size_t>(i)],
                                      &rule.weights[static_cast<std::size_t>(i)], table.get());
    }
    // ascending nodes for ordered summation
    std::vector<std::size_t> idx(rule.nodes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return rule.nodes[x] < rule.nodes[y]; });
    QuadratureRule sorted;
    for (auto i : idx) {
        sorted.nodes.push_back(rule.nodes[i]);
        sorted.weights.push_back(rule.weights[i]);
    }
    return sorted;
}

GeneratingVector moments_from_function(const MomentSpec& spec, int order, int dim) {
    if (!spec.h) throw DomainError("moment spec has no generating function");
    if (!(spec.lower < spec.upper) || !std::isfinite(spec.lower) || !std::isfinite(spec.upper)) {
        throw DomainError("moment support must be a finite interval [a, b] with a < b");
    }
    if (spec.nodes < 64) throw DomainError("moment quadrature needs at least 64 nodes");
    auto probe = GeneratingVector::zeros(order, dim);
    const auto r = probe.size();
    const auto rule = gauss_legendre(spec.nodes, spec.lower, spec.upper);
    std::vector<double> v(r, 0.0);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double t = rule.nodes[j];
        const double hv = spec.h(t);
        if (hv < 0.0) {
            std::ostringstream os;
            os << "generating function is negative at t = " << t;
            throw DomainError(os.str());
        }
        double p = rule.weights[j] * hv;
        for (std::size_t k = 0; k < r; ++k) {
            v[k] += p;
            p *= t;
        }
    }
    return GeneratingVector(order, dim, std::move(v));
}

double RankOneApprox::value(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim) throw DomainError("point dimension mismatch");
    double s = 0.0;
    for (const auto& u : vectors) s += power_sum(u, x, order);
    return s;
}

RankOneApprox riemann_rank_one(const MomentSpec& spec, int order, int dim, int k, double l) {
    if (k < 1) throw DomainError("Riemann resolution k must be >= 1");
    if (!(l > 0.0)) throw DomainError("Riemann half-width l must be positive");
    if (order < 1 || dim < 1) throw DomainError("order and dimension must be positive");
    if (!spec.h) throw DomainError("moment spec has no generating function");
    RankOneApprox out{k, l, order, dim, {}};
    const auto count = static_cast<long long>(std::floor(2.0 * k * l + 1e-9));
    const double kinv_root = std::pow(1.0 / k, 1.0 / order);
    for (long long j = 0; j <= count; ++j) {
        const double t = static_cast<double>(j) / k - l;
        const double hv = spec.h(t);
        if (hv < 0.0) throw DomainError("generating function is negative at a Riemann node");
        const double c = std::pow(hv, 1.0 / order) * kinv_root;
        auto u = vandermonde_vector(t, dim);
        for (auto& x : u) x *= c;
        out.vectors.push_back(std::move(u));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

std::vector<Rational> NonCdFamily::form_coefficients() const {
    const int m = order();
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        c[static_cast<std::size_t>(j)] =
            Rational(static_cast<std::int64_t>(multinomials().binomial(m, j))) * exact[static_cast<std::size_t>(j)];
    }
    return c;
}

NonCdFamily noncd_family(int k) {
    if (k < 2) throw DomainError("the non-completely-decomposable family needs k >= 2");
    if (k > 30) throw DomainError("k too large for exact 64-bit rational coefficients");
    const int m = 2 * k;
    std::vector<Rational> v(static_cast<std::size_t>(m) + 1, Rational(0));
    v[0] = 1;
    v[static_cast<std::size_t>(m)] = 1;
    for (int l = 1; l <= k - 1; ++l) {
        const Rational c(-1, static_cast<std::int64_t>(multinomials().binomial(m, 2 * l)));
        v[static_cast<std::size_t>(2 * l)] = c;
        v[static_cast<std::size_t>(m - 2 * l)] = c;
    }
    std::vector<double> dv;
    for (const auto& r : v) dv.push_back(boost::rational_cast<double>(r));
    return NonCdFamily{k, std::move(v), GeneratingVector(m, 2, std::move(dv))};
}

NonCdAnalysis analyze_noncd(const NonCdFamily& fam) {
    const int k = fam.k;
    const int m = fam.order();
    NonCdAnalysis out;
    const auto form = fam.form_coefficients();

    // sum_{j=0}^{k-2} (x1^{k-j} x2^j - x1^{k-j-2} x2^{j+2})^2, indexed by x2 power
    out.square_sum.assign(static_cast<std::size_t>(m) + 1, Rational(0));
    for (int j = 0; j <= k - 2; ++j) {
        out.square_sum[static_cast<std::size_t>(2 * j)] += 1;
        out.square_sum[static_cast<std::size_t>(2 * j + 2)] -= 2;
        out.square_sum[static_cast<std::size_t>(2 * j + 4)] += 1;
    }
    out.identity_holds = true;
    out.augmented_holds = true;
    for (int j = 0; j <= m; ++j) {
        const auto f = form[static_cast<std::size_t>(j)];
        const auto s = out.square_sum[static_cast<std::size_t>(j)];
        if (f != s) {
            out.identity_holds = false;
            std::ostringstream os;
            os << "x1^" << (m - j) << " x2^" << j << ": form " << to_string(f) << ", squares " << to_string(s);
            out.identity_mismatches.push_back(os.str());
            const auto d = f - s;
            if (j % 2 == 0 && d > 0) out.augmented_squares.emplace_back(j, d);
            else out.augmented_holds = false;
        }
    }
    Rational at_ones(0);
    for (const auto& c : form) at_ones += c;
    out.value_at_ones = at_ones;
    out.negative_at_ones = at_ones < 0;
    if (out.negative_at_ones) out.augmented_holds = false;
    out.obstruction_coefficient = form[2];
    return out;
}

StructuredDecomposition noncd_certificate(const NonCdFamily& fam, bool augmented) {
    const int k = fam.k;
    StructuredDecomposition d;
    d.n_vars = 2;
    d.degree = fam.order();
    for (int j = 0; j <= k - 2; ++j) {
        SparseForm g(2, k);
        g.add({k - j, j}, 1.0);
        g.add({k - j - 2, j + 2}, -1.0);
        d.squares.push_back({1.0, std::move(g), "square j=" + std::to_string(j)});
    }
    if (augmented) {
        for (const auto& [j, c] : analyze_noncd(fam).augmented_squares) {
            SparseForm g(2, k);
            g.add({k - j / 2, j / 2}, 1.0);
            d.squares.push_back({boost::rational_cast<double>(c), std::move(g), "monomial square"});
        }
    }
    return d;
}

CdObstruction cd_obstruction(const NonCdFamily& fam) {
    const int m = fam.order();
    CdObstruction out;
    out.coefficient = fam.form_coefficients()[2];
    out.holds = out.coefficient < 0;
    std::ostringstream os;
    os << "coefficient of x1^" << (m - 2) << " x2^2 is " << to_string(out.coefficient)
       << "; a sum of real m-th powers (a_p x1 + b_p x2)^m gives binom(m,2) sum_p a_p^" << (m - 2)
       << " b_p^2 >= 0 there, since m - 2 is even";
    if (out.holds) os << ", so the tensor is not completely decomposable";
    out.statement = os.str();
    return out;
}

}  // namespace hankelkit
