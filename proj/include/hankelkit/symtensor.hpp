#pragma once

// Hankel tensor core: generating vectors, implicit entries, evaluation of the
// associated homogeneous form and its sparse monomial expansion.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hankelkit {

using Exponent = std::vector<int>;

inline constexpr std::size_t kDefaultMonomialCap = 100000;

/// Sequence v_0..v_{(n-1)m} that determines an order-m, dimension-n Hankel tensor.
class GeneratingVector {
public:
    GeneratingVector(int order, int dim, std::vector<double> values);

    /// All-zero vector of the right length.
    static GeneratingVector zeros(int order, int dim);

    int order() const { return order_; }
    int dim() const { return dim_; }
    /// (n-1)m, the largest index.
    int span() const { return (dim_ - 1) * order_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    const std::vector<double>& values() const { return values_; }
    double max_abs() const;

private:
    int order_;
    int dim_;
    std::vector<double> values_;
};

/// Hankel tensor with entries a_{i1..im} = v_{i1+..+im-m}; never stored densely.
class HankelTensor {
public:
    explicit HankelTensor(GeneratingVector gen) : gen_(std::move(gen)) {}

    const GeneratingVector& gen() const { return gen_; }
    int order() const { return gen_.order(); }
    int dim() const { return gen_.dim(); }

private:
    GeneratingVector gen_;
};

/// Homogeneous polynomial stored as exponent tuple -> nonzero coefficient.
class SparseForm {
public:
    using Terms = std::map<Exponent, double>;

    SparseForm(int n_vars, int degree);

    int n_vars() const { return n_vars_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c to the coefficient of x^e; exact cancellation removes the term.
    void add(const Exponent& e, double c);
    double coefficient(const Exponent& e) const;

    double eval(std::span<const double> x) const;
    std::vector<double> gradient(std::span<const double> x) const;
    double max_abs_coefficient() const;

    SparseForm operator+(const SparseForm& other) const;
    SparseForm operator-(const SparseForm& other) const;
    SparseForm operator*(const SparseForm& other) const;
    SparseForm scaled(double c) const;
    SparseForm squared() const { return *this * *this; }

    /// Single monomial c * x^e.
    static SparseForm monomial(int n_vars, const Exponent& e, double c);

    std::string to_string() const;

private:
    void check_exponent(const Exponent& e) const;

    int n_vars_;
    int degree_;
    Terms terms_;
};

/// Exact multinomial coefficients m!/(t_1!...t_k!) for orders up to a bound.
class MultinomialTable {
public:
    explicit MultinomialTable(int max_order = 40);

    int max_order() const { return max_order_; }
    std::uint64_t binomial(int n, int k) const;
    std::uint64_t multinomial(std::span<const int> parts) const;

private:
    int max_order_;
    std::vector<std::vector<std::uint64_t>> pascal_;
};

const MultinomialTable& multinomials();

/// Number of degree-m monomials in n variables.
std::uint64_t monomial_count(int n_vars, int degree);

double hankel_entry(const HankelTensor& t, std::span<const int> indices);

enum class EvalPath { GroupedExpansion, IndexLoop };

struct Evaluation {
    double value;
    EvalPath path;
};

/// f(x) = A x^m. Uses grouped multinomial expansion under the monomial cap,
/// else the m-fold index loop.
Evaluation evaluate(const HankelTensor& t, std::span<const double> x,
                    std::size_t monomial_cap = kDefaultMonomialCap);
double eval(const HankelTensor& t, std::span<const double> x);

/// The plain m-fold sum over all index tuples; n^m work.
double eval_index_loop(const HankelTensor& t, std::span<const double> x);

/// Gradient of f at x, m * A x^{m-1}.
std::vector<double> gradient(const HankelTensor& t, std::span<const double> x,
                             std::size_t monomial_cap = kDefaultMonomialCap);

SparseForm expand(const HankelTensor& t, std::size_t monomial_cap = kDefaultMonomialCap);

/// Calls visit(exponent) for every exponent tuple of the given degree, in
/// lexicographically decreasing order of the first entry.
template <class Visit>
void for_each_exponent(int n_vars, int degree, Visit&& visit);

struct NecessaryCheck {
    bool pass;
    std::optional<int> offending_index;  // 1-based i with v_{(i-1)m} < 0
};

/// v_{(i-1)m} >= 0 for every i in [n].
NecessaryCheck check_necessary_psd(const HankelTensor& t);

std::string to_string(EvalPath p);

// ---------------------------------------------------------------------------

namespace detail {
template <class Visit>
void exponent_recurse(Exponent& e, int pos, int remaining, Visit& visit) {
    const int last = static_cast<int>(e.size()) - 1;
    if (pos == last) {
        e[pos] = remaining;
        visit(static_cast<const Exponent&>(e));
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        e[pos] = k;
        exponent_recurse(e, pos + 1, remaining - k, visit);
    }
}
}  // namespace detail

template <class Visit>
void for_each_exponent(int n_vars, int degree, Visit&& visit) {
    if (n_vars <= 0) return;
    Exponent e(static_cast<std::size_t>(n_vars), 0);
    detail::exponent_recurse(e, 0, degree, visit);
}

}  // namespace hankelkit
