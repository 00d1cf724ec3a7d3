#include "hankelkit/symtensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hankelkit/errors.hpp"

namespace hankelkit {

GeneratingVector::GeneratingVector(int order, int dim, std::vector<double> values)
    : order_(order), dim_(dim), values_(std::move(values)) {
    if (order < 1 || dim < 1) {
        throw DomainError("generating vector needs order >= 1 and dimension >= 1");
    }
    const auto expected = static_cast<std::size_t>((dim - 1) * order + 1);
    if (values_.size() != expected) {
        std::ostringstream os;
        os << "generating vector for m=" << order << ", n=" << dim << " must have length "
           << expected << ", got " << values_.size();
        throw DomainError(os.str());
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw DomainError("generating vector has a non-finite entry");
    }
}

GeneratingVector GeneratingVector::zeros(int order, int dim) {
    if (order < 1 || dim < 1) {
        throw DomainError("generating vector needs order >= 1 and dimension >= 1");
    }
    return GeneratingVector(order, dim,
                            std::vector<double>(static_cast<std::size_t>((dim - 1) * order + 1)));
}

double GeneratingVector::max_abs() const {
    double s = 0.0;
    for (double v : values_) s = std::max(s, std::abs(v));
    return s;
}

// ---------------------------------------------------------------------------

SparseForm::SparseForm(int n_vars, int degree) : n_vars_(n_vars), degree_(degree) {
    if (n_vars < 1 || degree < 0) throw DomainError("sparse form needs n_vars >= 1, degree >= 0");
}

void SparseForm::check_exponent(const Exponent& e) const {
    if (static_cast<int>(e.size()) != n_vars_) {
        throw DomainError("exponent tuple length does not match the number of variables");
    }
    int sum = 0;
    for (int k : e) {
        if (k < 0) throw DomainError("negative exponent");
        sum += k;
    }
    if (sum != degree_) throw DomainError("exponent tuple does not sum to the form degree");
}

void SparseForm::add(const Exponent& e, double c) {
    check_exponent(e);
    if (c == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    }
}

double SparseForm::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0.0 : it->second;
}

namespace {

// x^e with repeated multiplication; exponents here are small.
double monomial_value(const Exponent& e, std::span<const double> x) {
    double p = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) p *= x[i];
    }
    return p;
}

}  // namespace

double SparseForm::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_vars_) throw DomainError("point dimension mismatch");
    double s = 0.0;
    for (const auto& [e, c] : terms_) s += c * monomial_value(e, x);
    return s;
}

std::vector<double> SparseForm::gradient(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_vars_) throw DomainError("point dimension mismatch");
    std::vector<double> g(x.size(), 0.0);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Exponent d = e;
            --d[i];
            g[i] += c * e[i] * monomial_value(d, x);
        }
    }
    return g;
}

double SparseForm::max_abs_coefficient() const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) s = std::max(s, std::abs(c));
    return s;
}

SparseForm SparseForm::operator+(const SparseForm& other) const {
    if (other.n_vars_ != n_vars_ || other.degree_ != degree_) {
        throw DomainError("adding forms of different shape");
    }
    SparseForm out = *this;
    for (const auto& [e, c] : other.terms_) out.add(e, c);
    return out;
}

SparseForm SparseForm::operator-(const SparseForm& other) const { return *this + other.scaled(-1.0); }

SparseForm SparseForm::operator*(const SparseForm& other) const {
    if (other.n_vars_ != n_vars_) throw DomainError("multiplying forms in different variables");
    SparseForm out(n_vars_, degree_ + other.degree_);
    Exponent e(static_cast<std::size_t>(n_vars_));
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : other.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
            out.add(e, ca * cb);
        }
    }
    return out;
}

SparseForm SparseForm::scaled(double c) const {
    SparseForm out(n_vars_, degree_);
    if (c == 0.0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

SparseForm SparseForm::monomial(int n_vars, const Exponent& e, double c) {
    int deg = 0;
    for (int k : e) deg += k;
    SparseForm f(n_vars, deg);
    f.add(e, c);
    return f;
}

std::string SparseForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        os << std::abs(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

MultinomialTable::MultinomialTable(int max_order) : max_order_(max_order) {
    if (max_order < 0 || max_order > 62) throw DomainError("multinomial table order must be in [0, 62]");
    pascal_.resize(static_cast<std::size_t>(max_order) + 1);
    for (int n = 0; n <= max_order; ++n) {
        auto& row = pascal_[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k) {
            const auto& prev = pascal_[static_cast<std::size_t>(n - 1)];
            row[static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(k)];
        }
    }
}

std::uint64_t MultinomialTable::binomial(int n, int k) const {
    if (n < 0 || n > max_order_) throw DomainError("binomial order outside the table");
    if (k < 0 || k > n) return 0;
    return pascal_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t MultinomialTable::multinomial(std::span<const int> parts) const {
    int total = 0;
    for (int t : parts) {
        if (t < 0) throw DomainError("negative multinomial part");
        total += t;
    }
    if (total > max_order_) throw DomainError("multinomial order outside the table");
    // binom(m, t1) binom(m - t1, t2) ...
    std::uint64_t acc = 1;
    int rest = total;
    for (int t : parts) {
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(acc, binomial(rest, t), &next)) {
            throw ResourceError("multinomial coefficient overflows 64 bits");
        }
        acc = next;
        rest -= t;
    }
    return acc;
}

const MultinomialTable& multinomials() {
    static const MultinomialTable table(62);
    return table;
}

std::uint64_t monomial_count(int n_vars, int degree) {
    if (n_vars < 1 || degree < 0) return 0;
    // binom(degree + n - 1, n - 1) built incrementally; saturate instead of overflowing.
    const int n = degree + n_vars - 1;
    int k = std::min(n_vars - 1, degree);
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
    if (r > 1.8e19L) return UINT64_MAX;
    return static_cast<std::uint64_t>(std::llround(static_cast<double>(r)));
}

double hankel_entry(const HankelTensor& t, std::span<const int> indices) {
    if (static_cast<int>(indices.size()) != t.order()) {
        throw DomainError("index tuple length must equal the tensor order");
    }
    int sum = 0;
    for (int i : indices) {
        if (i < 1 || i > t.dim()) throw DomainError("tensor index out of range");
        sum += i;
    }
    return t.gen()[static_cast<std::size_t>(sum - t.order())];
}

namespace {

void check_point(const HankelTensor& t, std::span<const double> x) {
    if (static_cast<int>(x.size()) != t.dim()) {
        throw DomainError("point dimension does not match the tensor dimension");
    }
}

// exponent e -> v offset sum (i-1) e_i with 0-based i
int generating_offset(const Exponent& e) {
    int off = 0;
    for (std::size_t i = 0; i < e.size(); ++i) off += static_cast<int>(i) * e[i];
    return off;
}

double grouped_eval(const HankelTensor& t, std::span<const double> x) {
    const auto& table = multinomials();
    const auto& v = t.gen();
    double s = 0.0;
    for_each_exponent(t.dim(), t.order(), [&](const Exponent& e) {
        const double vk = v[static_cast<std::size_t>(generating_offset(e))];
        if (vk == 0.0) return;
        s += static_cast<double>(table.multinomial(e)) * vk * monomial_value(e, x);
    });
    return s;
}

void loop_recurse(const HankelTensor& t, std::span<const double> x, int depth, int offset,
                  double prod, double& acc) {
    if (depth == t.order()) {
        acc += t.gen()[static_cast<std::size_t>(offset)] * prod;
        return;
    }
    for (int i = 0; i < t.dim(); ++i) {
        loop_recurse(t, x, depth + 1, offset + i, prod * x[static_cast<std::size_t>(i)], acc);
    }
}

}  // namespace

double eval_index_loop(const HankelTensor& t, std::span<const double> x) {
    check_point(t, x);
    double acc = 0.0;
    loop_recurse(t, x, 0, 0, 1.0, acc);
    return acc;
}

Evaluation evaluate(const HankelTensor& t, std::span<const double> x, std::size_t monomial_cap) {
    check_point(t, x);
    if (t.order() <= multinomials().max_order() && monomial_count(t.dim(), t.order()) <= monomial_cap) {
        return {grouped_eval(t, x), EvalPath::GroupedExpansion};
    }
    return {eval_index_loop(t, x), EvalPath::IndexLoop};
}

double eval(const HankelTensor& t, std::span<const double> x) { return evaluate(t, x).value; }

std::vector<double> gradient(const HankelTensor& t, std::span<const double> x, std::size_t monomial_cap) {
    check_point(t, x);
    const int n = t.dim();
    std::vector<double> g(static_cast<std::size_t>(n), 0.0);
    if (t.order() <= multinomials().max_order() && monomial_count(n, t.order()) <= monomial_cap) {
        const auto& table = multinomials();
        for_each_exponent(n, t.order(), [&](const Exponent& e) {
            const double vk = t.gen()[static_cast<std::size_t>(generating_offset(e))];
            if (vk == 0.0) return;
            const double c = static_cast<double>(table.multinomial(e)) * vk;
            for (int i = 0; i < n; ++i) {
                if (e[static_cast<std::size_t>(i)] == 0) continue;
                Exponent d = e;
                --d[static_cast<std::size_t>(i)];
                g[static_cast<std::size_t>(i)] += c * e[static_cast<std::size_t>(i)] * monomial_value(d, x);
            }
        });
        return g;
    }
    // m * sum over (i2..im) of a_{i,i2..im} x_{i2}..x_{im}
    if (t.order() == 1) {
        for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = t.gen()[static_cast<std::size_t>(i)];
        return g;
    }
    const auto sub_len = static_cast<std::size_t>((n - 1) * (t.order() - 1) + 1);
    for (int i = 0; i < n; ++i) {
        std::vector<double> shifted(sub_len);
        for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] = t.gen()[k + static_cast<std::size_t>(i)];
        HankelTensor sub(GeneratingVector(t.order() - 1, n, std::move(shifted)));
        double acc = 0.0;
        loop_recurse(sub, x, 0, 0, 1.0, acc);
        g[static_cast<std::size_t>(i)] = t.order() * acc;
    }
    return g;
}

SparseForm expand(const HankelTensor& t, std::size_t monomial_cap) {
    const auto count = monomial_count(t.dim(), t.order());
    if (count > monomial_cap || t.order() > multinomials().max_order()) {
        std::ostringstream os;
        os << "expansion needs " << count << " monomials, cap is " << monomial_cap;
        throw ResourceError(os.str());
    }
    const auto& table = multinomials();
    SparseForm f(t.dim(), t.order());
    for_each_exponent(t.dim(), t.order(), [&](const Exponent& e) {
        const double vk = t.gen()[static_cast<std::size_t>(generating_offset(e))];
        if (vk != 0.0) f.add(e, static_cast<double>(table.multinomial(e)) * vk);
    });
    return f;
}

NecessaryCheck check_necessary_psd(const HankelTensor& t) {
    for (int i = 1; i <= t.dim(); ++i) {
        if (t.gen()[static_cast<std::size_t>((i - 1) * t.order())] < 0.0) return {false, i};
    }
    return {true, std::nullopt};
}

std::string to_string(EvalPath p) {
    return p == EvalPath::GroupedExpansion ? "grouped-expansion" : "index-loop";
}

}  // namespace hankelkit
