#include <algorithm>
#include <cmath>
#include <limits>

#include "hankelkit/certificates.hpp"
#include "hankelkit/errors.hpp"

namespace hankelkit {

namespace {

using Poly = std::vector<double>;  // ascending coefficients

double max_abs(const Poly& p) {
    double s = 0.0;
    for (double c : p) s = std::max(s, std::abs(c));
    return s;
}

// Drops leading coefficients that are negligible relative to the largest one.
void trim(Poly& p, double rel = 1e-13) {
    const double cutoff = rel * max_abs(p);
    while (!p.empty() && std::abs(p.back()) <= cutoff) p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(static_cast<double>(i) * p[i]);
    return d;
}

double horner(const Poly& p, double x) {
    double r = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

// Remainder of a / b (b nonempty with nonzero leading coefficient).
Poly remainder(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const double q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
        a.pop_back();
    }
    return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p};
    Poly d = derivative(p);
    trim(d);
    if (d.empty()) return chain;
    chain.push_back(d);
    const double ref = max_abs(p);
    while (chain.back().size() > 1) {
        Poly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty() || max_abs(r) <= 1e-12 * ref) break;
        for (double& c : r) c = -c;
        trim(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_changes(const std::vector<Poly>& chain, double x) {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain) {
        const double v = horner(p, x);
        const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

std::vector<double> sturm_real_roots(const std::vector<double>& coeffs, double lo, double hi, double width) {
    Poly p = coeffs;
    trim(p, 1e-15);
    std::vector<double> roots;
    if (p.size() < 2) return roots;
    // An exact root at 0 (possibly multiple) is split off so the chain only
    // sees the remaining factor.
    std::size_t zeros = 0;
    while (zeros + 1 < p.size() && p[zeros] == 0.0) ++zeros;
    if (zeros > 0) {
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
        if (lo <= 0.0 && 0.0 <= hi) roots.push_back(0.0);
        if (p.size() < 2) return roots;
    }
    const auto chain = sturm_chain(p);
    const int degree = static_cast<int>(p.size()) - 1;

    struct Interval {
        double a, b;
        int count;
    };
    const int total = sign_changes(chain, lo) - sign_changes(chain, hi);
    if (total <= 0) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    std::vector<Interval> stack{{lo, hi, std::min(total, degree)}};
    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        if (iv.b - iv.a <= width) {
            roots.push_back(0.5 * (iv.a + iv.b));
            continue;
        }
        // Counts are unreliable exactly at a multiple root, where the whole
        // chain vanishes; split slightly off-centre in that case.
        double mid = 0.5 * (iv.a + iv.b);
        if (horner(chain.back(), mid) == 0.0 || horner(p, mid) == 0.0) mid = iv.a + 0.4142135623730951 * (iv.b - iv.a);
        const int vl = sign_changes(chain, iv.a);
        const int vm = sign_changes(chain, mid);
        const int vr = sign_changes(chain, iv.b);
        if (vl - vm > 0) stack.push_back({iv.a, mid, vl - vm});
        if (vm - vr > 0) stack.push_back({mid, iv.b, vm - vr});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

BinaryPsdResult binary_psd_oracle(const SparseForm& form, double tol) {
    if (form.n_vars() != 2) throw DomainError("binary oracle needs a form in exactly 2 variables");
    const int d = form.degree();
    if (d % 2 != 0) {
        throw DomainError("binary oracle needs an even degree (odd-degree forms are PSD only when zero)");
    }
    BinaryPsdResult out;
    out.is_psd = true;
    out.min_value = 0.0;
    if (form.empty()) return out;

    // c[j] multiplies x1^{d-j} x2^j
    Poly c(static_cast<std::size_t>(d) + 1, 0.0);
    for (const auto& [e, v] : form.terms()) c[static_cast<std::size_t>(e[1])] = v;
    const double scale = max_abs(c);

    out.min_value = std::numeric_limits<double>::infinity();
    auto consider = [&](double s, bool first_chart, const Poly& q) {
        const double norm = std::sqrt(1.0 + s * s);
        const double value = horner(q, s) / std::pow(norm, d);
        if (value < out.min_value) {
            out.min_value = value;
            out.direction = first_chart ? std::array<double, 2>{1.0 / norm, s / norm}
                                        : std::array<double, 2>{s / norm, 1.0 / norm};
        }
    };

    // Chart x1 = 1 covers |x2| <= |x1|; chart x2 = 1 covers the rest. On a
    // chart the circle value is g(s) = q(s) / (1 + s^2)^{d/2}, whose critical
    // points are the roots of q'(s)(1 + s^2) - d s q(s).
    Poly q1 = c;
    Poly q2(c.rbegin(), c.rend());
    for (int chart = 0; chart < 2; ++chart) {
        const Poly& q = chart == 0 ? q1 : q2;
        consider(-1.0, chart == 0, q);
        consider(1.0, chart == 0, q);
        const Poly dq = derivative(q);
        Poly crit(q.size() + 1, 0.0);
        for (std::size_t i = 0; i < dq.size(); ++i) {
            crit[i] += dq[i];
            crit[i + 2] += dq[i];
        }
        for (std::size_t i = 0; i < q.size(); ++i) crit[i + 1] -= static_cast<double>(d) * q[i];
        for (double r : sturm_real_roots(crit, -1.0, 1.0)) consider(r, chart == 0, q);
    }
    out.is_psd = out.min_value >= -tol * scale;
    return out;
}

}  // namespace hankelkit
