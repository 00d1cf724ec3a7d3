#include "hankelkit/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hankelkit/errors.hpp"

namespace hankelkit {

namespace {

const double kSqrt70 = std::sqrt(70.0);
// 560 + 70 sqrt 70
const double kSexticThreshold = 560.0 + 70.0 * kSqrt70;
// (sqrt 70 - 8) / 2
const double kMiddleDiagonal = (kSqrt70 - 8.0) / 2.0;
// 60 + 15 sqrt 70
const double kTailCoefficient = 60.0 + 15.0 * kSqrt70;

Exponent unit_power(int n_vars, int var, int degree) {
    Exponent e(static_cast<std::size_t>(n_vars), 0);
    e[static_cast<std::size_t>(var)] = degree;
    return e;
}

bool is_diagonal(const Exponent& e) {
    return std::count_if(e.begin(), e.end(), [](int k) { return k != 0; }) <= 1;
}

bool all_even(const Exponent& e) {
    return std::all_of(e.begin(), e.end(), [](int k) { return k % 2 == 0; });
}

// Variables that appear in at least one term.
std::vector<int> support(const SparseForm& f) {
    std::vector<bool> used(static_cast<std::size_t>(f.n_vars()), false);
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) used[i] = true;
        }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (used[i]) out.push_back(static_cast<int>(i));
    }
    return out;
}

SparseForm restrict_to(const SparseForm& f, int a, int b) {
    SparseForm out(2, f.degree());
    for (const auto& [e, c] : f.terms()) {
        out.add({e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]}, c);
    }
    return out;
}

DmtPiece make_piece(SparseForm form, std::string label, double tol) {
    auto cert = agm_certificate(form, tol);
    return {std::move(form), cert, std::move(label)};
}

}  // namespace

// ---------------------------------------------------------------------------

SparseForm StructuredDecomposition::assemble() const {
    SparseForm total(n_vars, degree);
    for (const auto& sq : squares) total = total + sq.form.squared().scaled(sq.coefficient);
    for (const auto& piece : residuals) total = total + piece.form;
    return total;
}

double StructuredDecomposition::min_agm_slack() const {
    double s = std::numeric_limits<double>::infinity();
    for (const auto& piece : residuals) s = std::min(s, piece.certificate.slack);
    return s;
}

AgmCertificate agm_certificate(const SparseForm& dmt, double tol) {
    const int m = dmt.degree();
    const int n = dmt.n_vars();
    AgmCertificate cert;
    std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
    for (const auto& [e, c] : dmt.terms()) {
        if (is_diagonal(e)) {
            for (int i = 0; i < n; ++i) {
                if (e[static_cast<std::size_t>(i)] == m) diag[static_cast<std::size_t>(i)] = c;
            }
        } else {
            if (cert.mixed_exponent) {
                throw DomainError("diagonal-minus-tail certificate supports a single mixed monomial");
            }
            cert.mixed_exponent = e;
            cert.mixed_coefficient = c;
        }
    }
    if (m % 2 != 0) throw DomainError("AGM certificate needs an even degree");

    cert.min_diagonal = diag.empty() ? 0.0 : *std::min_element(diag.begin(), diag.end());
    double scale = std::abs(cert.mixed_coefficient);
    for (double d : diag) scale = std::max(scale, std::abs(d));
    const double band = tol * scale;

    const bool diag_ok = cert.min_diagonal >= -band;
    if (!cert.mixed_exponent) {
        cert.slack = cert.min_diagonal;
        cert.holds = diag_ok;
        return cert;
    }

    const Exponent& alpha = *cert.mixed_exponent;
    double log_bound = 0.0;
    bool zero_bound = false;
    for (int i = 0; i < n; ++i) {
        const int a = alpha[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        const double w = static_cast<double>(a) / m;
        const double d = diag[static_cast<std::size_t>(i)];
        if (d <= 0.0) {
            zero_bound = true;
            break;
        }
        log_bound += w * std::log(d / w);
    }
    cert.geometric_bound = zero_bound ? 0.0 : std::exp(log_bound);
    cert.slack = cert.geometric_bound - std::abs(cert.mixed_coefficient);
    const bool tail_nonneg = cert.mixed_coefficient > 0.0 && all_even(alpha);
    cert.holds = diag_ok && (tail_nonneg || cert.slack >= -band);
    return cert;
}

DecompositionCheck verify_decomposition(const HankelTensor& t, const StructuredDecomposition& d, double tol) {
    if (t.order() % 2 != 0) throw DomainError("decomposition check needs an even order");
    if (d.n_vars != t.dim() || d.degree != t.order()) {
        throw DomainError("decomposition shape does not match the tensor");
    }
    DecompositionCheck out;
    out.squares_nonnegative = true;
    for (const auto& sq : d.squares) {
        if (sq.form.degree() * 2 != t.order()) throw DomainError("square of the wrong degree");
        if (sq.coefficient < 0.0) {
            out.squares_nonnegative = false;
            out.notes.push_back("negative square coefficient: " + sq.label);
        }
    }

    const SparseForm target = expand(t);
    const SparseForm assembled = d.assemble();
    const SparseForm diff = target - assembled;
    const double scale = std::max({target.max_abs_coefficient(), assembled.max_abs_coefficient(),
                                   std::numeric_limits<double>::min()});
    out.max_discrepancy = diff.max_abs_coefficient() / scale;

    out.certificates_hold = true;
    out.binary_pieces_psd = true;
    for (const auto& piece : d.residuals) {
        // Recompute rather than trust the stored certificate.
        const auto cert = agm_certificate(piece.form, tol);
        if (!cert.holds) {
            out.certificates_hold = false;
            out.notes.push_back("AGM certificate fails: " + piece.label);
        }
        const auto vars = support(piece.form);
        if (vars.size() == 2 && cert.mixed_exponent) {
            const auto r = binary_psd_oracle(restrict_to(piece.form, vars[0], vars[1]));
            const double band = tol * std::max(piece.form.max_abs_coefficient(), 1e-300);
            if (!r.is_psd && r.min_value < -band) {
                out.binary_pieces_psd = false;
                out.notes.push_back("binary piece is not PSD: " + piece.label);
            }
        }
    }
    if (out.max_discrepancy > tol) {
        std::ostringstream os;
        os << "coefficient mismatch " << out.max_discrepancy;
        out.notes.push_back(os.str());
    }
    out.pass = out.squares_nonnegative && out.certificates_hold && out.binary_pieces_psd &&
               out.max_discrepancy <= tol;
    return out;
}

// ---------------------------------------------------------------------------

StructuredDecomposition build_sextic_truncated_decomposition(double v0, double v6, double v12, double tol) {
    if (v6 < 0.0 || v0 < 0.0 || v12 < 0.0) {
        throw DomainError("sextic truncated decomposition needs v0, v6, v12 >= 0");
    }
    StructuredDecomposition d;
    d.n_vars = 3;
    d.degree = 6;
    if (v6 == 0.0) {
        SparseForm diag(3, 6);
        diag.add(unit_power(3, 0, 6), v0);
        diag.add(unit_power(3, 2, 6), v12);
        d.residuals.push_back(make_piece(std::move(diag), "diagonal", tol));
        return d;
    }
    const double s = std::sqrt(v0 * v12);
    if (!(s >= kSexticThreshold * v6 * (1.0 - tol))) {
        std::ostringstream os;
        os << "sqrt(v0 v12) = " << s << " is below (560 + 70 sqrt 70) v6 = " << kSexticThreshold * v6;
        throw DomainError(os.str());
    }
    return build_quasi_sextic_decomposition(v0, 0.0, v6, 0.0, v12, 1.0, 1.0, tol);
}

StructuredDecomposition build_truncated_sos_decomposition(int order, double v0, double vmid,
                                                          const TruncatedSosBound& bound, double tol) {
    if (order < 6 || order % 2 != 0) throw DomainError("truncated SOS decomposition needs even order >= 6");
    if (bound.order != order) throw DomainError("bound data was computed for a different order");
    if (vmid < 0.0 || v0 < 0.0) throw DomainError("truncated SOS decomposition needs v0, vmid >= 0");
    if (v0 < bound.bound * vmid * (1.0 - tol)) {
        std::ostringstream os;
        os << "v0 = " << v0 << " is below bound * vmid = " << bound.bound * vmid;
        throw DomainError(os.str());
    }
    const int m = order;
    const int k = m / 2;
    StructuredDecomposition d;
    d.n_vars = 3;
    d.degree = m;

    SparseForm diag(3, m);
    if (vmid == 0.0) {
        diag.add(unit_power(3, 0, m), v0);
        diag.add(unit_power(3, 2, m), v0);
        d.residuals.push_back(make_piece(std::move(diag), "diagonal", tol));
        return d;
    }

    const double half = vmid / 2.0;
    for (int p = 1; p <= k; ++p) {
        const auto idx = static_cast<std::size_t>(p - 1);
        const double cp = bound.pair_coefficient[idx];
        SparseForm base(3, k);
        base.add({p, k - p, 0}, 1.0);
        base.add({0, k - p, p}, 1.0);
        d.squares.push_back({half * cp, std::move(base), "pair p=" + std::to_string(p)});

        const double w_mid = static_cast<double>(m - 2 * p) / m;
        const double w_side = static_cast<double>(2 * p) / m;
        for (int side : {0, 2}) {
            SparseForm piece(3, m);
            piece.add(unit_power(3, 1, m), half * w_mid * bound.delta[idx]);
            piece.add(unit_power(3, side, m), half * w_side * bound.big_delta[idx]);
            Exponent mixed(3, 0);
            mixed[1] = m - 2 * p;
            mixed[static_cast<std::size_t>(side)] = 2 * p;
            piece.add(mixed, -half * cp);
            d.residuals.push_back(make_piece(std::move(piece),
                                             "agm p=" + std::to_string(p) + (side == 0 ? " x1" : " x3"), tol));
        }
    }
    diag.add(unit_power(3, 1, m), vmid * (1.0 - bound.delta_weight_sum));
    diag.add(unit_power(3, 0, m), v0 - vmid * bound.bound);
    diag.add(unit_power(3, 2, m), v0 - vmid * bound.bound);
    d.residuals.push_back(make_piece(std::move(diag), "diagonal remainder", tol));
    return d;
}

// ---------------------------------------------------------------------------

bool QuasiSexticSlack::admissible(double tol) const {
    return first_offdiag >= -tol && last_offdiag >= -tol && middle_diagonal >= -tol && agm_product >= -tol;
}

namespace {

struct QuasiParts {
    double s;       // sqrt(v0 v12)
    double ratio;   // 1 - 10 v6 / s
    double p1;      // |v1| (5 / (t1 v0))^5
    double p2;      // |v11| (5 / (t2 v12))^5
    double diag1;   // v0 - 10 v6 sqrt(v0/v12) - |v1| t1 v0
    double diag2;   // x2^6 budget
    double diag3;   // v12 - 10 v6 sqrt(v12/v0) - |v11| t2 v12
    double cube;    // v6^3 (60 + 15 sqrt 70)^3 / 27
};

QuasiParts quasi_parts(double v0, double v1, double v6, double v11, double v12, double t1, double t2) {
    QuasiParts q{};
    q.s = std::sqrt(v0 * v12);
    q.ratio = 1.0 - 10.0 * v6 / q.s;
    q.p1 = std::abs(v1) * std::pow(5.0 / (t1 * v0), 5);
    q.p2 = std::abs(v11) * std::pow(5.0 / (t2 * v12), 5);
    q.diag1 = v0 - 10.0 * v6 * std::sqrt(v0 / v12) - std::abs(v1) * t1 * v0;
    q.diag2 = kMiddleDiagonal * v6 - q.p1 - q.p2;
    q.diag3 = v12 - 10.0 * v6 * std::sqrt(v12 / v0) - std::abs(v11) * t2 * v12;
    q.cube = std::pow(v6 * kTailCoefficient, 3) / 27.0;
    return q;
}

double relative_gap(double lhs, double rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), std::numeric_limits<double>::min()});
    return (lhs - rhs) / scale;
}

}  // namespace

QuasiSexticSlack quasi_sextic_slack(double v0, double v1, double v6, double v11, double v12, double t1,
                                    double t2) {
    if (!(v0 > 0.0 && v6 > 0.0 && v12 > 0.0)) {
        throw DomainError("quasi-truncated sufficient condition needs v0, v6, v12 > 0");
    }
    if (!(t1 > 0.0 && t2 > 0.0)) throw DomainError("t1, t2 must be positive");
    const auto q = quasi_parts(v0, v1, v6, v11, v12, t1, t2);
    QuasiSexticSlack s;
    s.first_offdiag = relative_gap(q.ratio / t1, std::abs(v1));
    s.last_offdiag = relative_gap(q.ratio / t2, std::abs(v11));
    s.middle_diagonal = relative_gap(kMiddleDiagonal * v6, q.p1 + q.p2);
    double product = q.diag1 * q.diag3 * q.diag2;
    if (q.diag1 < 0.0 || q.diag2 < 0.0 || q.diag3 < 0.0) product = -std::abs(product);
    s.agm_product = relative_gap(product, q.cube);
    return s;
}

StructuredDecomposition build_quasi_sextic_decomposition(double v0, double v1, double v6, double v11,
                                                         double v12, double t1, double t2, double tol) {
    const auto slack = quasi_sextic_slack(v0, v1, v6, v11, v12, t1, t2);
    if (!slack.admissible(tol)) {
        throw DomainError("quasi-truncated decomposition conditions do not hold at (t1, t2)");
    }
    const auto q = quasi_parts(v0, v1, v6, v11, v12, t1, t2);
    StructuredDecomposition d;
    d.n_vars = 3;
    d.degree = 6;

    SparseForm outer(3, 3);
    outer.add({3, 0, 0}, std::pow(v0 / v12, 0.25));
    outer.add({0, 0, 3}, std::pow(v12 / v0, 0.25));
    d.squares.push_back({10.0 * v6, std::move(outer), "outer cubes"});

    SparseForm inner(3, 3);
    inner.add({0, 3, 0}, std::sqrt((10.0 - kSqrt70) / 2.0));
    inner.add({1, 1, 1}, std::sqrt(150.0 + 15.0 * kSqrt70));
    d.squares.push_back({v6, std::move(inner), "middle cube"});

    if (v1 != 0.0) {
        SparseForm f3(3, 6);
        f3.add({6, 0, 0}, std::abs(v1) * t1 * v0);
        f3.add({5, 1, 0}, 6.0 * v1);
        f3.add({0, 6, 0}, q.p1);
        d.residuals.push_back(make_piece(std::move(f3), "binary x1,x2", tol));
    }
    if (v11 != 0.0) {
        SparseForm f4(3, 6);
        f4.add({0, 0, 6}, std::abs(v11) * t2 * v12);
        f4.add({0, 1, 5}, 6.0 * v11);
        f4.add({0, 6, 0}, q.p2);
        d.residuals.push_back(make_piece(std::move(f4), "binary x2,x3", tol));
    }

    SparseForm f1(3, 6);
    f1.add({6, 0, 0}, q.diag1);
    f1.add({0, 6, 0}, q.diag2);
    f1.add({0, 0, 6}, q.diag3);
    f1.add({2, 2, 2}, -v6 * kTailCoefficient);
    d.residuals.push_back(make_piece(std::move(f1), "diagonal minus tail", tol));
    return d;
}

}  // namespace hankelkit
