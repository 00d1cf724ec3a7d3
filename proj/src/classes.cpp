#include "hankelkit/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hankelkit/errors.hpp"

namespace hankelkit {

namespace {

const double kSqrt70 = std::sqrt(70.0);
const double kThreshold = 560.0 + 70.0 * kSqrt70;
// t = 10 + sqrt 70 maximizes -t^3 + 30 t^2 - 90 t + 20 over t >= 0.
const double kWitnessT = 10.0 + kSqrt70;

double signed_root(double x, double k) { return std::copysign(std::pow(std::abs(x), 1.0 / k), x); }

HankelTensor sextic_tensor(double v0, double v1, double v6, double v11, double v12) {
    std::vector<double> v(13, 0.0);
    v[0] = v0;
    v[1] = v1;
    v[6] = v6;
    v[11] = v11;
    v[12] = v12;
    return HankelTensor(GeneratingVector(6, 3, std::move(v)));
}

Witness form_witness(const HankelTensor& t, std::vector<double> x, std::string refutes, std::string origin) {
    Witness w;
    w.kind = Witness::Kind::Form;
    w.value = eval(t, x);
    w.point = std::move(x);
    w.refutes = std::move(refutes);
    w.origin = std::move(origin);
    return w;
}

Witness matrix_witness(const Eigen::VectorXd& y, const AssociatedHankelMatrix& a, std::string origin) {
    Witness w;
    w.kind = Witness::Kind::Matrix;
    w.point.assign(y.data(), y.data() + y.size());
    w.value = a.quadratic_form(y);
    w.refutes = "strong";
    w.origin = std::move(origin);
    return w;
}

std::vector<double> unit(int n, int i) {
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    return e;
}

// Point with x2 = 0 where v0 x1^6 + 20 v6 x1^3 x3^3 + v12 x3^6 < 0; needs v6 > 0
// and sqrt(v0 v12) < 10 v6.
std::array<double, 3> cross_plane_point(double v0, double v6, double v12) {
    if (v0 > 0.0 && v12 > 0.0) return {std::pow(v12, 1.0 / 6.0), 0.0, -std::pow(v0, 1.0 / 6.0)};
    if (v0 <= 0.0) {
        const double eps = v12 > 0.0 ? std::cbrt(10.0 * v6 / v12) : 1.0;
        return {1.0, 0.0, -eps};
    }
    const double eps = std::cbrt(10.0 * v6 / v0);
    return {-eps, 0.0, 1.0};
}

// The point whose value is 2 v0 v12 + v6 (t^3 - 30 t^2 + 90 t - 20) sqrt(v0 v12).
std::array<double, 3> sextic_threshold_point(double v0, double v12) {
    return {std::pow(v12, 1.0 / 6.0), std::sqrt(kWitnessT) * std::pow(v0 * v12, 1.0 / 12.0),
            -std::pow(v0, 1.0 / 6.0)};
}

std::vector<double> to_vec(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }

void require_odd_dim(int dim) {
    if (dim < 3 || dim % 2 == 0) throw DomainError("truncated families need an odd dimension n >= 3");
}

void require_anchors(double v0, double vmid, double vend) {
    if (v0 < 0.0 || vmid < 0.0 || vend < 0.0) {
        throw PreconditionError(
            "anchor entries must be nonnegative (necessary PSD condition v_{(i-1)m} >= 0)");
    }
}

void add_strong_from_matrix(ClassificationVerdict& out, const HankelTensor& t, const std::string& origin) {
    const auto sv = is_strong_hankel(t);
    out.strong = sv.verdict.is_psd ? Answer::Yes : Answer::No;
    if (!sv.verdict.is_psd && sv.verdict.witness) {
        out.witnesses.push_back(matrix_witness(*sv.verdict.witness, sv.matrix, origin));
    }
}

}  // namespace

std::string to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        default: return "unknown";
    }
}

std::string to_string(Family f) {
    switch (f) {
        case Family::Truncated: return "truncated";
        case Family::QuasiTruncated: return "quasi-truncated";
        default: return "general";
    }
}

double sextic_threshold() { return kThreshold; }

// ---------------------------------------------------------------------------

HankelTensor build_truncated(const TruncatedSpec& spec) {
    require_odd_dim(spec.dim);
    auto gen = GeneratingVector::zeros(spec.order, spec.dim);
    std::vector<double> v = gen.values();
    const int span = gen.span();
    v[0] = spec.v0;
    v[static_cast<std::size_t>(span / 2)] = spec.vmid;
    v[static_cast<std::size_t>(span)] = spec.vend;
    return HankelTensor(GeneratingVector(spec.order, spec.dim, std::move(v)));
}

HankelTensor build_quasi_truncated(const QuasiTruncatedSpec& spec) {
    require_odd_dim(spec.dim);
    auto gen = GeneratingVector::zeros(spec.order, spec.dim);
    const int span = gen.span();
    if (span < 4) throw DomainError("quasi-truncated pattern needs (n-1)m >= 4");
    std::vector<double> v = gen.values();
    v[0] = spec.v0;
    v[1] = spec.v1;
    v[static_cast<std::size_t>(span / 2)] = spec.vmid;
    v[static_cast<std::size_t>(span - 1)] = spec.vend1;
    v[static_cast<std::size_t>(span)] = spec.vend;
    return HankelTensor(GeneratingVector(spec.order, spec.dim, std::move(v)));
}

std::optional<QuasiTruncatedSpec> as_quasi_truncated(const GeneratingVector& gen) {
    if (gen.dim() < 3 || gen.dim() % 2 == 0 || gen.span() < 4) return std::nullopt;
    const int span = gen.span();
    for (int k = 0; k <= span; ++k) {
        if (k == 0 || k == 1 || k == span / 2 || k == span - 1 || k == span) continue;
        if (gen[static_cast<std::size_t>(k)] != 0.0) return std::nullopt;
    }
    return QuasiTruncatedSpec{gen.order(), gen.dim(), gen[0], gen[1],
                              gen[static_cast<std::size_t>(span / 2)],
                              gen[static_cast<std::size_t>(span - 1)], gen[static_cast<std::size_t>(span)]};
}

std::optional<TruncatedSpec> as_truncated(const GeneratingVector& gen) {
    auto q = as_quasi_truncated(gen);
    if (!q || q->v1 != 0.0 || q->vend1 != 0.0) return std::nullopt;
    return TruncatedSpec{q->order, q->dim, q->v0, q->vmid, q->vend};
}

Family detect_family(const GeneratingVector& gen) {
    if (as_truncated(gen)) return Family::Truncated;
    if (as_quasi_truncated(gen)) return Family::QuasiTruncated;
    return Family::General;
}

// ---------------------------------------------------------------------------

ClassificationVerdict truncated_strong_dichotomy(const TruncatedSpec& spec) {
    require_odd_dim(spec.dim);
    require_anchors(spec.v0, spec.vmid, spec.vend);
    const auto t = build_truncated(spec);
    const int span = t.gen().span();
    ClassificationVerdict out;
    if (spec.vmid == 0.0) {
        out.strong = Answer::Yes;
        if (spec.order % 2 == 0) {
            out.psd = Answer::Yes;
            out.sos = Answer::Yes;
        }
        out.criteria.push_back({"middle entry vanishes", true, 0.0, ""});
        return out;
    }
    out.criteria.push_back({"middle entry vanishes", false, -spec.vmid, ""});
    // y = e_2 - e_j with 2 + j = span/2 + 2 avoids both corner indices when j >= 3.
    const int j = span / 2;
    if (j >= 3) {
        const auto a = build_matrix(t.gen());
        Eigen::VectorXd y = Eigen::VectorXd::Zero(a.size());
        y(1) = 1.0;
        y(j - 1) = -1.0;
        out.strong = Answer::No;
        out.witnesses.push_back(matrix_witness(y, a, "off-corner anti-diagonal pair"));
        return out;
    }
    out.notes.push_back("(n-1)m < 6 leaves no off-corner anti-diagonal pair; decided by the eigenvalue test");
    add_strong_from_matrix(out, t, "associated matrix eigenvector");
    return out;
}

TruncatedSosBound truncated_sos_bound(int order) {
    if (order < 6 || order % 2 != 0) throw DomainError("SOS bound needs an even order m >= 6");
    const int m = order;
    const int k = m / 2;
    const auto& table = multinomials();
    TruncatedSosBound b;
    b.order = m;
    for (int p = 1; p <= k; ++p) {
        const double delta = p < k ? static_cast<double>(m) / (2.0 * (m - 2 * p) * (k - 1)) : 1.0;
        const double pair = static_cast<double>(table.binomial(m, p)) *
                            static_cast<double>(table.binomial(m - p, m - 2 * p));
        const double w_mid = static_cast<double>(m - 2 * p) / m;
        // Delta^{2p/m} delta^{(m-2p)/m} = pair
        const double big = std::pow(pair / std::pow(delta, w_mid), static_cast<double>(m) / (2.0 * p));
        b.delta.push_back(delta);
        b.big_delta.push_back(big);
        b.pair_coefficient.push_back(pair);
        b.delta_weight_sum += w_mid * delta;
        b.bound += static_cast<double>(p) / m * big;
    }
    return b;
}

// ---------------------------------------------------------------------------

ClassificationVerdict classify_sextic_truncated(double v0, double v6, double v12, double band) {
    const auto t = sextic_tensor(v0, 0.0, v6, 0.0, v12);
    ClassificationVerdict out;

    const double min_anchor = std::min({v0, v6, v12});
    out.criteria.push_back({"nonnegative anchors", min_anchor >= 0.0, min_anchor, ""});
    if (min_anchor < 0.0) {
        out.psd = out.sos = out.pd = Answer::No;
        const double anchors[3] = {v0, v6, v12};
        for (int i = 0; i < 3; ++i) {
            if (anchors[i] < 0.0) out.witnesses.push_back(form_witness(t, unit(3, i), "psd", "negative anchor"));
        }
        add_strong_from_matrix(out, t, "associated matrix eigenvector");
        return out;
    }

    const auto strong = truncated_strong_dichotomy({6, 3, v0, v6, v12});
    out.strong = strong.strong;
    for (const auto& w : strong.witnesses) out.witnesses.push_back(w);

    if (v6 == 0.0) {
        out.psd = out.sos = Answer::Yes;
        out.pd = Answer::No;
        out.witnesses.push_back(form_witness(t, unit(3, 1), "pd", "f(e2) = v6 = 0"));
        out.criteria.push_back({"sextic threshold", true, std::sqrt(v0 * v12), "v6 = 0"});
        out.certificate = build_sextic_truncated_decomposition(v0, v6, v12);
        return out;
    }

    const double s = std::sqrt(v0 * v12);
    const double thr = kThreshold * v6;
    const double gap = s - thr;
    const double width = band * thr;
    out.criteria.push_back({"sextic threshold", gap >= -width, gap, ""});

    if (gap >= -width) {
        out.psd = out.sos = Answer::Yes;
        out.certificate = build_sextic_truncated_decomposition(v0, v6, v12, band);
        if (gap > width) {
            out.pd = Answer::Yes;
        } else {
            out.boundary = true;
            out.pd = Answer::No;
            out.notes.push_back("within the tolerance band of the threshold; PD is not claimed");
            out.witnesses.push_back(
                form_witness(t, to_vec(sextic_threshold_point(v0, v12)), "pd", "threshold point (value ~ 0)"));
        }
        return out;
    }

    out.psd = out.sos = out.pd = Answer::No;
    const auto x = s > 0.0 ? sextic_threshold_point(v0, v12) : cross_plane_point(v0, v6, v12);
    out.witnesses.push_back(form_witness(t, to_vec(x), "psd", s > 0.0 ? "threshold point" : "x2 = 0 plane"));
    return out;
}

// ---------------------------------------------------------------------------

ClassificationVerdict quasi_midzero_dichotomy(const QuasiTruncatedSpec& spec) {
    require_odd_dim(spec.dim);
    if (spec.order % 2 != 0) {
        throw DomainError("the vanishing-middle criterion for quasi-truncated tensors is stated for even m only");
    }
    require_anchors(spec.v0, spec.vmid, spec.vend);
    const auto t = build_quasi_truncated(spec);
    const int n = spec.dim;
    ClassificationVerdict out;

    if (spec.vmid != 0.0) {
        out.notes.push_back("middle entry is nonzero; PSD is decided by other criteria");
        const int j = t.gen().span() / 2;
        if (j >= 3) {
            const auto a = build_matrix(t.gen());
            Eigen::VectorXd y = Eigen::VectorXd::Zero(a.size());
            y(1) = 1.0;
            y(j - 1) = -1.0;
            out.strong = Answer::No;
            out.witnesses.push_back(matrix_witness(y, a, "off-corner anti-diagonal pair"));
        } else {
            add_strong_from_matrix(out, t, "associated matrix eigenvector");
        }
        return out;
    }

    if (spec.v1 == 0.0 && spec.vend1 == 0.0) {
        out.psd = out.sos = out.strong = Answer::Yes;
        out.criteria.push_back({"off-diagonal ends vanish", true, 0.0, ""});
        return out;
    }
    out.criteria.push_back({"off-diagonal ends vanish", false, -std::max(std::abs(spec.v1), std::abs(spec.vend1)), ""});
    out.psd = out.sos = out.pd = Answer::No;
    if (spec.v1 != 0.0) {
        auto x = unit(n, 0);
        x[1] = spec.v0 == 0.0 ? -spec.v1 : -spec.v0 / spec.v1;
        out.witnesses.push_back(form_witness(t, std::move(x), "psd", spec.v0 == 0.0 ? "f = -m v1^2" : "f = (1-m) v0"));
    }
    if (spec.vend1 != 0.0) {
        auto x = unit(n, n - 1);
        x[static_cast<std::size_t>(n - 2)] = spec.vend == 0.0 ? -spec.vend1 : -spec.vend / spec.vend1;
        out.witnesses.push_back(
            form_witness(t, std::move(x), "psd", spec.vend == 0.0 ? "f = -m vend1^2" : "f = (1-m) vend"));
    }
    add_strong_from_matrix(out, t, "associated matrix eigenvector");
    return out;
}

BinarySexticCheck binary_sextic_check(double v0, double v1, double v6) {
    BinarySexticCheck out;
    if (v0 < 0.0) {
        out.slack = v0;
        out.witness = std::array<double, 2>{1.0, 0.0};
        return out;
    }
    if (v6 < 0.0) {
        out.slack = v6;
        out.witness = std::array<double, 2>{0.0, 1.0};
        return out;
    }
    const double bound = std::pow(v0 / 5.0, 5.0 / 6.0) * std::pow(v6, 1.0 / 6.0);
    out.slack = bound - std::abs(v1);
    out.pass = std::abs(v1) <= bound;
    if (out.pass) return out;
    if (v0 == 0.0 && v6 == 0.0) {
        out.witness = std::array<double, 2>{1.0, -v1};
    } else if (v0 == 0.0) {
        out.witness = std::array<double, 2>{std::pow(v6, 0.2), -signed_root(v1, 5.0)};
    } else if (v6 == 0.0) {
        out.witness = std::array<double, 2>{1.0, -v0 / v1};
    } else {
        out.witness = std::array<double, 2>{std::pow(5.0 * v6, 1.0 / 6.0), -std::copysign(std::pow(v0, 1.0 / 6.0), v1)};
    }
    return out;
}

QuasiNecessaryResult quasi_sextic_necessary(double v0, double v1, double v6, double v11, double v12) {
    const auto t = sextic_tensor(v0, v1, v6, v11, v12);
    QuasiNecessaryResult out;
    auto record = [&](CriterionRecord c, std::optional<std::vector<double>> x, const std::string& origin) {
        out.checks.push_back(c);
        if (!c.satisfied) {
            out.violations.push_back(c);
            if (x) out.witnesses.push_back(form_witness(t, std::move(*x), "psd", origin));
        }
    };

    const double min_anchor = std::min({v0, v6, v12});
    if (min_anchor < 0.0) {
        const double anchors[3] = {v0, v6, v12};
        out.checks.push_back({"nonnegative anchors", false, min_anchor, ""});
        out.violations.push_back(out.checks.back());
        for (int i = 0; i < 3; ++i) {
            if (anchors[i] < 0.0) out.witnesses.push_back(form_witness(t, unit(3, i), "psd", "negative anchor"));
        }
        return out;
    }
    out.checks.push_back({"nonnegative anchors", true, min_anchor, ""});

    const auto left = binary_sextic_check(v0, v1, v6);
    std::optional<std::vector<double>> lx;
    if (left.witness) lx = std::vector<double>{(*left.witness)[0], (*left.witness)[1], 0.0};
    record({"x1-x2 binary face", left.pass, left.slack, ""}, lx, "x3 = 0 face");

    // Same face test with x3 playing the role of x1.
    const auto right = binary_sextic_check(v12, v11, v6);
    std::optional<std::vector<double>> rx;
    if (right.witness) rx = std::vector<double>{0.0, (*right.witness)[1], (*right.witness)[0]};
    record({"x2-x3 binary face", right.pass, right.slack, ""}, rx, "x1 = 0 face");

    const double s = std::sqrt(v0 * v12);
    const bool cross_ok = s >= 10.0 * v6;
    std::optional<std::vector<double>> cx;
    if (!cross_ok) cx = to_vec(cross_plane_point(v0, v6, v12));
    record({"x1-x3 cross face", cross_ok, s - 10.0 * v6, ""}, cx, "x2 = 0 face");

    const double lhs = v1 * std::pow(v12, 5.0 / 6.0);
    const double rhs = v11 * std::pow(v0, 5.0 / 6.0);
    out.balanced = std::abs(lhs - rhs) <= 1e-10 * std::max(std::abs(lhs), std::abs(rhs));
    if (out.balanced) {
        const double gap = s - kThreshold * v6;
        const bool ok = gap >= -kSexticBandTolerance * kThreshold * v6;
        std::optional<std::vector<double>> tx;
        if (!ok) tx = to_vec(s > 0.0 ? sextic_threshold_point(v0, v12) : cross_plane_point(v0, v6, v12));
        record({"balanced sextic threshold", ok, gap, "applies because v1 v12^{5/6} = v11 v0^{5/6}"}, tx,
               "threshold point");
    }
    return out;
}

std::optional<QuasiSufficientResult> quasi_sextic_sufficient(double v0, double v1, double v6, double v11,
                                                              double v12) {
    if (!(v0 > 0.0 && v6 > 0.0 && v12 > 0.0)) {
        throw DomainError("quasi-truncated sufficient condition needs v0, v6, v12 > 0");
    }
    auto score = [&](double t1, double t2) {
        const auto s = quasi_sextic_slack(v0, v1, v6, v11, v12, t1, t2);
        return std::min({s.first_offdiag, s.last_offdiag, s.middle_diagonal, s.agm_product});
    };

    // exponents -6, -5.75, ..., 6
    std::vector<double> grid;
    for (int j = -24; j <= 24; ++j) grid.push_back(std::pow(10.0, j * 0.25));

    double best = -std::numeric_limits<double>::infinity();
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double sc = score(grid[i], grid[j]);
            if (sc >= 0.0) {
                return QuasiSufficientResult{grid[i], grid[j],
                                             build_quasi_sextic_decomposition(v0, v1, v6, v11, v12, grid[i], grid[j])};
            }
            if (sc > best) {
                best = sc;
                bi = i;
                bj = j;
            }
        }
    }

    // One bisection-style refinement per coordinate in log space around the best cell.
    double l1 = std::log10(grid[bi]);
    double l2 = std::log10(grid[bj]);
    auto refine = [&](double& coord, auto&& eval_at) {
        double lo = coord - 0.25;
        double hi = coord + 0.25;
        for (int it = 0; it < 60; ++it) {
            const double a = lo + (hi - lo) / 3.0;
            const double b = hi - (hi - lo) / 3.0;
            if (eval_at(a) < eval_at(b)) lo = a;
            else hi = b;
        }
        coord = 0.5 * (lo + hi);
    };
    refine(l1, [&](double c) { return score(std::pow(10.0, c), std::pow(10.0, l2)); });
    refine(l2, [&](double c) { return score(std::pow(10.0, l1), std::pow(10.0, c)); });
    const double t1 = std::pow(10.0, l1);
    const double t2 = std::pow(10.0, l2);
    if (score(t1, t2) >= 0.0) {
        return QuasiSufficientResult{t1, t2, build_quasi_sextic_decomposition(v0, v1, v6, v11, v12, t1, t2)};
    }
    return std::nullopt;
}

double quasi_sextic_value(double v0, double v1, double v6, double v11, double v12, const std::array<double, 3>& x) {
    const double x1 = x[0];
    const double x2 = x[1];
    const double x3 = x[2];
    return v0 * std::pow(x1, 6) + 6.0 * v1 * std::pow(x1, 5) * x2 +
           v6 * (std::pow(x2, 6) + 30.0 * x1 * std::pow(x2, 4) * x3 + 90.0 * x1 * x1 * x2 * x2 * x3 * x3 +
                 20.0 * std::pow(x1, 3) * std::pow(x3, 3)) +
           6.0 * v11 * x2 * std::pow(x3, 5) + v12 * std::pow(x3, 6);
}

std::vector<std::vector<double>> structured_witnesses(const HankelTensor& t) {
    std::vector<std::vector<double>> out;
    const int n = t.dim();
    for (int i = 0; i < n; ++i) out.push_back(unit(n, i));

    const auto q = as_quasi_truncated(t.gen());
    if (!q) return out;

    if (q->order % 2 == 0 && q->vmid == 0.0) {
        if (q->v1 != 0.0) {
            auto x = unit(n, 0);
            x[1] = q->v0 == 0.0 ? -q->v1 : -q->v0 / q->v1;
            out.push_back(std::move(x));
        }
        if (q->vend1 != 0.0) {
            auto x = unit(n, n - 1);
            x[static_cast<std::size_t>(n - 2)] = q->vend == 0.0 ? -q->vend1 : -q->vend / q->vend1;
            out.push_back(std::move(x));
        }
    }

    if (q->order == 6 && n == 3 && q->v0 >= 0.0 && q->vmid >= 0.0 && q->vend >= 0.0) {
        const double v0 = q->v0, v1 = q->v1, v6 = q->vmid, v11 = q->vend1, v12 = q->vend;
        if (v0 > 0.0 && v12 > 0.0) out.push_back(to_vec(sextic_threshold_point(v0, v12)));
        if (v6 > 0.0) out.push_back(to_vec(cross_plane_point(v0, v6, v12)));
        if (auto w = binary_sextic_check(v0, v1, v6).witness) out.push_back({(*w)[0], (*w)[1], 0.0});
        if (auto w = binary_sextic_check(v12, v11, v6).witness) out.push_back({0.0, (*w)[1], (*w)[0]});
    }
    return out;
}

}  // namespace hankelkit
