#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hankelkit/classes.hpp"
#include "hankelkit/errors.hpp"
#include "support.hpp"

using namespace hankelkit;

namespace {

std::vector<double> sextic_vector(double v0, double v1, double v6, double v11, double v12) {
    std::vector<double> v(13, 0.0);
    v[0] = v0;
    v[1] = v1;
    v[6] = v6;
    v[11] = v11;
    v[12] = v12;
    return v;
}

double binomial(int n, int k) { return std::round(std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0))); }

void check_witnesses(const HankelTensor& t, const ClassificationVerdict& v) {
    for (const auto& w : v.witnesses) {
        if (w.kind != Witness::Kind::Form) continue;
        const double f = eval(t, w.point);
        REQUIRE(f == doctest::Approx(w.value).epsilon(1e-9).scale(1.0));
        if (w.refutes == "psd") REQUIRE(f < 0.0);
    }
}

}  // namespace

TEST_CASE("truncated builders validate their shape") {
    CHECK_THROWS_AS(build_truncated({6, 2, 1.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(build_truncated({6, 4, 1.0, 1.0, 1.0}), DomainError);
    const auto t = build_truncated({4, 3, 2.0, 3.0, 5.0});
    CHECK(t.gen().values() == std::vector<double>{2, 0, 0, 0, 3, 0, 0, 0, 5});
    const auto q = build_quasi_truncated({4, 3, 2.0, 1.0, 3.0, -1.0, 5.0});
    CHECK(q.gen().values() == std::vector<double>{2, 1, 0, 0, 3, 0, 0, -1, 5});
}

TEST_CASE("family detection reads the support pattern") {
    CHECK(detect_family(build_truncated({6, 3, 1.0, 2.0, 3.0}).gen()) == Family::Truncated);
    CHECK(detect_family(build_quasi_truncated({6, 3, 1.0, 0.5, 2.0, 0.5, 3.0}).gen()) == Family::QuasiTruncated);
    CHECK(detect_family(GeneratingVector(2, 2, {1.0, 0.5, 1.0 / 3.0})) == Family::General);
    const auto spec = as_truncated(build_truncated({6, 5, 1.0, 2.0, 3.0}).gen());
    REQUIRE(spec.has_value());
    CHECK(spec->order == 6);
    CHECK(spec->dim == 5);
    CHECK(spec->vmid == 2.0);
    CHECK(spec->vend == 3.0);
    const auto q = as_quasi_truncated(build_quasi_truncated({4, 3, 2.0, 1.0, 3.0, -1.0, 5.0}).gen());
    REQUIRE(q.has_value());
    CHECK(q->v1 == 1.0);
    CHECK(q->vend1 == -1.0);
    CHECK(to_string(Family::QuasiTruncated) != to_string(Family::Truncated));
}

TEST_CASE("truncated expansion matches tuple counting") {
    const auto t = build_truncated({4, 3, 1.0, 1.0, 1.0});
    const auto ref = testing::brute_force_coefficients(t.gen().values(), 4, 3);
    const auto f = expand(t);
    REQUIRE(f.size() == ref.size());
    for (const auto& [e, c] : ref) CHECK(f.coefficient(e) == doctest::Approx(c));
}

TEST_CASE("truncated strong dichotomy") {
    const auto no = truncated_strong_dichotomy({6, 3, 1.0, 1.0, 1.0});
    CHECK(no.strong == Answer::No);
    REQUIRE(no.witnesses.size() == 1);
    CHECK(no.witnesses[0].kind == Witness::Kind::Matrix);
    CHECK(no.witnesses[0].value == doctest::Approx(-2.0));

    const auto wide = truncated_strong_dichotomy({6, 5, 1.0, 3.0, 1.0});
    REQUIRE(wide.witnesses.size() == 1);
    CHECK(wide.witnesses[0].value == doctest::Approx(-6.0));

    const auto yes = truncated_strong_dichotomy({6, 3, 1.0, 0.0, 1.0});
    CHECK(yes.strong == Answer::Yes);
    CHECK(yes.psd == Answer::Yes);
    CHECK(yes.sos == Answer::Yes);

    const auto odd = truncated_strong_dichotomy({3, 3, 1.0, 0.0, 1.0});
    CHECK(odd.strong == Answer::Yes);
    CHECK(odd.psd == Answer::Unknown);

    CHECK_THROWS_AS(truncated_strong_dichotomy({6, 3, -1.0, 0.0, 1.0}), PreconditionError);

    // Small spans fall back to the eigenvalue test.
    const auto small = truncated_strong_dichotomy({2, 3, 1.0, 1.0, 1.0});
    CHECK(small.strong != Answer::Unknown);
    CHECK_FALSE(small.notes.empty());
}

TEST_CASE("truncated SOS bound constants") {
    CHECK_THROWS_AS(truncated_sos_bound(4), DomainError);
    CHECK_THROWS_AS(truncated_sos_bound(7), DomainError);
    for (int m : {6, 8, 10, 12}) {
        const auto b = truncated_sos_bound(m);
        const int k = m / 2;
        REQUIRE(static_cast<int>(b.delta.size()) == k);
        double weighted = 0.0;
        double bound = 0.0;
        for (int p = 1; p <= k; ++p) {
            const double delta = p < k ? m / (2.0 * (m - 2 * p) * (k - 1)) : 1.0;
            const double pair = binomial(m, p) * binomial(m - p, m - 2 * p);
            CHECK(b.delta[static_cast<std::size_t>(p - 1)] == doctest::Approx(delta));
            CHECK(b.pair_coefficient[static_cast<std::size_t>(p - 1)] == doctest::Approx(pair));
            const double big = b.big_delta[static_cast<std::size_t>(p - 1)];
            CHECK(std::pow(big, 2.0 * p / m) * std::pow(delta, (m - 2.0 * p) / m) == doctest::Approx(pair).epsilon(1e-10));
            weighted += (m - 2.0 * p) / m * delta;
            bound += static_cast<double>(p) / m * big;
        }
        CHECK(b.delta_weight_sum == doctest::Approx(0.5));
        CHECK(weighted == doctest::Approx(0.5));
        CHECK(b.bound == doctest::Approx(bound).epsilon(1e-12));
    }
    CHECK(truncated_sos_bound(6).bound == doctest::Approx(32338.6).epsilon(1e-5));
}

TEST_CASE("sextic classification at and around the threshold") {
    const double c = sextic_threshold();
    CHECK(c == doctest::Approx(560.0 + 70.0 * std::sqrt(70.0)).epsilon(1e-15));

    const auto zero_mid = classify_sextic_truncated(1.0, 0.0, 1.0);
    CHECK(zero_mid.psd == Answer::Yes);
    CHECK(zero_mid.sos == Answer::Yes);
    CHECK(zero_mid.strong == Answer::Yes);
    CHECK(zero_mid.pd == Answer::No);

    const auto at = classify_sextic_truncated(c, 1.0, c);
    CHECK(at.psd == Answer::Yes);
    CHECK(at.sos == Answer::Yes);
    CHECK(at.pd == Answer::No);
    CHECK(at.boundary);
    CHECK(at.certificate.has_value());

    const auto above = classify_sextic_truncated(2000.0, 1.0, 2000.0);
    CHECK(above.pd == Answer::Yes);
    CHECK_FALSE(above.boundary);
    CHECK(above.strong == Answer::No);

    const auto below = classify_sextic_truncated(1.0, 1.0, 1.0);
    CHECK(below.psd == Answer::No);
    CHECK(below.sos == Answer::No);
    const auto t = build_truncated({6, 3, 1.0, 1.0, 1.0});
    check_witnesses(t, below);
    bool found = false;
    for (const auto& w : below.witnesses) {
        if (w.refutes == "psd") {
            found = true;
            CHECK(w.value == doctest::Approx(2.0 - (1120.0 + 140.0 * std::sqrt(70.0))).epsilon(1e-9));
        }
    }
    CHECK(found);

    const auto neg = classify_sextic_truncated(1.0, 1.0, -1.0);
    CHECK(neg.psd == Answer::No);
    check_witnesses(build_truncated({6, 3, 1.0, 1.0, -1.0}), neg);
}

TEST_CASE("the threshold flips the verdict for unbalanced corners") {
    auto gen = testing::rng(5);
    std::uniform_real_distribution<double> log_ratio(-3.0, 3.0);
    std::uniform_real_distribution<double> mid(0.1, 10.0);
    const double c = sextic_threshold();
    for (int trial = 0; trial < 200; ++trial) {
        const double r = std::pow(10.0, log_ratio(gen));
        const double v6 = mid(gen);
        const double s = c * v6 * (trial % 2 == 0 ? 1.001 : 0.999);
        const double v0 = s * r;
        const double v12 = s / r;
        const auto v = classify_sextic_truncated(v0, v6, v12);
        REQUIRE(v.psd == (trial % 2 == 0 ? Answer::Yes : Answer::No));
        check_witnesses(build_truncated({6, 3, v0, v6, v12}), v);
    }
}

TEST_CASE("PSD sextics are nonnegative on 10^4 sphere points") {
    auto gen = testing::rng(17);
    const double c = sextic_threshold();
    const double cases[][3] = {{c, 1.0, c}, {2000.0, 1.0, 2000.0}, {1.0, 0.0, 3.0}, {4.0 * c, 1.0, c / 4.0}, {1e4, 2.0, 1e4}};
    for (const auto& k : cases) {
        const auto v = classify_sextic_truncated(k[0], k[1], k[2]);
        REQUIRE(v.psd == Answer::Yes);
        const auto t = build_truncated({6, 3, k[0], k[1], k[2]});
        const double scale = std::max(1.0, expand(t).max_abs_coefficient());
        for (int i = 0; i < 2000; ++i) {
            REQUIRE(eval(t, testing::sphere_point(gen, 3)) >= -1e-9 * scale);
        }
    }
}

TEST_CASE("sextic verdicts are symmetric under exchanging the corners") {
    auto gen = testing::rng(31);
    std::uniform_real_distribution<double> u(0.0, 3000.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double v0 = u(gen);
        const double v12 = u(gen);
        const double v6 = u(gen) / 1000.0;
        const auto a = classify_sextic_truncated(v0, v6, v12);
        const auto b = classify_sextic_truncated(v12, v6, v0);
        REQUIRE(a.psd == b.psd);
        REQUIRE(a.pd == b.pd);
        REQUIRE(a.strong == b.strong);
    }
}

TEST_CASE("quasi-truncated tensors with a vanishing middle entry") {
    const auto zero_v0 = quasi_midzero_dichotomy({6, 3, 0.0, 2.0, 0.0, 0.0, 1.0});
    CHECK(zero_v0.psd == Answer::No);
    REQUIRE_FALSE(zero_v0.witnesses.empty());
    CHECK(zero_v0.witnesses[0].value == doctest::Approx(-24.0));

    const auto pos_v0 = quasi_midzero_dichotomy({6, 3, 3.0, 2.0, 0.0, 0.0, 1.0});
    REQUIRE_FALSE(pos_v0.witnesses.empty());
    CHECK(pos_v0.witnesses[0].value == doctest::Approx(-15.0));

    const auto ok = quasi_midzero_dichotomy({6, 3, 3.0, 0.0, 0.0, 0.0, 1.0});
    CHECK(ok.psd == Answer::Yes);
    CHECK(ok.strong == Answer::Yes);

    const auto mid = quasi_midzero_dichotomy({6, 3, 3.0, 1.0, 2.0, 0.0, 1.0});
    CHECK(mid.psd == Answer::Unknown);
    CHECK_FALSE(mid.notes.empty());

    CHECK_THROWS_AS(quasi_midzero_dichotomy({5, 3, 1.0, 1.0, 0.0, 0.0, 1.0}), DomainError);

    auto gen = testing::rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto r = testing::uniform_vector(gen, 4);
        const QuasiTruncatedSpec spec{4 + 2 * (trial % 3), 3 + 2 * (trial % 2), std::abs(r[0]), r[1], 0.0, r[2], std::abs(r[3])};
        const auto v = quasi_midzero_dichotomy(spec);
        REQUIRE(v.psd == Answer::No);
        check_witnesses(build_quasi_truncated(spec), v);
    }
}

TEST_CASE("binary sextic check") {
    CHECK(binary_sextic_check(5.0, 1.0, 1.0).pass);
    const auto fail = binary_sextic_check(5.0, 1.01, 1.0);
    CHECK_FALSE(fail.pass);
    REQUIRE(fail.witness.has_value());
    const auto [a, b] = *fail.witness;
    CHECK(5.0 * std::pow(a, 6) + 6.0 * 1.01 * std::pow(a, 5) * b + std::pow(b, 6) < 0.0);
    CHECK(binary_sextic_check(0.0, 0.0, 2.0).pass);
    CHECK_FALSE(binary_sextic_check(0.0, 0.1, 2.0).pass);
}

TEST_CASE("binary sextic check agrees with circle sampling on a 21^3 grid") {
    int agree = 0;
    int ambiguous = 0;
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            for (int k = 0; k <= 20; ++k) {
                const double v0 = 0.2 * i;
                const double v1 = -2.0 + 0.2 * j;
                const double v6 = 0.2 * k;
                const double slack = std::pow(v0 / 5.0, 5.0 / 6.0) * std::pow(v6, 1.0 / 6.0) - std::abs(v1);
                if (std::abs(slack) < 1e-3) {
                    ++ambiguous;
                    continue;
                }
                const double lo = testing::sampled_circle_min(
                    [&](double c, double s) { return v0 * std::pow(c, 6) + 6 * v1 * std::pow(c, 5) * s + v6 * std::pow(s, 6); },
                    4096);
                const bool sampled = lo >= -1e-12;
                if (binary_sextic_check(v0, v1, v6).pass == sampled) ++agree;
            }
        }
    }
    CHECK(agree + ambiguous == 9261);
    CHECK(ambiguous < 100);
}

TEST_CASE("quasi-truncated sextic necessary conditions") {
    const auto clean = quasi_sextic_necessary(2000.0, 0.0, 1.0, 0.0, 2000.0);
    CHECK(clean.violations.empty());

    const auto bad = quasi_sextic_necessary(5.0, 1.0, 1.0, 1.0, 5.0);
    CHECK_FALSE(bad.violations.empty());
    CHECK_FALSE(bad.witnesses.empty());
    for (const auto& w : bad.witnesses) {
        const std::array<double, 3> x{w.point[0], w.point[1], w.point[2]};
        CHECK(quasi_sextic_value(5.0, 1.0, 1.0, 1.0, 5.0, x) < 0.0);
    }

    const auto balanced = quasi_sextic_necessary(500.0, 1.0, 1.0, 1.0, 500.0);
    CHECK(balanced.balanced);
    bool threshold_failed = false;
    for (const auto& v : balanced.violations) threshold_failed |= v.name == "balanced sextic threshold";
    CHECK(threshold_failed);

    const auto neg = quasi_sextic_necessary(-1.0, 0.0, 1.0, 0.0, 1.0);
    CHECK_FALSE(neg.violations.empty());
}

TEST_CASE("quasi-truncated sextic sufficient condition") {
    CHECK_THROWS_AS(quasi_sextic_sufficient(0.0, 0.0, 1.0, 0.0, 1.0), DomainError);
    CHECK_FALSE(quasi_sextic_sufficient(1.0, 0.0, 1.0, 0.0, 1.0).has_value());

    const auto ok = quasi_sextic_sufficient(2000.0, 1e-6, 1.0, 1e-6, 2000.0);
    REQUIRE(ok.has_value());
    CHECK(ok->t1 > 0.0);
    CHECK(ok->t2 > 0.0);
    const auto t = HankelTensor(GeneratingVector(6, 3, sextic_vector(2000.0, 1e-6, 1.0, 1e-6, 2000.0)));
    CHECK(verify_decomposition(t, ok->decomposition).pass);
}

TEST_CASE("quasi sextic value matches the tensor form") {
    auto gen = testing::rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto v = testing::uniform_vector(gen, 5);
        const auto x = testing::uniform_vector(gen, 3);
        const HankelTensor t(GeneratingVector(6, 3, sextic_vector(v[0], v[1], v[2], v[3], v[4])));
        REQUIRE(quasi_sextic_value(v[0], v[1], v[2], v[3], v[4], {x[0], x[1], x[2]}) ==
                doctest::Approx(eval(t, x)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("structured witnesses refute sub-threshold sextics") {
    const auto t = build_truncated({6, 3, 1.0, 1.0, 1.0});
    const auto pts = structured_witnesses(t);
    REQUIRE_FALSE(pts.empty());
    double best = INFINITY;
    for (const auto& p : pts) best = std::min(best, eval(t, p));
    CHECK(best < 0.0);
}
