#include <cmath>
#include <limits>
#include <random>

#include "hankelkit/certificates.hpp"
#include "hankelkit/errors.hpp"

namespace hankelkit {

namespace {

double norm(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

bool normalize(std::vector<double>& x) {
    const double n = norm(x);
    if (!(n > 0.0) || !std::isfinite(n)) return false;
    for (double& v : x) v /= n;
    return true;
}

std::vector<double> random_unit(std::uint64_t seed, int start, int dim) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(start)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(dim));
    do {
        for (double& v : x) v = gauss(rng);
    } while (!normalize(x));
    return x;
}

}  // namespace

std::vector<double> sphere_descent(const HankelTensor& t, std::vector<double> x, int iterations) {
    if (!normalize(x)) throw DomainError("descent start must be a nonzero vector");
    const double scale = std::max(t.gen().max_abs(), std::numeric_limits<double>::min());
    double fx = eval(t, x);
    double step = 1.0 / scale;
    std::vector<double> trial(x.size());
    for (int it = 0; it < iterations; ++it) {
        const auto g = gradient(t, x);
        double gx = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) gx += g[i] * x[i];
        std::vector<double> r(x.size());
        double r2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            r[i] = g[i] - gx * x[i];
            r2 += r[i] * r[i];
        }
        if (std::sqrt(r2) <= 1e-13 * scale) break;

        // Armijo backtracking on the retraction x -> normalize(x - step r).
        step *= 2.0;
        bool accepted = false;
        for (int k = 0; k < 60; ++k) {
            for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - step * r[i];
            if (normalize(trial)) {
                const double ft = eval(t, trial);
                if (ft <= fx - 1e-4 * step * r2) {
                    x = trial;
                    fx = ft;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!accepted) break;
    }
    return x;
}

RefutationResult refute_psd(const HankelTensor& t, const RefuteOptions& options,
                            std::span<const std::vector<double>> probes) {
    if (t.order() % 2 != 0) throw DomainError("PSD refutation needs an even order");
    RefutationResult best;
    best.seed = options.seed;
    // Values above this floor are rounding noise, not evidence.
    best.value = -1e-12 * t.gen().max_abs();

    auto offer = [&](std::vector<double> x, const char* source) {
        const double v = eval(t, x);
        // Strict comparison keeps the earliest candidate on ties.
        if (v < best.value) {
            best.found = true;
            best.value = v;
            best.x = std::move(x);
            best.source = source;
        }
    };

    for (const auto& p : probes) {
        if (static_cast<int>(p.size()) != t.dim()) continue;
        std::vector<double> x = p;
        if (normalize(x)) offer(std::move(x), "probe");
    }
    for (int s = 0; s < options.starts; ++s) {
        auto x = sphere_descent(t, random_unit(options.seed, s, t.dim()), options.iterations);
        offer(std::move(x), "sphere-descent");
        best.starts_used = s + 1;
    }
    if (best.found) best.value = eval(t, best.x);
    else best.value = 0.0;
    return best;
}

}  // namespace hankelkit
