#pragma once

// Shared helpers for the unit tests: seeded generators and reference
// computations written independently of the library code paths.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hankelkit/symtensor.hpp"

namespace testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::vector<double> uniform_vector(std::mt19937_64& gen, std::size_t len, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> out(len);
    for (auto& x : out) x = u(gen);
    return out;
}

inline std::vector<double> sphere_point(std::mt19937_64& gen, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(n));
    double norm = 0.0;
    do {
        norm = 0.0;
        for (auto& xi : x) {
            xi = g(gen);
            norm += xi * xi;
        }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    for (auto& xi : x) xi /= norm;
    return x;
}

inline hankelkit::HankelTensor random_tensor(std::mt19937_64& gen, int m, int n) {
    return hankelkit::HankelTensor(
        hankelkit::GeneratingVector(m, n, uniform_vector(gen, static_cast<std::size_t>((n - 1) * m + 1))));
}

/// Visits every index tuple in [0, n)^m with an odometer; f(tuple, index_sum).
template <class F>
void for_each_tuple(int m, int n, F&& f) {
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    while (true) {
        int sum = 0;
        for (int i : idx) sum += i;
        f(idx, sum);
        int pos = m - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == n) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return;
    }
}

/// f(x) = sum over all tuples of v_{sum} * prod x_{i_j}, in long double.
inline long double brute_force_eval(const std::vector<double>& v, int m, int n, const std::vector<double>& x) {
    long double total = 0.0L;
    for_each_tuple(m, n, [&](const std::vector<int>& idx, int sum) {
        long double term = v[static_cast<std::size_t>(sum)];
        for (int i : idx) term *= x[static_cast<std::size_t>(i)];
        total += term;
    });
    return total;
}

/// Monomial coefficients obtained by counting tuples with each exponent.
inline std::map<hankelkit::Exponent, double> brute_force_coefficients(const std::vector<double>& v, int m, int n) {
    std::map<hankelkit::Exponent, double> out;
    for_each_tuple(m, n, [&](const std::vector<int>& idx, int sum) {
        hankelkit::Exponent e(static_cast<std::size_t>(n), 0);
        for (int i : idx) ++e[static_cast<std::size_t>(i)];
        out[e] += v[static_cast<std::size_t>(sum)];
    });
    std::erase_if(out, [](const auto& kv) { return kv.second == 0.0; });
    return out;
}

/// Minimum of a binary form over many equally spaced directions on the half circle.
template <class F>
double sampled_circle_min(F&& f, int samples) {
    double best = INFINITY;
    for (int i = 0; i < samples; ++i) {
        const double a = M_PI * (i + 0.5) / samples;
        best = std::min(best, f(std::cos(a), std::sin(a)));
    }
    return best;
}

}  // namespace testing
