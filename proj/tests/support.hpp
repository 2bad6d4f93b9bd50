#pragma once

// Shared generators and reference computations for the test binaries.  The
// references here use nothing from the library except the Trinomial struct.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "trinomax/spectrum.hpp"

namespace support {

using trinomax::Frequency;
using trinomax::kPi;
using trinomax::kTwoPi;
using trinomax::Trinomial;

inline std::complex<double> direct_sum(const Trinomial& T, double x) {
    std::complex<double> s{0.0, 0.0};
    for (int j = 0; j < 3; ++j)
        s += T.modulus[j] * std::exp(std::complex<double>(0.0, T.phase[j] + double(T.freq[j]) * x));
    return s;
}

inline Frequency gcd(Frequency a, Frequency b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        const Frequency r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Sorted indices (lowest, middle, highest frequency).
inline std::array<int, 3> sorted_indices(const Trinomial& T) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return T.freq[i] < T.freq[j]; });
    return idx;
}

inline double period_of(const Trinomial& T) {
    return kTwoPi / double(gcd(T.freq[1] - T.freq[0], T.freq[2] - T.freq[1]));
}

/// max |T| by dense sampling plus golden section around the best sample.
struct DenseMax {
    double value = 0.0;
    double x = 0.0;
};

inline DenseMax dense_max(const Trinomial& T, int samples = 200000) {
    const double P = period_of(T);
    const double h = P / samples;
    DenseMax best;
    for (int i = 0; i < samples; ++i) {
        const double v = std::abs(direct_sum(T, h * i));
        if (v > best.value) best = {v, h * i};
    }
    double a = best.x - h, b = best.x + h;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 100; ++it) {
        const double c = b - g * (b - a), d = a + g * (b - a);
        if (std::abs(direct_sum(T, c)) >= std::abs(direct_sum(T, d)))
            b = d;
        else
            a = c;
    }
    const double x = 0.5 * (a + b);
    const double v = std::abs(direct_sum(T, x));
    if (v > best.value) best = {v, x};
    return best;
}

inline double circular_distance(double x, double y, double period) {
    double d = std::fmod(x - y, period);
    if (d < 0) d += period;
    return std::min(d, period - d);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Frequency uniform_int(std::mt19937_64& rng, Frequency lo, Frequency hi) {
    return std::uniform_int_distribution<Frequency>(lo, hi)(rng);
}

inline std::array<Frequency, 3> random_spectrum(std::mt19937_64& rng, Frequency bound = 12) {
    std::array<Frequency, 3> f{};
    do {
        for (auto& x : f) x = uniform_int(rng, -bound, bound);
    } while (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]);
    return f;
}

inline Trinomial random_trinomial(std::mt19937_64& rng, Frequency bound = 12) {
    Trinomial T;
    T.freq = random_spectrum(rng, bound);
    for (auto& r : T.modulus) r = log_uniform(rng, 1e-2, 1e2);
    for (auto& t : T.phase) t = uniform(rng, -kPi, kPi);
    return T;
}

/// Integer weights (wa, wb, wc) on the sorted phases with
/// θ = wa ta + wb tb + wc tc, i.e. (-l, k+l, -k).
inline std::array<Frequency, 3> theta_weights(const Trinomial& T) {
    const auto s = sorted_indices(T);
    const Frequency d = gcd(T.freq[s[1]] - T.freq[s[0]], T.freq[s[2]] - T.freq[s[1]]);
    const Frequency k = (T.freq[s[1]] - T.freq[s[0]]) / d;
    const Frequency l = (T.freq[s[2]] - T.freq[s[1]]) / d;
    return {-l, k + l, -k};
}

/// Rewrites the middle phase so that θ = π exactly in real arithmetic.
inline void make_symmetric(Trinomial& T) {
    const auto s = sorted_indices(T);
    const auto w = theta_weights(T);
    T.phase[s[1]] = (kPi - double(w[0]) * T.phase[s[0]] - double(w[2]) * T.phase[s[2]]) / double(w[1]);
}

/// Distance of θ to 2πZ computed from scratch.
inline double reference_tau(const Trinomial& T) {
    const auto s = sorted_indices(T);
    const auto w = theta_weights(T);
    long double theta = 0.0L;
    for (int j = 0; j < 3; ++j) theta += (long double)w[j] * (long double)T.phase[s[j]];
    long double r = std::fmod(theta, 2.0L * (long double)kPi);
    if (r < 0) r += 2.0L * (long double)kPi;
    return double(std::min(r, 2.0L * (long double)kPi - r));
}

}  // namespace support
