#include "trinomax/constants.hpp"

#include <algorithm>
#include <cmath>

#include "trinomax/error.hpp"
#include "trinomax/maxmod.hpp"

namespace trinomax {

namespace {

double norm_from_tau(double tau, Frequency D) {
    const double twoD = 2.0 * static_cast<double>(D);
    return std::cos((kPi - tau) / twoD) / std::cos(kPi / twoD);
}

}  // namespace

Trinomial Witness::trinomial() const {
    Trinomial T;
    T.freq = freq;
    T.modulus = modulus;
    T.phase = phase;
    return T;
}

Witness sidon_witness(const Spectrum& freq) {
    const SpectrumStats s = derive_spectrum_stats(freq, {0.0, 0.0, 0.0});
    const double D = static_cast<double>(s.D);
    Witness w;
    w.freq = freq;
    w.modulus[s.order[0]] = static_cast<double>(s.l) / (2.0 * D);
    w.modulus[s.order[1]] = 0.5;
    w.modulus[s.order[2]] = static_cast<double>(s.k) / (2.0 * D);
    // -l·0 + D·(π/D) - k·0 = π.
    w.phase[s.order[1]] = kPi / D;
    w.value = max_points_global(w.trinomial()).result.value();
    return w;
}

MultiplierNorm multiplier_norm(const Spectrum& freq, const Multiplier& M, double tauPiTolerance) {
    for (double u : M.phase)
        if (!std::isfinite(u)) throw InvalidInput("multiplier phases must be finite");
    const SpectrumStats s = derive_spectrum_stats(freq, M.phase, tauPiTolerance);
    MultiplierNorm out;
    out.tau = s.tau;
    out.norm = norm_from_tau(s.tau, s.D);
    out.witness = sidon_witness(freq);
    Trinomial image = out.witness.trinomial();
    for (int j = 0; j < 3; ++j) image.phase[j] += M.phase[j];
    out.imageValue = max_points_global(image).result.value();
    return out;
}

double sidon_constant(const Spectrum& freq, Witness* witness) {
    const SpectrumStats s = derive_spectrum_stats(freq, {0.0, 0.0, 0.0});
    if (witness) *witness = sidon_witness(freq);
    return 1.0 / std::cos(kPi / (2.0 * static_cast<double>(s.D)));
}

MeasureLift lift_to_measure(Frequency k, Frequency l, double t) {
    if (k < 1 || l < 1 || gcd(k, l) != 1) throw InvalidInput("k and l must be positive and coprime");
    const double D = static_cast<double>(k + l);
    if (!(t >= 0.0) || t > (kPi / D) * (1.0 + 1e-15))
        throw InvalidInput("t must lie in [0, pi/(k+l)]");
    const double s = std::sin(kPi / D);
    MeasureLift mu;
    mu.atom0 = std::polar(std::sin(kPi / D - t / 2.0) / s, t / 2.0);
    mu.atom1 = std::polar(std::sin(t / 2.0) / s, t / 2.0 + kPi / D);
    mu.point1 = kTwoPi * static_cast<double>(modular_inverse(l, k + l)) / D;
    return mu;
}

UnconditionalConstants unconditional_constants(const Spectrum& freq) {
    validate_spectrum(freq);
    UnconditionalConstants out;
    out.complexConstant = sidon_constant(freq);
    out.realConstant = 0.0;
    for (int bits = 0; bits < 8; ++bits) {
        SignPattern p;
        Multiplier M;
        for (int j = 0; j < 3; ++j) {
            const bool flip = (bits >> (2 - j)) & 1;
            p.signs[j] = flip ? -1 : 1;
            M.phase[j] = flip ? kPi : 0.0;
        }
        p.norm = multiplier_norm(freq, M).norm;
        p.isometric = is_isometry(freq, M).has_value();
        out.realConstant = std::max(out.realConstant, p.norm);
        out.patterns.push_back(p);
    }
    out.witnessSigns = opposition_signs(freq);
    return out;
}

GeometricProgressionBounds geometric_progression_bounds(Frequency q) {
    if (q < 3) throw InvalidInput("q must be at least 3");
    const double qd = static_cast<double>(q);
    GeometricProgressionBounds b;
    b.lower1 = 1.0 + kPi * kPi / (8.0 * (qd + 1.0) * (qd + 1.0));
    b.lower2 = 1.0 / std::cos(kPi / (2.0 * (qd + 1.0)));
    b.upper = 1.0 + kPi * kPi / (2.0 * qd * qd - 2.0 - kPi * kPi);
    return b;
}

}  // namespace trinomax
