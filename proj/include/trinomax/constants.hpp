#pragma once

// Norms of unimodular relative Fourier multipliers on C_Λ for a three-point Λ
// and the constants that follow from them.  With D = diameter / d and τ the
// phase invariant of the multiplier,
//
//   ||M|| = cos((π - τ)/2D) / cos(π/2D),   Sidon constant = sec(π/2D).

#include <array>
#include <complex>
#include <vector>

#include "trinomax/spectrum.hpp"

namespace trinomax {

/// A trinomial attaining a constant: moduli proportional to
/// (|λc-λb|, |λc-λa|, |λb-λa|) on the sorted spectrum, normalised to sum 1,
/// with phase combination -l ua + (k+l) ub - k uc ≡ π.  Arrays are in the
/// caller's frequency order.
struct Witness {
    Spectrum freq{};
    std::array<double, 3> modulus{};
    std::array<double, 3> phase{};
    double value = 0.0;  ///< max modulus of the witness, cos(π/2D)

    Trinomial trinomial() const;
};

struct MultiplierNorm {
    double norm = 1.0;
    double tau = 0.0;
    Witness witness;
    double imageValue = 0.0;  ///< max modulus of M applied to the witness
};

/// μ = atom0 δ_0 + atom1 δ_{point1} with μ̂(-k) = μ̂(l) = 1 and μ̂(0) = e^{it}.
struct MeasureLift {
    std::complex<double> atom0;
    std::complex<double> atom1;
    double point1 = 0.0;  ///< 2mπ/(k+l)

    double total_variation() const { return std::abs(atom0) + std::abs(atom1); }
};

struct SignPattern {
    std::array<int, 3> signs{1, 1, 1};  ///< coefficient multipliers ±1, caller order
    double norm = 1.0;
    bool isometric = true;
};

struct UnconditionalConstants {
    double realConstant = 1.0;
    double complexConstant = 1.0;
    std::vector<SignPattern> patterns;  ///< all eight, in binary order of (b1, b2, b3)
    std::array<int, 3> witnessSigns{1, 1, 1};
};

struct GeometricProgressionBounds {
    double lower1 = 0.0;  ///< 1 + π²/8(q+1)²
    double lower2 = 0.0;  ///< sec(π/2(q+1)), the Sidon constant of {1, q, q²}
    double upper = 0.0;   ///< 1 + π²/(2q² - 2 - π²)
};

Witness sidon_witness(const Spectrum& freq);

MultiplierNorm multiplier_norm(const Spectrum& freq, const Multiplier& M,
                              double tauPiTolerance = kDefaultTauPiTolerance);

/// sec(π/2D); the witness has max modulus cos(π/2D) and coefficient sum 1.
double sidon_constant(const Spectrum& freq, Witness* witness = nullptr);

/// gcd(k, l) = 1, t ∈ [0, π/(k+l)].
MeasureLift lift_to_measure(Frequency k, Frequency l, double t);

UnconditionalConstants unconditional_constants(const Spectrum& freq);

/// q >= 3.
GeometricProgressionBounds geometric_progression_bounds(Frequency q);

}  // namespace trinomax
