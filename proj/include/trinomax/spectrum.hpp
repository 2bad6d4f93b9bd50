#pragma once

// Exact integer and angle arithmetic for trigonometric trinomials
//
//   T(x) = r1 e^{i(t1 + λ1 x)} + r2 e^{i(t2 + λ2 x)} + r3 e^{i(t3 + λ3 x)}
//
// With the frequencies sorted so that λa < λb < λc, write
//   d = gcd(λb - λa, λc - λb),  k = (λb - λa)/d,  l = (λc - λb)/d,  D = k + l,
// and let θ = -l ta + (k+l) tb - k tc.  The phase invariant τ is the distance
// of θ to 2πZ.  Up to rotation, translation, conjugation, homothety by d and
// the swap (k, r1) <-> (l, r3), every trinomial has the modulus profile of
//
//   R(u) = r1 e^{-iku} + r2 e^{it} + r3 e^{ilu},  t = τ/D ∈ [0, π/D],  k r1 <= l r3.

#include <array>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>

namespace trinomax {

using Frequency = std::int64_t;
using Spectrum = std::array<Frequency, 3>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance, in radians, under which τ is classified as π.
inline constexpr double kDefaultTauPiTolerance = 1e-9;

/// Relative tolerance under which k r1 and l r3 are considered equal.
inline constexpr double kBalanceTolerance = 1e-12;

/// Representative of `angle` modulo 2π in (-π, π].
double wrap_angle(double angle);

/// Representative of `x` modulo `period` in [0, period).
double wrap_period(double x, double period);

/// Signed distance from `x` to `y` modulo `period`, in (-period/2, period/2].
double circular_difference(double x, double y, double period);

struct Trinomial {
    Spectrum freq{};
    std::array<double, 3> modulus{};
    std::array<double, 3> phase{};

    /// Throws InvalidInput unless frequencies are pairwise distinct, moduli
    /// strictly positive and everything finite.
    void validate() const;
};

struct SpectrumStats {
    Frequency d = 1;
    Frequency k = 1;
    Frequency l = 1;
    Frequency m = 1;  ///< inverse of l modulo k + l
    Frequency D = 2;  ///< diameter / d = k + l
    double theta = 0.0;  ///< phase combination reduced to (-π, π]
    /// Combination of the (-π, π]-wrapped phases equals theta + 2π·turns.
    Frequency turns = 0;
    double tau = 0.0;    ///< |theta|, snapped to π inside the tolerance
    bool symmetric = false;  ///< τ = π (within tolerance)
    /// order[0], order[1], order[2]: indices of the lowest, middle, highest frequency.
    std::array<int, 3> order{0, 1, 2};
};

struct ReducedForm {
    Frequency k = 1;
    Frequency l = 1;
    double r1 = 1.0;
    double r2 = 1.0;
    double r3 = 1.0;
    double t = 0.0;
    bool symmetric = false;  ///< t = π/(k+l), the τ = π branch

    Frequency D() const { return k + l; }
    /// Throws InvalidInput unless gcd(k,l) = 1, moduli positive,
    /// t ∈ [0, π/(k+l)] and k r1 <= l r3 (up to kBalanceTolerance).
    void validate() const;
};

/// The invertible record of a canonical reduction.  With u = sign()·d·(x - v):
///   T(x) = e^{i(alpha + λb x)} R(u)         if epsilon = +1
///   T(x) = e^{i(alpha + λb x)} conj(R(u))   if epsilon = -1
/// so in particular |T(x)| = |R(u)| for every x.
struct Transcript {
    std::array<int, 3> sortPermutation{0, 1, 2};
    Frequency middleFrequency = 0;
    double alpha = 0.0;
    double v = 0.0;
    int epsilon = 1;
    bool swapped = false;
    Frequency homothety = 1;

    int sign() const { return swapped ? -epsilon : epsilon; }
    double to_reduced(double x) const;
    double from_reduced(double u) const;
    /// T(x) recovered from the reduced form.
    std::complex<double> original_value(const ReducedForm& reduced, double x) const;
};

struct Reduction {
    ReducedForm reduced;
    SpectrumStats stats;
    Transcript transcript;
};

/// Phase increments (u1, u2, u3) applied to the three Fourier coefficients.
struct Multiplier {
    std::array<double, 3> phase{};
};

struct Isometry {
    double alpha = 0.0;
    double v = 0.0;
};

Frequency gcd(Frequency a, Frequency b);

/// (p, q) with p a + q b = gcd(a, b), for a, b >= 0.
std::pair<Frequency, Frequency> bezout(Frequency a, Frequency b);

/// 2-adic valuation of a nonzero integer.
int two_adic_valuation(Frequency n);

/// m ∈ [1, n-1] with l m ≡ 1 (mod n).  Throws InvalidInput if gcd(l,n) != 1 or n < 2.
Frequency modular_inverse(Frequency l, Frequency n);

void validate_spectrum(const Spectrum& freq);

SpectrumStats derive_spectrum_stats(const Spectrum& freq, const std::array<double, 3>& phase,
                                    double tauPiTolerance = kDefaultTauPiTolerance);
SpectrumStats derive_spectrum_stats(const Trinomial& T,
                                    double tauPiTolerance = kDefaultTauPiTolerance);

/// Empty unless M is an isometry of C_Λ, in which case Mf(x) = e^{iα} f(x - v).
std::optional<Isometry> is_isometry(const Spectrum& freq, const Multiplier& M,
                                    double angleTolerance = kDefaultTauPiTolerance);

Reduction canonical_reduction(const Trinomial& T,
                              double tauPiTolerance = kDefaultTauPiTolerance);

/// Normalises an arbitrary reduced family member: folds t into [0, π/(k+l)]
/// by evenness and 2π/(k+l)-periodicity and applies the (k,r1) <-> (l,r3) swap
/// when k r1 > l r3.  `swapped` reports whether the swap was applied.
ReducedForm make_reduced(Frequency k, Frequency l, double r1, double r2, double r3, double t,
                         bool* swapped = nullptr,
                         double tauPiTolerance = kDefaultTauPiTolerance);

/// Signs (ε1, ε2, ε3) in the caller's frequency order for which the phases
/// (0 or π) put the coefficients in opposition: τ = π.
std::array<int, 3> opposition_signs(const Spectrum& freq);

}  // namespace trinomax
