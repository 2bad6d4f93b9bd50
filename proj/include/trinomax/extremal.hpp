#pragma once

// Exposed and extreme points of the unit ball of C_Λ (continuous functions
// with spectrum in Λ, sup norm), and the two-point determination of a
// trinomial from the values it takes at its maximum points.

#include <array>
#include <complex>

#include "trinomax/spectrum.hpp"

namespace trinomax {

enum class UnitBallKind { Monomial, Binomial, Trinomial };

/// A function with spectrum in Λ.  Moduli may be zero; coefficients below
/// 1e-12 of the largest count as absent.
struct UnitBallPoint {
    Spectrum freq{};
    std::array<double, 3> modulus{};
    std::array<double, 3> phase{};

    UnitBallKind kind() const;
    double sup_norm() const;
};

struct ExtremalClass {
    bool exposed = false;
    bool extreme = false;
    /// Maximum points of |P| per period 2π/d; 0 when |P| is constant.
    int maxPointCount = 0;
    /// Zeros of 1 - |P|^2 per period, counted with multiplicity.
    int zeroMultiplicitySum = 0;
};

/// Throws InvalidInput when |sup_norm() - 1| > 1e-6.
ExtremalClass classify_unit_ball_point(const UnitBallPoint& P);

/// The trinomial with spectrum `freq` that attains its maximum modulus at x
/// and y (distinct modulo 2π/d) with T(x) = valueX, T(y) = valueY.
/// Throws NoSolution when there is none, SingularConfiguration when the
/// linear system degenerates.
Trinomial reconstruct_from_two_points(const Spectrum& freq, double x, double y,
                                      std::complex<double> valueX, std::complex<double> valueY);

/// (k p1 - p3)^2 = ρ (k² p1 + p3) and k² p1 p2 + (k+1)² p1 p3 + p2 p3 = 0,
/// both to 1e-10 relative.
bool parabola_invariant(Frequency k, double p1, double p2, double p3, double rho);

}  // namespace trinomax
