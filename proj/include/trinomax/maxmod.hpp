#pragma once

// Evaluation of trinomials and location of their maximum-modulus points.
//
// On the reduced form R(u) = r1 e^{-iku} + r2 e^{it} + r3 e^{ilu} with
// k r1 <= l r3 and t ∈ (0, π/(k+l)], the derivative of |R|^2 is positive on
// (-t/k, x*) and negative on (x*, t/l) for a single x* ∈ [0, t/l]; the maximum
// is found by bisection on that bracket.  For t = π/(k+l) the modulus is
// symmetric about u = mπ/(k+l) and a second maximum appears at 2mπ/(k+l) - x*
// unless the maximum sits on the axis itself.

#include <complex>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "trinomax/spectrum.hpp"

namespace trinomax {

enum class MaxClass {
    InteriorUnique,   ///< unique maximum point strictly inside (0, t/l), or t = 0
    AtZero,           ///< k r1 = l r3: the maximum sits at u = 0
    AtBoundary,       ///< l = 1, t = π/(k+1), k²r1r2 + (k+1)²r1r3 < r2r3
    SymmetricPair,    ///< τ = π: two maximum points, mirror images about the axis
    Degenerate4,      ///< boundary case with equality: one point, multiplicity 4
};

std::string_view to_string(MaxClass c);

struct MaxPoint {
    double x = 0.0;
    double value = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct MaxResult {
    std::vector<MaxPoint> points;
    int multiplicity = 2;
    MaxClass classification = MaxClass::InteriorUnique;
    std::optional<double> axis;  ///< s with |T(s - x)| = |T(x)|, present iff τ = π
    double period = kTwoPi;      ///< points are reported modulo this period (2π/d)

    double value() const { return points.front().value; }
};

struct GlobalMaxResult {
    MaxResult result;
    Reduction reduction;
    /// Localisation interval in the original variable (refined by the sign of
    /// r1|λ2-λ1| - r3|λ3-λ2|), and whether a reported point lies in it.
    Interval interval;
    bool inInterval = false;
};

std::complex<double> evaluate(const Trinomial& T, double x);

double modulus_squared_reduced(const ReducedForm& R, double x);

/// (1/2) d/dx |R(x)|^2.
double derivative_half(const ReducedForm& R, double x);

/// (1/2) d^2/dx^2 |R(x)|^2.
double second_derivative_half(const ReducedForm& R, double x);

/// n-th derivative of |T(x)|^2 for a general trinomial (n >= 0).
double modulus_squared_derivative(const Trinomial& T, double x, int order);

/// [-t/k, t/l].
Interval locate_interval(const ReducedForm& R);

MaxResult find_max_reduced(const ReducedForm& R);

GlobalMaxResult max_points_global(const Trinomial& T,
                                  double tauPiTolerance = kDefaultTauPiTolerance);

/// Interval of the original variable bounded by (t̃1 - t2)/(λ2 - λ1) and
/// (t2 - t̃3)/(λ3 - λ2) (λ sorted), refined to the half that starts at
/// (t̃1 - t̃3)/(λ3 - λ1).  Computed directly from the phases.
Interval theorem_interval(const Trinomial& T);

struct ClosedFormK1L1 {
    double value = 0.0;
    std::vector<double> points;  ///< in [0, 2π)
    bool boundary = false;       ///< second branch r2 + |r3 - r1|
};

/// max |r1 e^{-ix} + i r2 + r3 e^{ix}|.
ClosedFormK1L1 closed_form_k1_l1(double r1, double r2, double r3);

/// max |r1 e^{-2ix} + r2 e^{iπ/3} + r3 e^{ix}|.
double closed_form_k2_l1(double r1, double r2, double r3);

/// max |r1 e^{i(t1 + λ1 x)} + r2 e^{i(t2 + λ2 x)}| = r1 + r2.
double binomial_max(double r1, double r2);

}  // namespace trinomax
