#pragma once

// Maximum modulus of r1 e^{-ikx} + r2 e^{it} + r3 e^{ilx} as a function of
// the middle phase t.  Derivatives are for the squared modulus unless named
// otherwise.

#include <cstddef>
#include <vector>

#include "trinomax/spectrum.hpp"

namespace trinomax {

/// Moduli and frequencies of a reduced family; t varies.
struct ReducedFamily {
    Frequency k = 1;
    Frequency l = 1;
    double r1 = 1.0;
    double r2 = 1.0;
    double r3 = 1.0;

    Frequency D() const { return k + l; }
};

struct SweepRow {
    double tau = 0.0;
    double t = 0.0;
    double fstar = 0.0;         ///< max modulus
    double fstarSquared = 0.0;
    double ratio = 0.0;         ///< fstar / |r1 + r2 e^{it} + r3|
    double bound = 0.0;         ///< cos(τ/2D)
};

/// One-sided t-derivatives of fstar^2.  They differ only at t = π/D with a
/// symmetric pair of maximum points.
struct ChebotarevDerivative {
    double left = 0.0;
    double right = 0.0;
    bool endpoint = false;
    /// d fstar / dt from the right (or the common value).
    double plain = 0.0;
};

struct LowerBound {
    double lhs = 0.0;    ///< fstar / (r1 + r2 + r3)
    double bound = 0.0;  ///< cos(t/2)
};

/// Any real t; folded by evenness and 2π/D-periodicity.
double fstar(const ReducedFamily& F, double t);

/// t ∈ [0, π/D].  Max of ∂/∂t |R|^2 = -2 r2 (r1 sin(t+kx) + r3 sin(t-lx))
/// over the maximum points (right derivative), min for the left one.
ChebotarevDerivative chebotarev_derivative(const ReducedFamily& F, double t);

/// t ∈ [0, π/D].
double ratio_gstar(const ReducedFamily& F, double t);

/// cos(τ/2D) / cos(τ'/2D) for 0 <= τ' < τ <= π.
double bound_ratio_th4(double tau, double tauPrime, Frequency D);

/// t ∈ [0, π/D].
LowerBound lower_bound_th3(const ReducedFamily& F, double t);

/// `rows` uniform τ values on [0, π], in increasing order.
std::vector<SweepRow> sweep(const ReducedFamily& F, std::size_t rows = 64);

}  // namespace trinomax
