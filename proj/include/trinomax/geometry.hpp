#pragma once

// |T(x)| is the distance from
//   z(x) = ra e^{i(ta - (λb-λa)x)} + rc e^{i(tc + (λc-λb)x)}
// to the point -rb e^{itb}; z traces a hypotrochoid H, and a hypocycloid
// with |λc-λa|/d cusps when ra : rc = (λc-λb) : (λb-λa).

#include <complex>
#include <optional>
#include <vector>

#include "trinomax/spectrum.hpp"

namespace trinomax {

struct CurvePoint {
    double x = 0.0;
    std::complex<double> z;
};

/// Samples in parameter order over (-π, π].
struct Curve {
    std::vector<CurvePoint> samples;
    bool closed = true;
    std::optional<Frequency> cuspCount;
};

struct FarthestPoint {
    double x = 0.0;
    double distance = 0.0;
};

/// n >= 16.  The middle coefficient of T does not enter the curve.
Curve hypotrochoid_sample(const Trinomial& T, int n);

/// Points of H farthest from `center` (nonzero), x in [0, 2π/d).
std::vector<FarthestPoint> farthest_points(const Trinomial& T, std::complex<double> center);

}  // namespace trinomax
