#include "trinomax/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "trinomax/error.hpp"
#include "trinomax/maxmod.hpp"

namespace trinomax {

Curve hypotrochoid_sample(const Trinomial& T, int n) {
    T.validate();
    if (n < 16) throw InvalidInput("hypotrochoid: need at least 16 samples");
    const SpectrumStats s = derive_spectrum_stats(T);
    const int a = s.order[0], b = s.order[1], c = s.order[2];
    const double inner = static_cast<double>(T.freq[b] - T.freq[a]);
    const double outer = static_cast<double>(T.freq[c] - T.freq[b]);

    Curve curve;
    curve.samples.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double x = -kPi + kTwoPi * static_cast<double>(j + 1) / n;
        curve.samples.push_back({x, std::polar(T.modulus[a], T.phase[a] - inner * x) +
                                        std::polar(T.modulus[c], T.phase[c] + outer * x)});
    }
    const double lhs = T.modulus[a] * inner;
    const double rhs = T.modulus[c] * outer;
    if (std::abs(lhs - rhs) <= 1e-9 * std::max(lhs, rhs))
        curve.cuspCount = (T.freq[c] - T.freq[a]) / s.d;
    return curve;
}

std::vector<FarthestPoint> farthest_points(const Trinomial& T, std::complex<double> center) {
    T.validate();
    if (!(std::abs(center) > 0.0) || !std::isfinite(std::abs(center)))
        throw InvalidInput("farthest points: center must be finite and nonzero");
    const SpectrumStats s = derive_spectrum_stats(T);
    Trinomial shifted = T;
    shifted.modulus[s.order[1]] = std::abs(center);
    shifted.phase[s.order[1]] = std::arg(-center);
    const GlobalMaxResult g = max_points_global(shifted);
    std::vector<FarthestPoint> out;
    for (const MaxPoint& p : g.result.points) out.push_back({p.x, p.value});
    return out;
}

}  // namespace trinomax
