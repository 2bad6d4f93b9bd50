#include "trinomax/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "trinomax/error.hpp"
#include "trinomax/maxmod.hpp"

namespace trinomax {

namespace {

constexpr double kAbsentCoefficient = 1e-12;
constexpr int kZeroSamples = 4096;
constexpr double kGolden = 0.6180339887498948482;

std::array<bool, 3> present(const UnitBallPoint& P) {
    const double largest = *std::max_element(P.modulus.begin(), P.modulus.end());
    std::array<bool, 3> out{};
    for (int j = 0; j < 3; ++j) out[j] = P.modulus[j] > kAbsentCoefficient * largest;
    return out;
}

Trinomial as_trinomial(const UnitBallPoint& P) {
    Trinomial T;
    T.freq = P.freq;
    T.modulus = P.modulus;
    T.phase = P.phase;
    return T;
}

// Maximises |T|^2 on [a, b] by golden section.
double golden_argmax(const Trinomial& T, double a, double b) {
    double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
    double fc = std::norm(evaluate(T, c)), fd = std::norm(evaluate(T, d));
    for (int i = 0; i < 80 && b - a > 1e-15; ++i) {
        if (fc >= fd) {
            b = d; d = c; fd = fc;
            c = b - kGolden * (b - a);
            fc = std::norm(evaluate(T, c));
        } else {
            a = c; c = d; fc = fd;
            d = a + kGolden * (b - a);
            fd = std::norm(evaluate(T, d));
        }
    }
    return 0.5 * (a + b);
}

// Zeros of 1 - |T/s|^2 over one period, with multiplicities (2 or 4).
std::vector<int> zero_multiplicities(const Trinomial& T, double s, double period) {
    const double h = period / kZeroSamples;
    std::vector<double> g(kZeroSamples);
    for (int i = 0; i < kZeroSamples; ++i) g[i] = 1.0 - std::norm(evaluate(T, h * i)) / (s * s);

    double curvature = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double delta = static_cast<double>(T.freq[i] - T.freq[j]);
            curvature += 2.0 * T.modulus[i] * T.modulus[j] * delta * delta;
        }
    curvature /= s * s;
    // A zero lies within h/2 of a sample, where g is at most (1/8) max|g''| h².
    const double band = 0.125 * curvature * h * h + 1e-9;

    std::vector<double> zeros;
    for (int i = 0; i < kZeroSamples; ++i) {
        const double gi = g[i];
        if (gi > band || gi > g[(i + kZeroSamples - 1) % kZeroSamples] ||
            gi > g[(i + 1) % kZeroSamples])
            continue;
        const double x = golden_argmax(T, h * (i - 1), h * (i + 1));
        if (1.0 - std::norm(evaluate(T, x)) / (s * s) > 1e-8) continue;
        const double wrapped = wrap_period(x, period);
        const bool seen = std::any_of(zeros.begin(), zeros.end(), [&](double z) {
            return std::abs(circular_difference(z, wrapped, period)) < 1e-3 * period;
        });
        if (!seen) zeros.push_back(wrapped);
    }

    std::vector<int> mult;
    for (double z : zeros) {
        const double second = modulus_squared_derivative(T, z, 2) / (s * s);
        mult.push_back(std::abs(second) > 1e-6 * curvature ? 2 : 4);
    }
    return mult;
}

}  // namespace

UnitBallKind UnitBallPoint::kind() const {
    const auto p = present(*this);
    const int count = static_cast<int>(std::count(p.begin(), p.end(), true));
    if (count == 0) throw InvalidInput("unit ball point: all coefficients vanish");
    if (count == 1) return UnitBallKind::Monomial;
    if (count == 2) return UnitBallKind::Binomial;
    return UnitBallKind::Trinomial;
}

double UnitBallPoint::sup_norm() const {
    validate_spectrum(freq);
    for (int j = 0; j < 3; ++j)
        if (!(modulus[j] >= 0.0) || !std::isfinite(modulus[j]) || !std::isfinite(phase[j]))
            throw InvalidInput("unit ball point: moduli must be finite and nonnegative");
    const auto p = present(*this);
    switch (kind()) {
        case UnitBallKind::Monomial:
        case UnitBallKind::Binomial: {
            double sum = 0.0;
            for (int j = 0; j < 3; ++j)
                if (p[j]) sum += modulus[j];
            return sum;
        }
        case UnitBallKind::Trinomial:
            return max_points_global(as_trinomial(*this)).result.value();
    }
    return 0.0;
}

ExtremalClass classify_unit_ball_point(const UnitBallPoint& P) {
    const double s = P.sup_norm();
    if (std::abs(s - 1.0) > 1e-6) throw InvalidInput("unit ball point: sup norm must be 1");
    ExtremalClass out;
    switch (P.kind()) {
        case UnitBallKind::Monomial:
            out.exposed = out.extreme = true;
            return out;
        case UnitBallKind::Binomial:
            // |P| peaks once per period of its own difference frequency; the
            // midpoint construction shows it is never extreme.
            out.maxPointCount = 1;
            out.zeroMultiplicitySum = 2;
            return out;
        case UnitBallKind::Trinomial:
            break;
    }
    const Trinomial T = as_trinomial(P);
    const GlobalMaxResult g = max_points_global(T);
    out.maxPointCount = static_cast<int>(g.result.points.size());
    out.exposed = out.maxPointCount == 2;
    const auto mult = zero_multiplicities(T, s, g.result.period);
    for (int m : mult) out.zeroMultiplicitySum += m;
    out.extreme = out.zeroMultiplicitySum == 4;
    return out;
}

Trinomial reconstruct_from_two_points(const Spectrum& freq, double x, double y,
                                      std::complex<double> valueX, std::complex<double> valueY) {
    const SpectrumStats s = derive_spectrum_stats(freq, {0.0, 0.0, 0.0});
    const double period = kTwoPi / static_cast<double>(s.d);
    if (!std::isfinite(x) || !std::isfinite(y))
        throw InvalidInput("reconstruction: points must be finite");
    if (std::abs(circular_difference(x, y, period)) < 1e-9 * period)
        throw InvalidInput("reconstruction: points must be distinct modulo 2pi/d");
    const double rho = std::abs(valueX);
    if (!(rho > 0.0) || std::abs(std::abs(valueY) - rho) > 1e-9 * rho)
        throw NoSolution("reconstruction: values must have equal nonzero modulus");

    const int a = s.order[0], b = s.order[1], c = s.order[2];
    const double lb = static_cast<double>(freq[b]);
    const double k = static_cast<double>(s.k);
    const double l = static_cast<double>(s.l);
    const double d = static_cast<double>(s.d);

    // Strip the middle frequency and rescale: S(u) has spectrum {-k, 0, l}.
    const std::complex<double> Sx = valueX * std::polar(1.0, -lb * x);
    const std::complex<double> Sy = valueY * std::polar(1.0, -lb * y);
    const double X = d * x, Y = d * y;
    const double phi = 0.5 * (std::arg(Sx) + std::arg(Sy));
    const double vartheta = 0.5 * (std::arg(Sx) - std::arg(Sy));

    bool singular = false;
    for (double shift : {0.0, kPi}) {
        // After translating by centre and rotating by phi the data become
        // Q(h) = ρ e^{iϑ}, Q(-h) = ρ e^{-iϑ}, met by real coefficients p.
        const double centre = 0.5 * (X + Y) + shift;
        const double h = X - centre;
        const double A = std::sin(vartheta + k * h);
        const double B = std::sin(vartheta - l * h);
        if (std::abs(A) < 1e-12 || std::abs(B) < 1e-12) {
            singular = true;
            continue;
        }
        // Rows: Re Q(h), Im Q(h), stationarity of |Q|^2 at h.
        const double m[3][3] = {{std::cos(k * h), 1.0, std::cos(l * h)},
                                {-std::sin(k * h), 0.0, std::sin(l * h)},
                                {-k * A, 0.0, l * B}};
        const double rhs[3] = {rho * std::cos(vartheta), rho * std::sin(vartheta), 0.0};
        const auto det3 = [](const double q[3][3]) {
            return q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
                   q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
                   q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
        };
        const double det = det3(m);
        if (std::abs(det) < 1e-14 * (k + l)) {
            singular = true;
            continue;
        }
        double p[3];
        for (int col = 0; col < 3; ++col) {
            double q[3][3];
            for (int r = 0; r < 3; ++r)
                for (int cc = 0; cc < 3; ++cc) q[r][cc] = cc == col ? rhs[r] : m[r][cc];
            p[col] = det3(q) / det;
        }
        if (std::min({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])}) <= 1e-12 * rho) continue;

        const std::complex<double> coeff[3] = {
            std::polar(1.0, phi) * p[0] * std::polar(1.0, k * centre),
            std::polar(1.0, phi) * p[1],
            std::polar(1.0, phi) * p[2] * std::polar(1.0, -l * centre)};
        Trinomial T;
        T.freq = freq;
        const int idx[3] = {a, b, c};
        for (int j = 0; j < 3; ++j) {
            T.modulus[idx[j]] = std::abs(coeff[j]);
            T.phase[idx[j]] = std::arg(coeff[j]);
        }
        if (std::abs(evaluate(T, x) - valueX) > 1e-8 * rho ||
            std::abs(evaluate(T, y) - valueY) > 1e-8 * rho)
            continue;
        if (max_points_global(T).result.value() > rho * (1.0 + 1e-9)) continue;
        return T;
    }
    if (singular)
        throw SingularConfiguration("reconstruction: sin(theta + kx) sin(theta - lx) vanishes");
    throw NoSolution("reconstruction: no trinomial attains its maximum modulus at both points");
}

bool parabola_invariant(Frequency k, double p1, double p2, double p3, double rho) {
    const double kk = static_cast<double>(k);
    const double lhs = (kk * p1 - p3) * (kk * p1 - p3);
    const double rhs = rho * (kk * kk * p1 + p3);
    const double scale1 = std::max({lhs, std::abs(rho) * (kk * kk * std::abs(p1) + std::abs(p3)),
                                    std::numeric_limits<double>::min()});
    const double a = kk * kk * p1 * p2;
    const double b = (kk + 1) * (kk + 1) * p1 * p3;
    const double c = p2 * p3;
    const double scale2 =
        std::max({std::abs(a) + std::abs(b) + std::abs(c), std::numeric_limits<double>::min()});
    return std::abs(lhs - rhs) <= 1e-10 * scale1 && std::abs(a + b + c) <= 1e-10 * scale2;
}

}  // namespace trinomax
