#include "trinomax/maxmod.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trinomax/error.hpp"

namespace trinomax {

namespace {

// Relative tolerance of the knife-edge test k²r1r2 + (k+1)²r1r3 = r2r3.
constexpr double kQuarticTolerance = 1e-10;
constexpr int kBisectionSteps = 60;

bool is_balanced(const ReducedForm& R) {
    const double lhs = static_cast<double>(R.k) * R.r1;
    const double rhs = static_cast<double>(R.l) * R.r3;
    return std::abs(lhs - rhs) <= kBalanceTolerance * std::max(lhs, rhs);
}

double bisect_critical_point(const ReducedForm& R) {
    double lo = 0.0;
    double hi = R.t / static_cast<double>(R.l);
    const double scale = static_cast<double>(R.k + R.l) * (R.r1 * R.r2 + R.r1 * R.r3 + R.r2 * R.r3);
    const double slack = 1e-12 * scale;
    const double dlo = derivative_half(R, lo);
    const double dhi = derivative_half(R, hi);
    if (dlo < -slack || dhi > slack)
        throw BracketFailure("derivative of |R|^2 does not change sign from + to - on [0, t/l]");

    for (int i = 0; i < kBisectionSteps && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (derivative_half(R, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);

    // One Newton step on the derivative, kept only if it stays in the bracket
    // and does not lower the modulus.
    const double d2 = second_derivative_half(R, x);
    if (d2 < 0.0) {
        const double polished = x - derivative_half(R, x) / d2;
        const double width = std::max(hi - lo, 4.0 * std::numeric_limits<double>::epsilon() * hi);
        if (polished >= lo - width && polished <= hi + width && polished >= 0.0 &&
            modulus_squared_reduced(R, polished) >= modulus_squared_reduced(R, x))
            x = polished;
    }
    return x;
}

}  // namespace

std::string_view to_string(MaxClass c) {
    switch (c) {
        case MaxClass::InteriorUnique: return "InteriorUnique";
        case MaxClass::AtZero: return "AtZero_kr1_eq_lr3";
        case MaxClass::AtBoundary: return "AtBoundary_tOverL";
        case MaxClass::SymmetricPair: return "SymmetricPair";
        case MaxClass::Degenerate4: return "Degenerate4";
    }
    return "unknown";
}

std::complex<double> evaluate(const Trinomial& T, double x) {
    std::complex<double> sum{0.0, 0.0};
    for (int j = 0; j < 3; ++j)
        sum += std::polar(T.modulus[j], T.phase[j] + static_cast<double>(T.freq[j]) * x);
    return sum;
}

double modulus_squared_reduced(const ReducedForm& R, double x) {
    const double k = static_cast<double>(R.k);
    const double l = static_cast<double>(R.l);
    return R.r1 * R.r1 + R.r2 * R.r2 + R.r3 * R.r3 +
           2.0 * (R.r1 * R.r2 * std::cos(R.t + k * x) + R.r1 * R.r3 * std::cos((k + l) * x) +
                  R.r2 * R.r3 * std::cos(R.t - l * x));
}

double derivative_half(const ReducedForm& R, double x) {
    const double k = static_cast<double>(R.k);
    const double l = static_cast<double>(R.l);
    return -k * R.r1 * R.r2 * std::sin(R.t + k * x) - (k + l) * R.r1 * R.r3 * std::sin((k + l) * x) +
           l * R.r2 * R.r3 * std::sin(R.t - l * x);
}

double second_derivative_half(const ReducedForm& R, double x) {
    const double k = static_cast<double>(R.k);
    const double l = static_cast<double>(R.l);
    return -k * k * R.r1 * R.r2 * std::cos(R.t + k * x) -
           (k + l) * (k + l) * R.r1 * R.r3 * std::cos((k + l) * x) -
           l * l * R.r2 * R.r3 * std::cos(R.t - l * x);
}

double modulus_squared_derivative(const Trinomial& T, double x, int order) {
    double sum = 0.0;
    if (order == 0)
        for (double r : T.modulus) sum += r * r;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const double delta = static_cast<double>(T.freq[i] - T.freq[j]);
            const double arg = T.phase[i] - T.phase[j] + delta * x + order * (kPi / 2.0);
            sum += 2.0 * T.modulus[i] * T.modulus[j] * std::pow(delta, order) * std::cos(arg);
        }
    }
    return sum;
}

Interval locate_interval(const ReducedForm& R) {
    return {-R.t / static_cast<double>(R.k), R.t / static_cast<double>(R.l)};
}

MaxResult find_max_reduced(const ReducedForm& R) {
    R.validate();
    MaxResult res;
    res.period = kTwoPi;
    const double k = static_cast<double>(R.k);
    const double D = static_cast<double>(R.D());

    double xstar = 0.0;
    if (R.t == 0.0) {
        res.classification = MaxClass::InteriorUnique;
    } else if (is_balanced(R)) {
        res.classification = MaxClass::AtZero;
    } else {
        bool boundary = false;
        if (R.symmetric && R.l == 1) {
            const double excess = k * k * R.r1 * R.r2 + (k + 1) * (k + 1) * R.r1 * R.r3 - R.r2 * R.r3;
            const double scale = k * k * R.r1 * R.r2 + (k + 1) * (k + 1) * R.r1 * R.r3 + R.r2 * R.r3;
            if (excess <= kQuarticTolerance * scale) {
                boundary = true;
                xstar = R.t;
                if (std::abs(excess) <= kQuarticTolerance * scale) {
                    res.classification = MaxClass::Degenerate4;
                    res.multiplicity = 4;
                } else {
                    res.classification = MaxClass::AtBoundary;
                }
            }
        }
        if (!boundary) {
            xstar = bisect_critical_point(R);
            res.classification = MaxClass::InteriorUnique;
        }
    }

    const double value = std::sqrt(modulus_squared_reduced(R, xstar));
    res.points.push_back({xstar, value});

    if (R.symmetric) {
        const double axis = wrap_period(2.0 * static_cast<double>(modular_inverse(R.l, R.D())) * kPi / D,
                                        kTwoPi);
        res.axis = axis;
        if (res.classification == MaxClass::InteriorUnique || res.classification == MaxClass::AtZero) {
            const double mirror = wrap_period(axis - xstar, kTwoPi);
            if (std::abs(circular_difference(mirror, xstar, kTwoPi)) > 1e-9) {
                res.points.push_back({mirror, std::sqrt(modulus_squared_reduced(R, mirror))});
                res.classification = MaxClass::SymmetricPair;
            }
        }
    }
    return res;
}

Interval theorem_interval(const Trinomial& T) {
    const SpectrumStats s = derive_spectrum_stats(T);
    const int a = s.order[0], b = s.order[1], c = s.order[2];
    const double la = static_cast<double>(T.freq[a]);
    const double lb = static_cast<double>(T.freq[b]);
    const double lc = static_cast<double>(T.freq[c]);
    // a1, a3 with l a1 + k a3 = -turns bring the combination into [-π, π].
    const auto [p, q] = bezout(s.k, s.l);
    const double a1 = static_cast<double>(-q * s.turns);
    const double a3 = static_cast<double>(-p * s.turns);
    const double t1 = wrap_angle(T.phase[a]) - kTwoPi * a1;
    const double t2 = wrap_angle(T.phase[b]);
    const double t3 = wrap_angle(T.phase[c]) - kTwoPi * a3;

    const double centre = (t1 - t3) / (lc - la);
    const double left = (t1 - t2) / (lb - la);
    const double right = (t2 - t3) / (lc - lb);
    const double other =
        T.modulus[a] * (lb - la) <= T.modulus[c] * (lc - lb) ? right : left;
    return {std::min(centre, other), std::max(centre, other)};
}

GlobalMaxResult max_points_global(const Trinomial& T, double tauPiTolerance) {
    GlobalMaxResult out;
    out.reduction = canonical_reduction(T, tauPiTolerance);
    const Transcript& tr = out.reduction.transcript;
    const double period = kTwoPi / static_cast<double>(out.reduction.stats.d);

    MaxResult reduced = find_max_reduced(out.reduction.reduced);
    MaxResult& res = out.result;
    res.multiplicity = reduced.multiplicity;
    res.classification = reduced.classification;
    res.period = period;
    for (const MaxPoint& pt : reduced.points)
        res.points.push_back({wrap_period(tr.from_reduced(pt.x), period), pt.value});
    if (reduced.axis)
        res.axis = wrap_period(2.0 * tr.v + static_cast<double>(tr.sign()) * *reduced.axis /
                                                static_cast<double>(tr.homothety),
                               period);

    out.interval = theorem_interval(T);
    const double width = out.interval.hi - out.interval.lo;
    const double slack = 1e-9 * period;
    for (const MaxPoint& pt : res.points) {
        const double offset = wrap_period(pt.x - out.interval.lo, period);
        if (offset <= width + slack || offset >= period - slack) out.inInterval = true;
    }
    return out;
}

ClosedFormK1L1 closed_form_k1_l1(double r1, double r2, double r3) {
    if (!(r1 > 0.0) || !(r2 > 0.0) || !(r3 > 0.0))
        throw InvalidInput("closed_form_k1_l1: moduli must be positive");
    ClosedFormK1L1 out;
    if (std::abs(1.0 / r1 - 1.0 / r3) < 4.0 / r2) {
        out.value = (r1 + r3) * std::sqrt(1.0 + r2 * r2 / (4.0 * r1 * r3));
        const double s = std::asin(r2 * (r3 - r1) / (4.0 * r1 * r3));
        out.points = {wrap_period(s, kTwoPi), wrap_period(kPi - s, kTwoPi)};
        std::sort(out.points.begin(), out.points.end());
    } else {
        out.boundary = true;
        out.value = r2 + std::abs(r3 - r1);
        out.points = {r1 < r3 ? kPi / 2.0 : 3.0 * kPi / 2.0};
    }
    return out;
}

double closed_form_k2_l1(double r1, double r2, double r3) {
    if (!(r1 > 0.0) || !(r2 > 0.0) || !(r3 > 0.0))
        throw InvalidInput("closed_form_k2_l1: moduli must be positive");
    if (1.0 / r1 - 4.0 / r3 < 9.0 / r2) {
        const double a = r2 / (3.0 * r3);
        const double b = r2 / (3.0 * r1);
        const double square = r1 * r1 + 2.0 / 3.0 * r2 * r2 + r3 * r3 + r1 * r2 +
                              2.0 * r1 * r3 * (std::pow(a * a + b + 1.0, 1.5) - a * a * a);
        return std::sqrt(square);
    }
    return -r1 + r2 + r3;
}

double binomial_max(double r1, double r2) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw InvalidInput("binomial_max: moduli must be positive");
    return r1 + r2;
}

}  // namespace trinomax
