#include "trinomax/spectrum.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

#include "trinomax/error.hpp"

namespace trinomax {

namespace {

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

// (g, p, q) with p a + q b = g = gcd(a, b), for a, b >= 0.
struct Bezout {
    Frequency g, p, q;
};

Bezout extended_gcd(Frequency a, Frequency b) {
    Frequency oldR = a, r = b;
    Frequency oldS = 1, s = 0;
    Frequency oldT = 0, t = 1;
    while (r != 0) {
        const Frequency quotient = oldR / r;
        oldR = std::exchange(r, oldR - quotient * r);
        oldS = std::exchange(s, oldS - quotient * s);
        oldT = std::exchange(t, oldT - quotient * t);
    }
    return {oldR, oldS, oldT};
}

Frequency positive_mod(Frequency a, Frequency n) {
    const Frequency r = a % n;
    return r < 0 ? r + n : r;
}

std::array<int, 3> sort_order(const Spectrum& freq) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return freq[a] < freq[b]; });
    return order;
}

// Phase combination θ_raw = -l ta + (k+l) tb - k tc and the integer n with
// θ_raw - 2πn ∈ (-π, π].
struct PhaseCombination {
    long double raw;
    long double reduced;
    Frequency turns;
};

PhaseCombination combine_phases(Frequency k, Frequency l, long double ta, long double tb,
                                long double tc) {
    const long double raw =
        -static_cast<long double>(l) * (ta - tb) - static_cast<long double>(k) * (tc - tb);
    auto turns = static_cast<Frequency>(std::llround(raw / kTwoPiL));
    long double reduced = raw - kTwoPiL * static_cast<long double>(turns);
    if (reduced <= -std::numbers::pi_v<long double>) {
        reduced += kTwoPiL;
        --turns;
    } else if (reduced > std::numbers::pi_v<long double>) {
        reduced -= kTwoPiL;
        ++turns;
    }
    return {raw, reduced, turns};
}

}  // namespace

double wrap_angle(double angle) {
    double r = std::remainder(angle, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
}

double wrap_period(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0) r += period;
    if (r >= period) r -= period;
    return r;
}

double circular_difference(double x, double y, double period) {
    double r = std::remainder(x - y, period);
    if (r <= -period / 2) r += period;
    return r;
}

Frequency gcd(Frequency a, Frequency b) {
    return std::gcd(a, b);
}

std::pair<Frequency, Frequency> bezout(Frequency a, Frequency b) {
    const auto r = extended_gcd(a, b);
    return {r.p, r.q};
}

int two_adic_valuation(Frequency n) {
    assert(n != 0);
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

Frequency modular_inverse(Frequency l, Frequency n) {
    if (n < 2) throw InvalidInput("modular_inverse: modulus must be at least 2");
    const auto [g, p, q] = extended_gcd(positive_mod(l, n), n);
    (void)q;
    if (g != 1) throw InvalidInput("modular_inverse: arguments are not coprime");
    return positive_mod(p, n);
}

void validate_spectrum(const Spectrum& freq) {
    if (freq[0] == freq[1] || freq[1] == freq[2] || freq[0] == freq[2])
        throw InvalidInput("frequencies must be pairwise distinct");
}

void Trinomial::validate() const {
    validate_spectrum(freq);
    for (int j = 0; j < 3; ++j) {
        if (!std::isfinite(modulus[j]) || !(modulus[j] > 0.0))
            throw InvalidInput("modulus r" + std::to_string(j + 1) + " must be finite and positive");
        if (!std::isfinite(phase[j]))
            throw InvalidInput("phase t" + std::to_string(j + 1) + " must be finite");
    }
}

void ReducedForm::validate() const {
    if (k < 1 || l < 1 || std::gcd(k, l) != 1)
        throw InvalidInput("reduced form: k and l must be positive and coprime");
    for (double r : {r1, r2, r3})
        if (!std::isfinite(r) || !(r > 0.0))
            throw InvalidInput("reduced form: moduli must be finite and positive");
    const double tMax = kPi / static_cast<double>(D());
    if (!(t >= 0.0) || t > tMax * (1.0 + 1e-15))
        throw InvalidInput("reduced form: t must lie in [0, pi/(k+l)]");
    if (static_cast<double>(k) * r1 > static_cast<double>(l) * r3 * (1.0 + kBalanceTolerance))
        throw InvalidInput("reduced form: k r1 must not exceed l r3");
}

double Transcript::to_reduced(double x) const {
    return static_cast<double>(sign()) * static_cast<double>(homothety) * (x - v);
}

double Transcript::from_reduced(double u) const {
    return v + static_cast<double>(sign()) * u / static_cast<double>(homothety);
}

std::complex<double> Transcript::original_value(const ReducedForm& R, double x) const {
    const double u = to_reduced(x);
    const double kd = static_cast<double>(R.k);
    const double ld = static_cast<double>(R.l);
    std::complex<double> value = std::polar(R.r1, -kd * u) + std::polar(R.r2, R.t) +
                                 std::polar(R.r3, ld * u);
    if (epsilon < 0) value = std::conj(value);
    return std::polar(1.0, alpha + static_cast<double>(middleFrequency) * x) * value;
}

SpectrumStats derive_spectrum_stats(const Spectrum& freq, const std::array<double, 3>& phase,
                                    double tauPiTolerance) {
    validate_spectrum(freq);
    SpectrumStats s;
    s.order = sort_order(freq);
    const Frequency lo = freq[s.order[0]];
    const Frequency mid = freq[s.order[1]];
    const Frequency hi = freq[s.order[2]];
    s.d = std::gcd(mid - lo, hi - mid);
    s.k = (mid - lo) / s.d;
    s.l = (hi - mid) / s.d;
    s.D = s.k + s.l;
    s.m = modular_inverse(s.l, s.D);

    const auto combo =
        combine_phases(s.k, s.l, wrap_angle(phase[s.order[0]]), wrap_angle(phase[s.order[1]]),
                       wrap_angle(phase[s.order[2]]));
    s.theta = static_cast<double>(combo.reduced);
    s.turns = combo.turns;
    s.tau = std::abs(s.theta);
    if (kPi - s.tau <= tauPiTolerance) {
        s.tau = kPi;
        s.theta = s.theta < 0 ? -kPi : kPi;
        s.symmetric = true;
    }
    return s;
}

SpectrumStats derive_spectrum_stats(const Trinomial& T, double tauPiTolerance) {
    T.validate();
    return derive_spectrum_stats(T.freq, T.phase, tauPiTolerance);
}

std::optional<Isometry> is_isometry(const Spectrum& freq, const Multiplier& M,
                                    double angleTolerance) {
    const SpectrumStats s = derive_spectrum_stats(freq, M.phase);
    if (s.tau > angleTolerance) return std::nullopt;

    // u_j ≡ α - λ_j v (mod 2π): k d v ≡ ua - ub and l d v ≡ ub - uc.
    const long double ua = wrap_angle(M.phase[s.order[0]]);
    const long double ub = wrap_angle(M.phase[s.order[1]]);
    const long double uc = wrap_angle(M.phase[s.order[2]]);
    const auto combo = combine_phases(s.k, s.l, ua, ub, uc);
    // l (ua - ub + 2π j1) = k (ub - uc + 2π j3)  <=>  k j3 - l j1 = -raw/2π = -turns
    const auto [g, p, q] = extended_gcd(s.k, s.l);
    assert(g == 1);
    (void)g;
    const Frequency j1 = q * combo.turns;
    const long double v =
        (ua - ub + kTwoPiL * static_cast<long double>(j1)) / static_cast<long double>(s.k * s.d);
    const long double alpha = ub + static_cast<long double>(freq[s.order[1]]) * v;
    Isometry iso;
    iso.v = wrap_angle(static_cast<double>(v));
    // α absorbs the 2π λ shift introduced by wrapping v.
    iso.alpha = wrap_angle(static_cast<double>(alpha) +
                           static_cast<double>(freq[s.order[1]]) * (iso.v - static_cast<double>(v)));
    return iso;
}

Reduction canonical_reduction(const Trinomial& T, double tauPiTolerance) {
    T.validate();
    Reduction out;
    SpectrumStats& s = out.stats;
    s = derive_spectrum_stats(T.freq, T.phase, tauPiTolerance);
    const int a = s.order[0], b = s.order[1], c = s.order[2];

    const long double ta = wrap_angle(T.phase[a]);
    const long double tb = wrap_angle(T.phase[b]);
    const long double tc = wrap_angle(T.phase[c]);
    const auto combo = combine_phases(s.k, s.l, ta, tb, tc);

    // Translation w (in units of d x) aligning the outer coefficients:
    // (ta - tb) - k w ≡ (tc - tb) + l w (mod 2π), with j chosen so the
    // remaining middle phase is θ/D.
    const Frequency j = positive_mod(combo.turns * s.m, s.D);
    const long double D = static_cast<long double>(s.D);
    const long double w = ((ta - tb) - (tc - tb) + kTwoPiL * static_cast<long double>(j)) / D;
    const long double phi = (ta - tb) - static_cast<long double>(s.k) * w;

    double t0 = s.theta / static_cast<double>(s.D);
    if (s.symmetric) t0 = (s.theta < 0 ? -kPi : kPi) / static_cast<double>(s.D);

    Transcript& tr = out.transcript;
    tr.sortPermutation = s.order;
    tr.middleFrequency = T.freq[b];
    tr.homothety = s.d;
    tr.alpha = wrap_angle(static_cast<double>(tb + phi));
    tr.epsilon = t0 < 0 ? -1 : 1;

    ReducedForm& R = out.reduced;
    R.k = s.k;
    R.l = s.l;
    R.r1 = T.modulus[a];
    R.r2 = T.modulus[b];
    R.r3 = T.modulus[c];
    R.t = std::abs(t0);
    R.symmetric = s.symmetric;
    if (static_cast<double>(R.k) * R.r1 >
        static_cast<double>(R.l) * R.r3 * (1.0 + kBalanceTolerance)) {
        std::swap(R.k, R.l);
        std::swap(R.r1, R.r3);
        tr.swapped = true;
    }

    const double period = kTwoPi / static_cast<double>(s.d);
    tr.v = wrap_period(static_cast<double>(w / static_cast<long double>(s.d)), period);
    return out;
}

ReducedForm make_reduced(Frequency k, Frequency l, double r1, double r2, double r3, double t,
                         bool* swapped, double tauPiTolerance) {
    if (k < 1 || l < 1 || std::gcd(k, l) != 1)
        throw InvalidInput("reduced family: k and l must be positive and coprime");
    if (!std::isfinite(t)) throw InvalidInput("reduced family: t must be finite");
    ReducedForm R;
    R.k = k;
    R.l = l;
    R.r1 = r1;
    R.r2 = r2;
    R.r3 = r3;
    const double D = static_cast<double>(k + l);
    double folded = wrap_period(t, kTwoPi / D);
    if (folded > kPi / D) folded = kTwoPi / D - folded;
    if (std::abs(folded - kPi / D) * D <= tauPiTolerance) {
        folded = kPi / D;
        R.symmetric = true;
    }
    R.t = folded;
    bool didSwap = false;
    if (static_cast<double>(k) * r1 > static_cast<double>(l) * r3 * (1.0 + kBalanceTolerance)) {
        std::swap(R.k, R.l);
        std::swap(R.r1, R.r3);
        didSwap = true;
    }
    if (swapped) *swapped = didSwap;
    R.validate();
    return R;
}

std::array<int, 3> opposition_signs(const Spectrum& freq) {
    validate_spectrum(freq);
    // The pair whose difference carries the strictly largest power of 2.
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
    std::array<int, 3> val{};
    for (int p = 0; p < 3; ++p)
        val[p] = two_adic_valuation(freq[pairs[p].first] - freq[pairs[p].second]);
    const auto best = static_cast<int>(std::max_element(val.begin(), val.end()) - val.begin());
    for (int p = 0; p < 3; ++p) assert(p == best || val[p] < val[best]);
    std::array<int, 3> signs{1, 1, 1};
    signs[pairs[best].second] = -1;
    return signs;
}

}  // namespace trinomax
