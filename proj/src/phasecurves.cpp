#include "trinomax/phasecurves.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "trinomax/error.hpp"
#include "trinomax/maxmod.hpp"
#include "trinomax/parallel.hpp"

namespace trinomax {

namespace {

ReducedForm reduce(const ReducedFamily& F, double t) {
    if (!(F.r1 > 0.0) || !(F.r2 > 0.0) || !(F.r3 > 0.0))
        throw InvalidInput("reduced family: moduli must be positive");
    return make_reduced(F.k, F.l, F.r1, F.r2, F.r3, t);
}

void require_principal(const ReducedFamily& F, double t) {
    const double tMax = kPi / static_cast<double>(F.D());
    if (!(t >= 0.0) || t > tMax * (1.0 + 1e-15))
        throw InvalidInput("t must lie in [0, pi/(k+l)]");
}

}  // namespace

double fstar(const ReducedFamily& F, double t) {
    return find_max_reduced(reduce(F, t)).value();
}

ChebotarevDerivative chebotarev_derivative(const ReducedFamily& F, double t) {
    require_principal(F, t);
    const ReducedForm R = reduce(F, t);
    const MaxResult res = find_max_reduced(R);
    const double k = static_cast<double>(R.k);
    const double l = static_cast<double>(R.l);

    ChebotarevDerivative out;
    out.left = std::numeric_limits<double>::infinity();
    out.right = -std::numeric_limits<double>::infinity();
    for (const MaxPoint& p : res.points) {
        const double g = -2.0 * R.r2 * (R.r1 * std::sin(R.t + k * p.x) + R.r3 * std::sin(R.t - l * p.x));
        out.left = std::min(out.left, g);
        out.right = std::max(out.right, g);
    }
    out.endpoint = R.symmetric && res.points.size() == 2;
    out.plain = out.right / (2.0 * res.value());
    return out;
}

double ratio_gstar(const ReducedFamily& F, double t) {
    require_principal(F, t);
    const double aligned = std::abs(F.r1 + F.r3 + std::polar(F.r2, t));
    return fstar(F, t) / aligned;
}

double bound_ratio_th4(double tau, double tauPrime, Frequency D) {
    if (D < 2) throw InvalidInput("D must be at least 2");
    if (!(tauPrime >= 0.0) || !(tau <= kPi) || !(tauPrime < tau))
        throw InvalidInput("need 0 <= tau' < tau <= pi");
    const double twoD = 2.0 * static_cast<double>(D);
    return std::cos(tau / twoD) / std::cos(tauPrime / twoD);
}

LowerBound lower_bound_th3(const ReducedFamily& F, double t) {
    require_principal(F, t);
    return {fstar(F, t) / (F.r1 + F.r2 + F.r3), std::cos(t / 2.0)};
}

std::vector<SweepRow> sweep(const ReducedFamily& F, std::size_t rows) {
    if (rows < 2) throw InvalidInput("sweep needs at least two rows");
    reduce(F, 0.0);
    const double D = static_cast<double>(F.D());
    std::vector<SweepRow> out(rows);
    detail::parallel_for(rows, [&](std::size_t i) {
        SweepRow& row = out[i];
        row.tau = i + 1 == rows ? kPi : kPi * static_cast<double>(i) / static_cast<double>(rows - 1);
        row.t = row.tau / D;
        row.fstar = fstar(F, row.t);
        row.fstarSquared = row.fstar * row.fstar;
        row.ratio = row.fstar / std::abs(F.r1 + F.r3 + std::polar(F.r2, row.t));
        row.bound = std::cos(row.tau / (2.0 * D));
    });
    return out;
}

}  // namespace trinomax
