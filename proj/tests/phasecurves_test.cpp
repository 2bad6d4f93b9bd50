#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "trinomax/error.hpp"
#include "trinomax/oracle.hpp"
#include "trinomax/phasecurves.hpp"

using namespace trinomax;

namespace {

ReducedFamily random_family(std::mt19937_64& rng, Frequency maxKL = 6) {
    Frequency k, l;
    do {
        k = support::uniform_int(rng, 1, maxKL);
        l = support::uniform_int(rng, 1, maxKL);
    } while (support::gcd(k, l) != 1);
    return {k, l, support::log_uniform(rng, 0.1, 10.0), support::log_uniform(rng, 0.1, 10.0),
            support::log_uniform(rng, 0.1, 10.0)};
}

Trinomial member(const ReducedFamily& F, double t) {
    return {{-F.k, 0, F.l}, {F.r1, F.r2, F.r3}, {0.0, t, 0.0}};
}

}  // namespace

TEST_CASE("fstar at t = 0 is the coefficient sum") {
    CHECK(fstar({1, 2, 0.3, 1.1, 2.0}, 0.0) == doctest::Approx(3.4));
}

TEST_CASE("fstar of e^{-ix} + 2i + e^{ix}") {
    CHECK(fstar({1, 1, 1.0, 2.0, 1.0}, kPi / 2) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("property: fstar is even and periodic in t") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        const auto F = random_family(rng);
        const double t = support::uniform(rng, -4.0, 4.0);
        const double D = double(F.D());
        const double a = fstar(F, t);
        CHECK(fstar(F, -t) == doctest::Approx(a).epsilon(1e-12));
        CHECK(fstar(F, t + kTwoPi / D) == doctest::Approx(a).epsilon(1e-12));
        CHECK(a == doctest::Approx(brute_max(member(F, t)).value).epsilon(1e-9));
    }
}

TEST_CASE("property: fstar strictly decreases on [0, pi/D]") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const auto F = random_family(rng);
        const auto rows = sweep(F, 64);
        const double scale = F.r1 * F.r2 * F.r3 * 1e-12;
        for (std::size_t j = 1; j < rows.size(); ++j) CHECK(rows[j].fstar - rows[j - 1].fstar < -scale);
    }
}

TEST_CASE("Chebotarev derivative is negative inside and matches finite differences") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
        const auto F = random_family(rng);
        const double tMax = kPi / double(F.D());
        const double t = support::uniform(rng, 0.05, 0.95) * tMax;
        const auto d = chebotarev_derivative(F, t);
        CHECK_FALSE(d.endpoint);
        CHECK(d.left == d.right);
        CHECK(d.right < 0.0);
        const double h = 1e-6;
        const double fd = (std::pow(fstar(F, t + h), 2) - std::pow(fstar(F, t - h), 2)) / (2 * h);
        CHECK(d.right == doctest::Approx(fd).epsilon(1e-5));
        CHECK(d.plain == doctest::Approx(d.right / (2 * fstar(F, t))));
    }
}

TEST_CASE("Chebotarev derivative near t = 0 for balanced moduli tends to 0 from below") {
    const ReducedFamily F{1, 2, 2.0, 1.0, 1.0};
    double previous = -1.0;
    for (double t : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double d = chebotarev_derivative(F, t).right;
        CHECK(d < 0.0);
        CHECK(std::abs(d) < std::abs(previous));
        previous = d;
    }
    CHECK(chebotarev_derivative(F, 0.0).right == 0.0);
}

TEST_CASE("Chebotarev derivative at the symmetric endpoint is one-sided") {
    const ReducedFamily F{1, 2, 0.5, 1.0, 1.5};
    const double t = kPi / 3;
    const auto d = chebotarev_derivative(F, t);
    CHECK(d.endpoint);
    CHECK(d.left < d.right);
    // Left difference of fstar² picks the smaller one-sided value.
    const double h = 1e-7;
    const double left = (std::pow(fstar(F, t), 2) - std::pow(fstar(F, t - h), 2)) / h;
    CHECK(d.left == doctest::Approx(left).epsilon(1e-5));
    CHECK_THROWS_AS(chebotarev_derivative(F, t + 0.1), InvalidInput);
}

TEST_CASE("ratio to the aligned value") {
    const ReducedFamily balanced{1, 2, 2.0, 1.0, 1.0};
    for (double t = 0.0; t <= kPi / 3; t += kPi / 30)
        CHECK(ratio_gstar(balanced, t) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ratio_gstar({1, 1, 1.0, 2.0, 1.0}, kPi / 2) == doctest::Approx(1.0).epsilon(1e-14));
    const ReducedFamily F{1, 2, 1.0, 1.0, 1.0};
    double previous = 0.0;
    for (int i = 0; i <= 32; ++i) {
        const double r = ratio_gstar(F, kPi / 3 * i / 32.0);
        CHECK(r >= 1.0);
        if (i > 0) CHECK(r > previous);
        previous = r;
    }
}

TEST_CASE("cos-ratio bound") {
    CHECK(bound_ratio_th4(kPi, 0.0, 2) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(fstar({1, 1, 1.0, 2.0, 1.0}, kPi / 2) == doctest::Approx(bound_ratio_th4(kPi, 0.0, 2) * 4.0));
    CHECK(bound_ratio_th4(1.0 + 1e-9, 1.0, 3) == doctest::Approx(1.0));
    CHECK_THROWS_AS(bound_ratio_th4(1.0, 1.0, 2), InvalidInput);
    CHECK_THROWS_AS(bound_ratio_th4(0.5, 1.0, 2), InvalidInput);
    CHECK_THROWS_AS(bound_ratio_th4(4.0, 1.0, 2), InvalidInput);
}

TEST_CASE("property: cos-ratio inequality, sharp exactly at l : k+l : k") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 300; ++i) {
        auto F = random_family(rng);
        const double D = double(F.D());
        double tau = support::uniform(rng, 0.0, kPi), tauPrime = support::uniform(rng, 0.0, kPi);
        if (tauPrime > tau) std::swap(tau, tauPrime);
        if (tau - tauPrime < 1e-3) continue;
        const double b = bound_ratio_th4(tau, tauPrime, F.D());
        const double lhs = fstar(F, tau / D);
        const double rhs = b * fstar(F, tauPrime / D);
        CHECK(lhs - rhs > 1e-9 * lhs);
        ReducedFamily W{F.k, F.l, double(F.l), D, double(F.k)};
        CHECK(fstar(W, tau / D) == doctest::Approx(b * fstar(W, tauPrime / D)).epsilon(1e-10));
    }
}

TEST_CASE("lower bound cos(t/2)") {
    const auto a = lower_bound_th3({1, 2, 1.0, 1.0, 1.0}, 0.0);
    CHECK(a.lhs == doctest::Approx(1.0));
    CHECK(a.bound == 1.0);
    for (double t : {0.1, 0.5, 1.0}) {
        const auto w = lower_bound_th3({1, 2, 2.0, 3.0, 1.0}, t);
        CHECK(w.lhs == doctest::Approx(w.bound).epsilon(1e-10));
    }
    const auto s = lower_bound_th3({1, 2, 1.0, 1.0, 1.0}, kPi / 6);
    CHECK(s.lhs > s.bound);
}

TEST_CASE("property: the shortcut chain fstar >= aligned >= cos(t/2) sum") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 500; ++i) {
        const auto F = random_family(rng);
        const double t = support::uniform(rng, 0.0, kPi / double(F.D()));
        const double sum = F.r1 + F.r2 + F.r3;
        const double aligned = std::abs(F.r1 + F.r3 + std::polar(F.r2, t));
        const auto lb = lower_bound_th3(F, t);
        CHECK(lb.lhs >= aligned / sum * (1 - 1e-14));
        CHECK(aligned / sum >= lb.bound * (1 - 1e-14));
    }
}

TEST_CASE("sweep rows") {
    const auto rows = sweep({1, 2, 1.0, 1.0, 1.0}, 5);
    REQUIRE(rows.size() == 5);
    CHECK(rows.front().tau == 0.0);
    CHECK(rows.back().tau == kPi);
    CHECK(rows.back().t == doctest::Approx(kPi / 3));
    for (const auto& r : rows) {
        CHECK(r.ratio >= 1.0);
        CHECK(r.fstarSquared == doctest::Approx(r.fstar * r.fstar));
        CHECK(r.bound == doctest::Approx(std::cos(r.tau / 6)));
    }
    CHECK_THROWS_AS(sweep({1, 2, 1.0, 1.0, 1.0}, 1), InvalidInput);
    CHECK_THROWS_AS(sweep({1, 2, -1.0, 1.0, 1.0}, 4), InvalidInput);
}
