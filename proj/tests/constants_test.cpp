#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "trinomax/constants.hpp"
#include "trinomax/error.hpp"
#include "trinomax/maxmod.hpp"
#include "trinomax/oracle.hpp"

using namespace trinomax;

TEST_CASE("multiplier norm examples") {
    CHECK(multiplier_norm({-1, 0, 1}, {{0.0, kPi / 2, 0.0}}).norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(multiplier_norm({-1, 0, 1}, {{0.4, 0.4, 0.4}}).norm == doctest::Approx(1.0).epsilon(1e-15));
    const auto opp = opposition_signs({-1, 0, 2});
    Multiplier M;
    for (int j = 0; j < 3; ++j) M.phase[j] = opp[j] < 0 ? kPi : 0.0;
    CHECK(multiplier_norm({-1, 0, 2}, M).norm == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("property: multiplier norm is at least one, and one exactly on isometries") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 500; ++i) {
        const auto f = support::random_spectrum(rng);
        Multiplier M;
        for (auto& u : M.phase) u = support::uniform(rng, -kPi, kPi);
        const auto n = multiplier_norm(f, M);
        CHECK(n.norm >= 1.0);
        CHECK(n.norm <= sidon_constant(f) * (1 + 1e-15));
        CHECK_FALSE(is_isometry(f, M));
        // Witness attainment.
        CHECK(n.imageValue / n.witness.value == doctest::Approx(n.norm).epsilon(1e-9));
    }
    for (int i = 0; i < 100; ++i) {
        const auto f = support::random_spectrum(rng);
        const double a = support::uniform(rng, -kPi, kPi), v = support::uniform(rng, -kPi, kPi);
        Multiplier M;
        for (int j = 0; j < 3; ++j) M.phase[j] = a - double(f[j]) * v;
        CHECK(multiplier_norm(f, M).norm == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("Sidon constant examples") {
    CHECK(sidon_constant({-1, 0, 1}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    for (Frequency k = 1; k < 6; ++k)
        for (Frequency l = 1; l < 6; ++l)
            if (support::gcd(k, l) == 1)
                CHECK(sidon_constant({-k, 0, l}) == doctest::Approx(1.0 / std::cos(kPi / (2.0 * double(k + l)))));
    CHECK(sidon_constant({-2, 0, 2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("property: Sidon witness has the extremal shape and attains the constant") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 200; ++i) {
        const auto f = support::random_spectrum(rng, 20);
        Witness w;
        const double c = sidon_constant(f, &w);
        const auto s = derive_spectrum_stats(f, w.phase);
        CHECK(s.tau == kPi);
        const int a = s.order[0], b = s.order[1], cc = s.order[2];
        CHECK(w.modulus[a] * double(f[b] - f[a]) == doctest::Approx(w.modulus[cc] * double(f[cc] - f[b])));
        CHECK(w.modulus[b] == doctest::Approx(w.modulus[a] + w.modulus[cc]));
        CHECK(c * w.value == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("Sidon constant times the minimal maximum is the coefficient sum at the witness moduli") {
    // Minimum over the middle phase of max|T| by scanning and refining, moduli l : k+l : k.
    for (Spectrum f : {Spectrum{-1, 0, 1}, Spectrum{-1, 0, 2}, Spectrum{0, 1, 4}}) {
        Witness w;
        const double c = sidon_constant(f, &w);
        const auto s = derive_spectrum_stats(f, {0.0, 0.0, 0.0});
        double best = 1e9, bestU = 0.0;
        Trinomial T{f, w.modulus, {0.0, 0.0, 0.0}};
        for (int i = 0; i < 720; ++i) {
            T.phase[s.order[1]] = kTwoPi * i / 720.0;
            const double v = max_points_global(T).result.value();
            if (v < best) best = v, bestU = T.phase[s.order[1]];
        }
        double lo = bestU - kTwoPi / 720, hi = bestU + kTwoPi / 720;
        for (int it = 0; it < 100; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            T.phase[s.order[1]] = m1;
            const double v1 = max_points_global(T).result.value();
            T.phase[s.order[1]] = m2;
            const double v2 = max_points_global(T).result.value();
            (v1 < v2 ? hi : lo) = v1 < v2 ? m2 : m1;
        }
        T.phase[s.order[1]] = 0.5 * (lo + hi);
        CHECK(c * max_points_global(T).result.value() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("measure lift examples") {
    const auto a = lift_to_measure(1, 2, 0.0);
    CHECK(std::abs(a.atom0 - 1.0) < 1e-15);
    CHECK(std::abs(a.atom1) < 1e-15);
    const auto b = lift_to_measure(1, 1, kPi / 2);
    CHECK(std::abs(b.atom0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(b.atom1) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(b.total_variation() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    const auto c = lift_to_measure(2, 1, kPi / 3);
    CHECK(c.total_variation() ==
          doctest::Approx(multiplier_norm({-2, 0, 1}, {{0.0, kPi / 3, 0.0}}).norm).epsilon(1e-12));
    CHECK_THROWS_AS(lift_to_measure(1, 1, 2.0), InvalidInput);
    CHECK_THROWS_AS(lift_to_measure(2, 2, 0.1), InvalidInput);
}

TEST_CASE("property: the lifted measure has the multiplier as Fourier transform") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 300; ++i) {
        Frequency k, l;
        do {
            k = support::uniform_int(rng, 1, 9);
            l = support::uniform_int(rng, 1, 9);
        } while (support::gcd(k, l) != 1);
        const double D = double(k + l);
        const double t = support::uniform(rng, 0.0, kPi / D);
        const auto mu = lift_to_measure(k, l, t);
        const auto hat = [&](Frequency n) { return mu.atom0 + mu.atom1 * std::polar(1.0, -double(n) * mu.point1); };
        CHECK(std::abs(hat(-k) - 1.0) < 1e-12);
        CHECK(std::abs(hat(l) - 1.0) < 1e-12);
        CHECK(std::abs(hat(0) - std::polar(1.0, t)) < 1e-12);
        CHECK(mu.total_variation() ==
              doctest::Approx(multiplier_norm({-k, 0, l}, {{0.0, t, 0.0}}).norm).epsilon(1e-12));
    }
}

TEST_CASE("unconditional constants") {
    const auto a = unconditional_constants({-1, 0, 1});
    CHECK(a.realConstant == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(a.complexConstant == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    const auto find = [&](std::array<int, 3> signs) {
        return std::find_if(a.patterns.begin(), a.patterns.end(), [&](const SignPattern& p) { return p.signs == signs; });
    };
    // (+,-,+) is the translation by π, (+,+,-) is not an isometry.
    REQUIRE(find({1, -1, 1}) != a.patterns.end());
    CHECK(find({1, -1, 1})->isometric);
    REQUIRE(find({1, 1, -1}) != a.patterns.end());
    CHECK_FALSE(find({1, 1, -1})->isometric);
    const auto b = unconditional_constants({0, 1, 3});
    CHECK(b.realConstant == doctest::Approx(1.0 / std::cos(kPi / 6)).epsilon(1e-15));
    CHECK(b.complexConstant == doctest::Approx(b.realConstant).epsilon(1e-15));
}

TEST_CASE("property: four sign patterns are isometries, the rest reach the Sidon constant") {
    std::mt19937_64 rng(54);
    for (int i = 0; i < 200; ++i) {
        const auto f = support::random_spectrum(rng, 30);
        const auto u = unconditional_constants(f);
        REQUIRE(u.patterns.size() == 8);
        int iso = 0;
        for (const auto& p : u.patterns) {
            if (p.isometric) {
                ++iso;
                CHECK(p.norm == doctest::Approx(1.0).epsilon(1e-12));
            } else {
                CHECK(p.norm == doctest::Approx(u.complexConstant).epsilon(1e-12));
            }
        }
        CHECK(iso == 4);
        CHECK(u.realConstant == doctest::Approx(u.complexConstant).epsilon(1e-12));
    }
}

TEST_CASE("geometric progression bounds") {
    const auto b = geometric_progression_bounds(3);
    CHECK(b.lower1 == doctest::Approx(1.0 + kPi * kPi / 128.0));
    CHECK(b.lower2 == doctest::Approx(1.0 / std::cos(kPi / 8.0)));
    CHECK(b.upper == doctest::Approx(1.0 + kPi * kPi / (16.0 - kPi * kPi)));
    CHECK(b.lower2 == doctest::Approx(1.08239).epsilon(1e-5));
    CHECK(b.lower1 == doctest::Approx(1.07712).epsilon(1e-5));
    CHECK(b.lower1 <= b.lower2);
    CHECK(b.lower2 <= b.upper);
    CHECK(sidon_constant({1, 3, 9}) == doctest::Approx(b.lower2).epsilon(1e-15));
    for (Frequency q = 3; q < 40; ++q) {
        const auto g = geometric_progression_bounds(q);
        CHECK(g.lower1 <= g.lower2);
        CHECK(sidon_constant({1, q, q * q}) == doctest::Approx(g.lower2).epsilon(1e-14));
    }
    CHECK_THROWS_AS(geometric_progression_bounds(2), InvalidInput);
}

TEST_CASE("Sidon constant of {1,3,9} against the phase-search oracle") {
    CHECK(brute_sidon({1, 3, 9}, 128, 24) == doctest::Approx(1.0 / std::cos(kPi / 8)).epsilon(1e-3));
}
