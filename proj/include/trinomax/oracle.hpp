#pragma once

// Brute-force verifier.  Everything here is computed from `evaluate` and the
// period 2π/d alone; nothing goes through the reduced form or the bisection
// of the analytic path.

#include <cstdint>
#include <random>
#include <vector>

#include "trinomax/spectrum.hpp"

namespace trinomax {

struct OracleReport {
    double value = 0.0;             ///< max |T|
    std::vector<double> argmaxes;   ///< sorted, in [0, period)
    double period = kTwoPi;
    int gridSize = 0;
    double refineTol = 0.0;
    std::int64_t evaluations = 0;
};

struct OracleOptions {
    int gridN = 4096;
    /// Width of the final refinement bracket, relative to the period.
    double refineTol = 1e-12;
    /// Refined maxima within this relative distance of the best (on |T|^2/2)
    /// count as global maximum points.
    double tieRelative = 1e-11;
    /// Refined points closer than clusterFraction · period are one point.
    double clusterFraction = 1e-4;
};

OracleReport brute_max(const Trinomial& T, const OracleOptions& options = {});
OracleReport brute_max(const Trinomial& T, int gridN, double tol);

struct ConstantSearchOptions {
    int simplexN = 40;     ///< moduli grid: (i, N-i-j, j)/N with i, j >= 1
    int gridPhases = 256;  ///< phase grid for the middle coefficient
    int candidates = 6;    ///< coarse optima handed to coordinate descent
    int sweeps = 28;       ///< coordinate-descent sweeps (step halves each sweep)
    int refineGridN = 1024;
};

/// Empirical Sidon constant: 1 / min (max|T| / (r1 + r2 + r3)) over the
/// moduli simplex and the middle phase (outer phases fixed at 0, which loses
/// nothing because isometries preserve max|T|).
double brute_sidon(const Spectrum& freq, const ConstantSearchOptions& options = {});
double brute_sidon(const Spectrum& freq, int gridPhases, int simplexN);

/// sup max|MT| / max|T| over the same search space.
double brute_multiplier_norm(const Spectrum& freq, const Multiplier& M,
                             const ConstantSearchOptions& options = {.simplexN = 16,
                                                                     .gridPhases = 64,
                                                                     .candidates = 4,
                                                                     .sweeps = 28,
                                                                     .refineGridN = 1024});

/// Frequencies uniform in [-12, 12] pairwise distinct, moduli log-uniform in
/// [1e-2, 1e2], phases uniform in (-π, π].
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    /// The index-th instance; independent of how many others were drawn.
    Trinomial instance(std::uint64_t index) const;
    /// A generator for instance `index`, for callers drawing extra values.
    std::mt19937_64 stream(std::uint64_t index) const;

private:
    std::uint64_t seed_;
};

Trinomial random_trinomial(std::mt19937_64& rng, Frequency maxAbsFrequency = 12);

}  // namespace trinomax
