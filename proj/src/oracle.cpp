#include "trinomax/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "trinomax/error.hpp"
#include "trinomax/maxmod.hpp"
#include "trinomax/parallel.hpp"

namespace trinomax {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

double squared(const Trinomial& T, double x, std::int64_t& evaluations) {
    ++evaluations;
    return std::norm(evaluate(T, x));
}

// d/dx |T|^2 = 2 Re(conj(T) T'), from the coefficients directly.
double slope(const Trinomial& T, double x) {
    std::complex<double> value{0.0, 0.0};
    std::complex<double> derivative{0.0, 0.0};
    for (int j = 0; j < 3; ++j) {
        const std::complex<double> term =
            std::polar(T.modulus[j], T.phase[j] + static_cast<double>(T.freq[j]) * x);
        value += term;
        derivative += std::complex<double>(0.0, static_cast<double>(T.freq[j])) * term;
    }
    return 2.0 * std::real(std::conj(value) * derivative);
}

struct Candidate {
    double x;
    double f;
};

// Golden-section maximisation of |T|^2 on [a, b], then bisection on the sign
// of the slope once the bracket is small.
Candidate refine(const Trinomial& T, double a, double b, double tol, std::int64_t& evaluations) {
    const double a0 = a, b0 = b;
    const double coarseTol = std::max(tol, 1e-9 * (b - a));
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = squared(T, c, evaluations);
    double fd = squared(T, d, evaluations);
    while (b - a > coarseTol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = squared(T, c, evaluations);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = squared(T, d, evaluations);
        }
    }
    double x = 0.5 * (a + b);
    // Golden section stalls where f is flat to rounding (|x - x*| ~ 1e-8);
    // the sign of f' is still informative there, so bisect on it.
    const auto polish = [&](double lo, double hi) {
        if (!(slope(T, lo) > 0.0 && slope(T, hi) < 0.0)) return false;
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (slope(T, mid) > 0.0 ? lo : hi) = mid;
        }
        const double polished = 0.5 * (lo + hi);
        const double fp = squared(T, polished, evaluations);
        const double fx = squared(T, x, evaluations);
        // Near the peak f is only good to a few ulps of cancellation noise;
        // the slope sign is the better witness, so only a clear loss rejects.
        if (fp >= fx * (1.0 - 1e-12)) x = polished;
        return true;
    };
    if (!polish(a0, b0))
        for (double w = 1e-9 * (b0 - a0); w < b0 - a0; w *= 4.0)
            if (polish(x - w, x + w)) break;
    return {x, squared(T, x, evaluations)};
}

Frequency diameter(const Spectrum& freq) {
    const auto [lo, hi] = std::minmax_element(freq.begin(), freq.end());
    return *hi - *lo;
}

// Table of e^{iλ_j x} on a uniform grid of one period, for the coarse scans.
class BasisTable {
public:
    BasisTable(const Spectrum& freq, double period, int samples) : samples_(samples) {
        table_.resize(static_cast<std::size_t>(3 * samples));
        for (int i = 0; i < samples; ++i) {
            const double x = period * i / samples;
            for (int j = 0; j < 3; ++j)
                table_[static_cast<std::size_t>(3 * i + j)] =
                    std::polar(1.0, static_cast<double>(freq[j]) * x);
        }
    }

    double grid_max(const std::array<std::complex<double>, 3>& coeff) const {
        double best = 0.0;
        for (int i = 0; i < samples_; ++i) {
            const auto* e = &table_[static_cast<std::size_t>(3 * i)];
            best = std::max(best, std::norm(coeff[0] * e[0] + coeff[1] * e[1] + coeff[2] * e[2]));
        }
        return std::sqrt(best);
    }

private:
    int samples_;
    std::vector<std::complex<double>> table_;
};

// Search point: moduli (ra, rb, rc) on the simplex in sorted-frequency order
// and the phase of the middle coefficient.
struct SearchPoint {
    double ra, rc, u;
    double score;
};

Trinomial assemble(const Spectrum& freq, const std::array<int, 3>& order, double ra, double rc,
                   double u, const std::array<double, 3>& extraPhase) {
    Trinomial T;
    T.freq = freq;
    T.modulus[order[0]] = ra;
    T.modulus[order[1]] = 1.0 - ra - rc;
    T.modulus[order[2]] = rc;
    T.phase = extraPhase;
    T.phase[order[1]] += u;
    return T;
}

// Minimises `objective` over (ra, rc, u): coarse scan, then coordinate descent
// by golden section from the best few grid points.
template <typename Coarse, typename Fine>
SearchPoint minimise_over_simplex(const ConstantSearchOptions& opt, Coarse&& coarse, Fine&& fine) {
    const int N = opt.simplexN;
    const int G = opt.gridPhases;
    if (N < 3 || G < 4) throw InvalidInput("constant search: grid too small");

    // Coarse scan, one simplex row per task.
    std::vector<std::vector<SearchPoint>> rows(static_cast<std::size_t>(N));
    detail::parallel_for(static_cast<std::size_t>(N - 2), [&](std::size_t row) {
        const int i = static_cast<int>(row) + 1;
        auto& out = rows[row];
        for (int j = 1; i + j < N; ++j) {
            const double ra = static_cast<double>(i) / N;
            const double rc = static_cast<double>(j) / N;
            for (int p = 0; p < G; ++p) {
                const double u = kTwoPi * p / G;
                out.push_back({ra, rc, u, coarse(ra, rc, u)});
            }
        }
    });
    std::vector<SearchPoint> all;
    for (auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    const auto byScore = [](const SearchPoint& a, const SearchPoint& b) {
        if (a.score != b.score) return a.score < b.score;
        if (a.ra != b.ra) return a.ra < b.ra;
        if (a.rc != b.rc) return a.rc < b.rc;
        return a.u < b.u;
    };
    const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(opt.candidates), all.size());
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(), byScore);
    all.resize(keep);

    std::vector<SearchPoint> refined(keep);
    detail::parallel_for(keep, [&](std::size_t c) {
        SearchPoint p = all[c];
        p.score = fine(p.ra, p.rc, p.u);
        double stepR = 1.0 / N;
        double stepU = kTwoPi / G;
        const double floorR = 1e-9;
        for (int sweep = 0; sweep < opt.sweeps; ++sweep) {
            for (int coord = 0; coord < 3; ++coord) {
                double lo, hi;
                if (coord == 0) {
                    lo = std::max(floorR, p.ra - stepR);
                    hi = std::min(1.0 - p.rc - floorR, p.ra + stepR);
                } else if (coord == 1) {
                    lo = std::max(floorR, p.rc - stepR);
                    hi = std::min(1.0 - p.ra - floorR, p.rc + stepR);
                } else {
                    lo = p.u - stepU;
                    hi = p.u + stepU;
                }
                const auto at = [&](double value) {
                    SearchPoint q = p;
                    (coord == 0 ? q.ra : coord == 1 ? q.rc : q.u) = value;
                    return fine(q.ra, q.rc, q.u);
                };
                double a = lo, b = hi;
                double c1 = b - kInvPhi * (b - a), d1 = a + kInvPhi * (b - a);
                double fc = at(c1), fd = at(d1);
                for (int it = 0; it < 24; ++it) {
                    if (fc <= fd) {
                        b = d1;
                        d1 = c1;
                        fd = fc;
                        c1 = b - kInvPhi * (b - a);
                        fc = at(c1);
                    } else {
                        a = c1;
                        c1 = d1;
                        fc = fd;
                        d1 = a + kInvPhi * (b - a);
                        fd = at(d1);
                    }
                }
                const double best = fc <= fd ? c1 : d1;
                const double bestScore = std::min(fc, fd);
                if (bestScore < p.score) {
                    (coord == 0 ? p.ra : coord == 1 ? p.rc : p.u) = best;
                    p.score = bestScore;
                }
            }
            stepR *= 0.6;
            stepU *= 0.6;
        }
        refined[c] = p;
    });
    return *std::min_element(refined.begin(), refined.end(), byScore);
}

}  // namespace

OracleReport brute_max(const Trinomial& T, const OracleOptions& opt) {
    T.validate();
    if (opt.gridN < 1024) throw InvalidInput("brute_max: grid must have at least 1024 points");
    const SpectrumStats stats = derive_spectrum_stats(T);
    OracleReport report;
    report.period = kTwoPi / static_cast<double>(stats.d);
    report.gridSize = opt.gridN;
    report.refineTol = opt.refineTol;
    const double P = report.period;
    const int N = opt.gridN;
    const double h = P / N;

    std::vector<double> f(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) f[static_cast<std::size_t>(i)] = squared(T, h * i, report.evaluations);
    const double gridMax = *std::max_element(f.begin(), f.end());

    // A sample within h/2 of the true maximum is below it by at most
    // (1/2) max|f''| (h/2)^2 <= (1/8) n^2 h^2 (r1+r2+r3)^2 (Bernstein, degree n
    // = diameter of the spectrum); every grid local maximum inside that band
    // is refined.
    const double sumR = T.modulus[0] + T.modulus[1] + T.modulus[2];
    const double n = static_cast<double>(diameter(T.freq));
    const double band = std::max(0.125 * n * n * h * h * sumR * sumR, 2e-7 * gridMax);

    std::vector<Candidate> refined;
    for (int i = 0; i < N; ++i) {
        const double fi = f[static_cast<std::size_t>(i)];
        const double left = f[static_cast<std::size_t>((i + N - 1) % N)];
        const double right = f[static_cast<std::size_t>((i + 1) % N)];
        if (fi < gridMax - band || fi < left || fi < right) continue;
        Candidate c = refine(T, h * (i - 1), h * (i + 1), opt.refineTol * P, report.evaluations);
        c.x = wrap_period(c.x, P);
        if (P - c.x <= opt.refineTol * P) c.x = 0.0;
        refined.push_back(c);
    }

    // Cluster modulo the period, keeping the best representative.
    std::sort(refined.begin(), refined.end(), [](const Candidate& a, const Candidate& b) { return a.x < b.x; });
    const double radius = opt.clusterFraction * P;
    std::vector<Candidate> clusters;
    for (const Candidate& c : refined) {
        if (!clusters.empty() && c.x - clusters.back().x <= radius) {
            if (c.f > clusters.back().f) clusters.back() = c;
        } else {
            clusters.push_back(c);
        }
    }
    if (clusters.size() > 1 && clusters.front().x + P - clusters.back().x <= radius) {
        if (clusters.back().f > clusters.front().f) clusters.front() = clusters.back();
        clusters.pop_back();
    }

    double best = 0.0;
    for (const Candidate& c : clusters) best = std::max(best, c.f);
    for (const Candidate& c : clusters)
        if (c.f >= best * (1.0 - 2.0 * opt.tieRelative)) report.argmaxes.push_back(c.x);
    std::sort(report.argmaxes.begin(), report.argmaxes.end());
    report.value = std::sqrt(best);
    return report;
}

OracleReport brute_max(const Trinomial& T, int gridN, double tol) {
    OracleOptions opt;
    opt.gridN = gridN;
    opt.refineTol = tol;
    return brute_max(T, opt);
}

double brute_sidon(const Spectrum& freq, const ConstantSearchOptions& opt) {
    const SpectrumStats s = derive_spectrum_stats(freq, {0.0, 0.0, 0.0});
    const double period = kTwoPi / static_cast<double>(s.d);
    const BasisTable table(freq, period, 32 * static_cast<int>(s.D));
    const std::array<double, 3> zero{0.0, 0.0, 0.0};

    const auto coarse = [&](double ra, double rc, double u) {
        std::array<std::complex<double>, 3> coeff{};
        coeff[static_cast<std::size_t>(s.order[0])] = ra;
        coeff[static_cast<std::size_t>(s.order[1])] = std::polar(1.0 - ra - rc, u);
        coeff[static_cast<std::size_t>(s.order[2])] = rc;
        return table.grid_max(coeff);
    };
    const auto fine = [&](double ra, double rc, double u) {
        return brute_max(assemble(freq, s.order, ra, rc, u, zero), opt.refineGridN, 1e-12).value;
    };
    const SearchPoint best = minimise_over_simplex(opt, coarse, fine);
    return 1.0 / best.score;
}

double brute_sidon(const Spectrum& freq, int gridPhases, int simplexN) {
    ConstantSearchOptions opt;
    opt.gridPhases = gridPhases;
    opt.simplexN = simplexN;
    return brute_sidon(freq, opt);
}

double brute_multiplier_norm(const Spectrum& freq, const Multiplier& M,
                             const ConstantSearchOptions& opt) {
    const SpectrumStats s = derive_spectrum_stats(freq, M.phase);
    const double period = kTwoPi / static_cast<double>(s.d);
    const BasisTable table(freq, period, 32 * static_cast<int>(s.D));
    const std::array<double, 3> zero{0.0, 0.0, 0.0};

    const auto coefficients = [&](double ra, double rc, double u, const std::array<double, 3>& shift) {
        std::array<std::complex<double>, 3> coeff{};
        coeff[static_cast<std::size_t>(s.order[0])] = std::polar(ra, shift[static_cast<std::size_t>(s.order[0])]);
        coeff[static_cast<std::size_t>(s.order[1])] =
            std::polar(1.0 - ra - rc, u + shift[static_cast<std::size_t>(s.order[1])]);
        coeff[static_cast<std::size_t>(s.order[2])] = std::polar(rc, shift[static_cast<std::size_t>(s.order[2])]);
        return coeff;
    };
    // Minimise the reciprocal ratio.
    const auto coarse = [&](double ra, double rc, double u) {
        return table.grid_max(coefficients(ra, rc, u, zero)) /
               table.grid_max(coefficients(ra, rc, u, M.phase));
    };
    const auto fine = [&](double ra, double rc, double u) {
        const double base = brute_max(assemble(freq, s.order, ra, rc, u, zero), opt.refineGridN, 1e-12).value;
        const double image =
            brute_max(assemble(freq, s.order, ra, rc, u, M.phase), opt.refineGridN, 1e-12).value;
        return base / image;
    };
    const SearchPoint best = minimise_over_simplex(opt, coarse, fine);
    return 1.0 / best.score;
}

Trinomial random_trinomial(std::mt19937_64& rng, Frequency maxAbsFrequency) {
    std::uniform_int_distribution<Frequency> freqDist(-maxAbsFrequency, maxAbsFrequency);
    std::uniform_real_distribution<double> logModulus(-2.0, 2.0);
    std::uniform_real_distribution<double> phaseDist(-kPi, kPi);
    Trinomial T;
    do {
        for (auto& f : T.freq) f = freqDist(rng);
    } while (T.freq[0] == T.freq[1] || T.freq[1] == T.freq[2] || T.freq[0] == T.freq[2]);
    for (auto& r : T.modulus) r = std::pow(10.0, logModulus(rng));
    for (auto& t : T.phase) t = wrap_angle(phaseDist(rng));
    return T;
}

std::mt19937_64 InstanceGenerator::stream(std::uint64_t index) const {
    // splitmix64 of (seed, index) so each instance has its own stream.
    std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return std::mt19937_64(z);
}

Trinomial InstanceGenerator::instance(std::uint64_t index) const {
    auto rng = stream(index);
    return random_trinomial(rng);
}

}  // namespace trinomax
