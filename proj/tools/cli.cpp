#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "trinomax/constants.hpp"
#include "trinomax/error.hpp"
#include "trinomax/geometry.hpp"
#include "trinomax/maxmod.hpp"
#include "trinomax/oracle.hpp"
#include "trinomax/parallel.hpp"
#include "trinomax/phasecurves.hpp"

#ifndef TRINOMAX_VERSION
#define TRINOMAX_VERSION "0.0.0"
#endif

namespace trinomax::cli {

using nlohmann::json;

namespace {

constexpr double kOracleConstantTolerance = 1e-3;

struct Args {
    std::vector<Frequency> freq;
    std::vector<double> modulus;
    std::vector<double> phase;
    bool json = false;
    bool csv = false;
    bool verify = false;
    bool degrees = false;
    int grid = 4096;
    std::uint64_t seed = 42;
    std::size_t count = 0;
    double tauTol = kCliTauPiTolerance;
};

struct Style {
    bool color = false;
    std::string pass() const { return color ? "\x1b[32mPASS\x1b[0m" : "PASS"; }
    std::string fail() const { return color ? "\x1b[31mFAIL\x1b[0m" : "FAIL"; }
};

std::string num(double x, int digits = 9) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

std::string csv_num(double x) { return num(x, 17); }

json complex_json(std::complex<double> z) {
    return {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}, {"arg", std::arg(z)}};
}

std::array<double, 3> phases_in_radians(const Args& a) {
    std::array<double, 3> out{};
    for (std::size_t j = 0; j < 3; ++j) out[j] = a.degrees ? a.phase[j] * kPi / 180.0 : a.phase[j];
    return out;
}

Spectrum spectrum_of(const Args& a) {
    if (a.freq.size() != 3) throw InvalidInput("-l needs three frequencies");
    return {a.freq[0], a.freq[1], a.freq[2]};
}

Trinomial trinomial_of(const Args& a) {
    if (a.modulus.size() != 3) throw InvalidInput("-r needs three moduli");
    if (a.phase.size() != 3) throw InvalidInput("-p needs three phases");
    Trinomial T;
    T.freq = spectrum_of(a);
    std::copy(a.modulus.begin(), a.modulus.end(), T.modulus.begin());
    T.phase = phases_in_radians(a);
    T.validate();
    return T;
}

json trinomial_input(const Trinomial& T) {
    return {{"freq", T.freq}, {"modulus", T.modulus}, {"phase", T.phase}};
}

json witness_json(const Witness& w) {
    return {{"freq", w.freq}, {"modulus", w.modulus}, {"phase", w.phase}, {"value", w.value}};
}

bool same_point_sets(const std::vector<double>& a, const std::vector<double>& b, double period,
                     double tol) {
    if (a.size() != b.size()) return false;
    for (double x : a) {
        const bool found = std::any_of(b.begin(), b.end(), [&](double y) {
            return std::abs(circular_difference(x, y, period)) <= tol;
        });
        if (!found) return false;
    }
    return true;
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- analyze

int cmd_analyze(const Args& a, std::ostream& out, const Style& style) {
    const Trinomial T = trinomial_of(a);
    AnalyzeOptions opt;
    opt.verify = a.verify;
    opt.grid = a.grid;
    opt.tauPiTolerance = a.tauTol;
    const json results = analyze_results(T, opt);
    json input = trinomial_input(T);
    input["tauTolerance"] = a.tauTol;
    if (a.verify) input["grid"] = a.grid;
    const bool failed = a.verify && !results["oracle"]["agrees"].get<bool>();

    if (a.json) {
        write_json(out, envelope("analyze", input, results));
    } else if (a.csv) {
        out << "x,value\n";
        for (const auto& p : results["maximum"]["points"])
            out << csv_num(p["x"]) << ',' << csv_num(p["value"]) << '\n';
    } else {
        const json& s = results["stats"];
        const json& r = results["reduced"];
        const json& m = results["maximum"];
        out << "spectrum     d=" << s["d"] << " k=" << s["k"] << " l=" << s["l"] << " m=" << s["m"]
            << " D=" << s["D"] << '\n';
        out << "tau          " << num(s["tau"]) << (s["symmetric"].get<bool>() ? " (= pi)" : "")
            << '\n';
        out << "reduced      k=" << r["k"] << " l=" << r["l"] << " r=(" << num(r["r1"]) << ", "
            << num(r["r2"]) << ", " << num(r["r3"]) << ") t=" << num(r["t"]) << '\n';
        out << "maximum      " << num(m["value"]) << "  (squared " << num(m["valueSquared"])
            << ")  multiplicity " << m["multiplicity"] << "  "
            << m["classification"].get<std::string>() << '\n';
        for (const auto& p : m["points"])
            out << "  x = " << std::setw(14) << std::left << num(p["x"]) << "|T| = " << num(p["value"])
                << '\n';
        if (!m["axis"].is_null()) out << "axis         s = " << num(m["axis"]) << '\n';
        out << "period       " << num(m["period"]) << '\n';
        out << "interval     [" << num(results["interval"]["lo"]) << ", "
            << num(results["interval"]["hi"]) << "]  "
            << (results["interval"]["containsMaximum"].get<bool>() ? "contains a maximum point"
                                                                   : "MISSES the maximum")
            << '\n';
        if (a.verify) {
            const json& o = results["oracle"];
            out << "oracle       " << num(o["value"]) << "  " << o["argmaxes"].size()
                << " point(s)  " << (failed ? style.fail() : style.pass()) << '\n';
        }
    }
    return failed ? kExitVerifyFailed : kExitOk;
}

// ---------------------------------------------------------------- sidon

int cmd_sidon(const Args& a, std::ostream& out, const Style& style) {
    const Spectrum freq = spectrum_of(a);
    Witness w;
    const double c = sidon_constant(freq, &w);
    const SpectrumStats s = derive_spectrum_stats(freq, {0.0, 0.0, 0.0});
    json results = {{"constant", c}, {"d", s.d}, {"D", s.D}, {"witness", witness_json(w)}};
    bool failed = false;
    if (a.verify) {
        const double brute = brute_sidon(freq);
        failed = !(std::abs(brute - c) <= kOracleConstantTolerance);
        results["oracle"] = {{"value", brute}, {"agrees", !failed}, {"tolerance", kOracleConstantTolerance}};
    }
    if (a.json) {
        write_json(out, envelope("sidon", {{"freq", freq}}, results));
    } else {
        out << "sidon constant  " << num(c) << "   (sec(pi/2D), D=" << s.D << ")\n";
        out << "witness         moduli (" << num(w.modulus[0]) << ", " << num(w.modulus[1]) << ", "
            << num(w.modulus[2]) << ") phases (" << num(w.phase[0]) << ", " << num(w.phase[1])
            << ", " << num(w.phase[2]) << ") max " << num(w.value) << '\n';
        if (a.verify)
            out << "oracle          " << num(results["oracle"]["value"]) << "  "
                << (failed ? style.fail() : style.pass()) << '\n';
    }
    return failed ? kExitVerifyFailed : kExitOk;
}

// ---------------------------------------------------------------- multiplier

int cmd_multiplier(const Args& a, std::ostream& out, const Style& style) {
    const Spectrum freq = spectrum_of(a);
    if (a.phase.size() != 3) throw InvalidInput("-p needs three phases");
    Multiplier M;
    M.phase = phases_in_radians(a);
    const MultiplierNorm mn = multiplier_norm(freq, M, a.tauTol);
    const SpectrumStats s = derive_spectrum_stats(freq, M.phase, a.tauTol);
    const MeasureLift mu = lift_to_measure(s.k, s.l, s.tau / static_cast<double>(s.D));
    const auto iso = is_isometry(freq, M);

    json results = {{"norm", mn.norm},
                    {"tau", mn.tau},
                    {"witness", witness_json(mn.witness)},
                    {"imageValue", mn.imageValue},
                    {"isometry", iso ? json{{"alpha", iso->alpha}, {"v", iso->v}} : json(nullptr)},
                    {"lift",
                     {{"k", s.k},
                      {"l", s.l},
                      {"t", s.tau / static_cast<double>(s.D)},
                      {"atom0", complex_json(mu.atom0)},
                      {"atom1", complex_json(mu.atom1)},
                      {"point1", mu.point1},
                      {"totalVariation", mu.total_variation()}}}};
    bool failed = false;
    if (a.verify) {
        const double brute = brute_multiplier_norm(freq, M);
        failed = !(std::abs(brute - mn.norm) <= kOracleConstantTolerance);
        results["oracle"] = {{"value", brute}, {"agrees", !failed}, {"tolerance", kOracleConstantTolerance}};
    }
    if (a.json) {
        write_json(out, envelope("multiplier", {{"freq", freq}, {"phase", M.phase}, {"tauTolerance", a.tauTol}},
                                 results));
    } else {
        out << "norm            " << num(mn.norm) << "   (tau " << num(mn.tau) << ")\n";
        out << "isometry        " << (iso ? "yes" : "no") << '\n';
        out << "witness ratio   " << num(mn.imageValue / mn.witness.value) << '\n';
        out << "measure lift    " << num(std::abs(mu.atom0)) << " at 0, " << num(std::abs(mu.atom1))
            << " at " << num(mu.point1) << "  (total " << num(mu.total_variation()) << ")\n";
        if (a.verify)
            out << "oracle          " << num(results["oracle"]["value"]) << "  "
                << (failed ? style.fail() : style.pass()) << '\n';
    }
    return failed ? kExitVerifyFailed : kExitOk;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const Args& a, std::ostream& out) {
    const Spectrum freq = spectrum_of(a);
    if (a.modulus.size() != 3) throw InvalidInput("-r needs three moduli");
    const SpectrumStats s = derive_spectrum_stats(freq, {0.0, 0.0, 0.0});
    ReducedFamily F{s.k, s.l, a.modulus[static_cast<std::size_t>(s.order[0])],
                    a.modulus[static_cast<std::size_t>(s.order[1])],
                    a.modulus[static_cast<std::size_t>(s.order[2])]};
    const std::size_t n = a.count == 0 ? 64 : a.count;
    const auto rows = sweep(F, n);
    bool monotone = true;
    for (std::size_t i = 1; i < rows.size(); ++i) monotone = monotone && rows[i].fstar < rows[i - 1].fstar;

    if (a.json) {
        json body = json::array();
        for (const SweepRow& r : rows)
            body.push_back({{"tau", r.tau}, {"t", r.t}, {"fstar", r.fstar}, {"fstarSquared", r.fstarSquared},
                            {"ratio", r.ratio}, {"bound", r.bound}});
        json results = {{"family", {{"k", F.k}, {"l", F.l}, {"r1", F.r1}, {"r2", F.r2}, {"r3", F.r3}}},
                        {"rows", body},
                        {"strictlyDecreasing", monotone}};
        write_json(out, envelope("sweep", {{"freq", freq}, {"modulus", a.modulus}, {"count", n}}, results));
    } else {
        out << "tau,t,fstar,fstar_squared,ratio,bound\n";
        for (const SweepRow& r : rows)
            out << csv_num(r.tau) << ',' << csv_num(r.t) << ',' << csv_num(r.fstar) << ','
                << csv_num(r.fstarSquared) << ',' << csv_num(r.ratio) << ',' << csv_num(r.bound) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- hypotrochoid

int cmd_hypotrochoid(const Args& a, std::ostream& out) {
    const Trinomial T = trinomial_of(a);
    const int n = a.count == 0 ? 512 : static_cast<int>(a.count);
    const Curve curve = hypotrochoid_sample(T, n);
    const int b = derive_spectrum_stats(T).order[1];
    const std::complex<double> center = -std::polar(T.modulus[b], T.phase[b]);
    const auto far = farthest_points(T, center);

    if (a.json) {
        json samples = json::array();
        for (const CurvePoint& p : curve.samples)
            samples.push_back({{"x", p.x}, {"re", p.z.real()}, {"im", p.z.imag()}});
        json farthest = json::array();
        for (const FarthestPoint& f : far) farthest.push_back({{"x", f.x}, {"distance", f.distance}});
        json results = {{"closed", curve.closed},
                        {"cuspCount", curve.cuspCount ? json(*curve.cuspCount) : json(nullptr)},
                        {"center", complex_json(center)},
                        {"farthest", farthest},
                        {"samples", samples}};
        json input = trinomial_input(T);
        input["count"] = n;
        write_json(out, envelope("hypotrochoid", input, results));
    } else {
        out << "x,re,im\n";
        for (const CurvePoint& p : curve.samples)
            out << csv_num(p.x) << ',' << csv_num(p.z.real()) << ',' << csv_num(p.z.imag()) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct InstanceOutcome {
    std::array<bool, 5> ok{};
};

const std::array<const char*, 5> kChecks = {"value agreement (1e-9 rel)", "point count",
                                            "point location (1e-6)", "localisation interval",
                                            "reduction round trip (1e-10)"};

InstanceOutcome check_instance(const Trinomial& T, int grid) {
    InstanceOutcome o;
    try {
        const GlobalMaxResult g = max_points_global(T);
        const OracleReport rep = brute_max(T, grid, 1e-12);
        o.ok[0] = std::abs(rep.value - g.result.value()) <= 1e-9 * rep.value;
        o.ok[1] = rep.argmaxes.size() == g.result.points.size();
        std::vector<double> xs;
        for (const MaxPoint& p : g.result.points) xs.push_back(p.x);
        o.ok[2] = same_point_sets(xs, rep.argmaxes, rep.period, 1e-6);
        o.ok[3] = g.inInterval;
        const double scale = T.modulus[0] + T.modulus[1] + T.modulus[2];
        bool round = true;
        for (int i = 0; i < 8; ++i) {
            const double x = rep.period * (i + 0.37) / 8.0;
            const auto back = g.reduction.transcript.original_value(g.reduction.reduced, x);
            round = round && std::abs(back - evaluate(T, x)) <= 1e-10 * scale;
        }
        o.ok[4] = round;
    } catch (const std::exception&) {
        o.ok.fill(false);
    }
    return o;
}

int cmd_verify(const Args& a, std::ostream& out, const Style& style) {
    const std::size_t n = a.count == 0 ? 1000 : a.count;
    const InstanceGenerator gen(a.seed);
    std::vector<InstanceOutcome> outcomes(n);
    detail::parallel_for(n, [&](std::size_t i) { outcomes[i] = check_instance(gen.instance(i), a.grid); });

    json checks = json::array();
    bool failed = false;
    for (std::size_t c = 0; c < kChecks.size(); ++c) {
        std::size_t pass = 0;
        json firstFailure = nullptr;
        for (std::size_t i = 0; i < n; ++i) {
            if (outcomes[i].ok[c])
                ++pass;
            else if (firstFailure.is_null())
                firstFailure = i;
        }
        failed = failed || pass != n;
        checks.push_back({{"name", kChecks[c]}, {"passed", pass}, {"failed", n - pass}, {"firstFailure", firstFailure}});
    }
    if (a.json) {
        write_json(out, envelope("verify", {{"count", n}, {"grid", a.grid}},
                                 {{"checks", checks}, {"ok", !failed}}, a.seed));
    } else {
        out << "seed " << a.seed << ", " << n << " instances, grid " << a.grid << "\n\n";
        out << std::left << std::setw(32) << "check" << std::setw(10) << "passed" << std::setw(10)
            << "failed" << "status\n";
        for (const json& c : checks)
            out << std::setw(32) << c["name"].get<std::string>() << std::setw(10)
                << c["passed"].get<std::size_t>() << std::setw(10) << c["failed"].get<std::size_t>()
                << (c["failed"].get<std::size_t>() == 0 ? style.pass() : style.fail()) << '\n';
    }
    return failed ? kExitVerifyFailed : kExitOk;
}

void error_body(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", {{"kind", kind}, {"message", message}}}, {"exitCode", kExitBadInput}}.dump()
        << '\n';
}

}  // namespace

json analyze_results(const Trinomial& T, const AnalyzeOptions& options) {
    const GlobalMaxResult g = max_points_global(T, options.tauPiTolerance);
    const SpectrumStats& s = g.reduction.stats;
    const ReducedForm& R = g.reduction.reduced;
    const Transcript& tr = g.reduction.transcript;
    const MaxResult& m = g.result;

    json points = json::array();
    for (const MaxPoint& p : m.points) points.push_back({{"x", p.x}, {"value", p.value}});
    json results = {
        {"stats",
         {{"d", s.d}, {"k", s.k}, {"l", s.l}, {"m", s.m}, {"D", s.D}, {"theta", s.theta},
          {"tau", s.tau}, {"symmetric", s.symmetric}}},
        {"reduced",
         {{"k", R.k}, {"l", R.l}, {"r1", R.r1}, {"r2", R.r2}, {"r3", R.r3}, {"t", R.t},
          {"symmetric", R.symmetric}}},
        {"transcript",
         {{"sortPermutation", tr.sortPermutation}, {"middleFrequency", tr.middleFrequency},
          {"alpha", tr.alpha}, {"v", tr.v}, {"epsilon", tr.epsilon}, {"swapped", tr.swapped},
          {"homothety", tr.homothety}}},
        {"maximum",
         {{"value", m.value()}, {"valueSquared", m.value() * m.value()},
          {"multiplicity", m.multiplicity}, {"classification", std::string(to_string(m.classification))},
          {"points", points}, {"axis", m.axis ? json(*m.axis) : json(nullptr)}, {"period", m.period}}},
        {"interval", {{"lo", g.interval.lo}, {"hi", g.interval.hi}, {"containsMaximum", g.inInterval}}}};

    if (options.verify) {
        // The analysis describes the snapped instance when τ was classified as
        // π; the oracle checks that instance, with the middle phase moved by
        // the snapped amount.
        Trinomial checked = T;
        const SpectrumStats raw = derive_spectrum_stats(T, 0.0);
        double shift = 0.0;
        if (s.symmetric && !raw.symmetric) {
            shift = ((raw.theta < 0 ? -kPi : kPi) - raw.theta) / static_cast<double>(s.D);
            checked.phase[s.order[1]] += shift;
        }
        const OracleReport rep = brute_max(checked, options.grid, 1e-12);
        std::vector<double> xs;
        for (const MaxPoint& p : m.points) xs.push_back(p.x);
        const bool valueOk = std::abs(rep.value - m.value()) <= 1e-9 * rep.value;
        const bool pointsOk = same_point_sets(xs, rep.argmaxes, rep.period, 1e-6);
        results["oracle"] = {{"value", rep.value},         {"argmaxes", rep.argmaxes},
                             {"gridSize", rep.gridSize},   {"evaluations", rep.evaluations},
                             {"valueAgrees", valueOk},     {"pointsAgree", pointsOk},
                             {"middlePhaseShift", shift},
                             {"agrees", valueOk && pointsOk}};
    }
    return results;
}

json envelope(const std::string& command, json input, json results, std::optional<std::uint64_t> seed) {
    return {{"command", command},
            {"input", std::move(input)},
            {"results", std::move(results)},
            {"toolVersion", TRINOMAX_VERSION},
            {"schemaVersion", kSchemaVersion},
            {"seed", seed ? json(*seed) : json(nullptr)}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    CLI::App app{"Maximum modulus of trigonometric trinomials", "trinomax"};
    app.require_subcommand(1);
    app.set_version_flag("--version", TRINOMAX_VERSION);
    Args a;
    const Style style{color};

    const auto add_freq = [&](CLI::App* sub) {
        sub->add_option("-l,--lambda", a.freq, "three distinct integer frequencies")->expected(3)->required();
    };
    const auto add_moduli = [&](CLI::App* sub) {
        sub->add_option("-r,--moduli", a.modulus, "three positive moduli")->expected(3)->required();
    };
    const auto add_phases = [&](CLI::App* sub) {
        sub->add_option("-p,--phases", a.phase, "three phases (radians unless --degrees)")
            ->expected(3)
            ->required();
        sub->add_flag("--degrees", a.degrees, "read phases in degrees");
        sub->add_option("--tau-tol", a.tauTol, "distance to pi below which tau counts as pi (default 1e-7)")
            ->check(CLI::Range(0.0, 1e-3));
    };
    const auto add_format = [&](CLI::App* sub, bool withCsv) {
        auto* j = sub->add_flag("--json", a.json, "JSON report");
        if (withCsv) sub->add_flag("--csv", a.csv, "CSV output")->excludes(j);
    };

    auto* analyze = app.add_subcommand("analyze", "maximum points of one trinomial");
    add_freq(analyze);
    add_moduli(analyze);
    add_phases(analyze);
    add_format(analyze, true);
    analyze->add_flag("--verify", a.verify, "cross-check against the brute-force oracle");
    analyze->add_option("--grid", a.grid, "oracle grid size")->check(CLI::Range(1024, 1 << 24));

    auto* sidon = app.add_subcommand("sidon", "Sidon constant of a three-point spectrum");
    add_freq(sidon);
    add_format(sidon, false);
    sidon->add_flag("--verify", a.verify, "run the brute-force phase search");

    auto* multiplier = app.add_subcommand("multiplier", "norm of a unimodular relative multiplier");
    add_freq(multiplier);
    add_phases(multiplier);
    add_format(multiplier, false);
    multiplier->add_flag("--verify", a.verify, "run the brute-force search");

    auto* sw = app.add_subcommand("sweep", "maximum modulus as the phase invariant runs over [0, pi]");
    add_freq(sw);
    add_moduli(sw);
    sw->add_flag("--json", a.json, "JSON report");
    sw->add_flag("--csv", a.csv, "CSV rows (default)");
    sw->add_option("--count", a.count, "number of rows (default 64)")->check(CLI::Range(2, 1 << 20));

    auto* hyp = app.add_subcommand("hypotrochoid", "sample the curve traced by the outer terms");
    add_freq(hyp);
    add_moduli(hyp);
    add_phases(hyp);
    hyp->add_flag("--json", a.json, "JSON report");
    hyp->add_flag("--csv", a.csv, "CSV samples (default)");
    hyp->add_option("--count", a.count, "number of samples (default 512)")->check(CLI::Range(16, 1 << 22));

    auto* verify = app.add_subcommand("verify", "oracle agreement on seeded random trinomials");
    verify->add_option("--seed", a.seed, "generator seed (default 42)");
    verify->add_option("--count", a.count, "number of instances (default 1000)")->check(CLI::Range(1, 1 << 24));
    verify->add_option("--grid", a.grid, "oracle grid size")->check(CLI::Range(1024, 1 << 24));
    verify->add_flag("--json", a.json, "JSON report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // argv[0]
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << TRINOMAX_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        error_body(err, "ParseError", e.what());
        return kExitBadInput;
    }

    try {
        if (*analyze) return cmd_analyze(a, out, style);
        if (*sidon) return cmd_sidon(a, out, style);
        if (*multiplier) return cmd_multiplier(a, out, style);
        if (*sw) return cmd_sweep(a, out);
        if (*hyp) return cmd_hypotrochoid(a, out);
        return cmd_verify(a, out, style);
    } catch (const std::invalid_argument& e) {
        error_body(err, "InvalidInput", e.what());
        return kExitBadInput;
    } catch (const std::runtime_error& e) {
        error_body(err, "NumericalFailure", e.what());
        return kExitVerifyFailed;
    }
}

}  // namespace trinomax::cli
