#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trinomax/spectrum.hpp"

namespace trinomax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kSchemaVersion = 1;

/// Default τ = π snapping tolerance of the command line: phases typed with
/// eight significant digits (1.5707963 for π/2) still land on the τ = π branch.
inline constexpr double kCliTauPiTolerance = 1e-7;

struct AnalyzeOptions {
    bool verify = false;
    int grid = 4096;
    double tauPiTolerance = kCliTauPiTolerance;
};

/// The `results` body of `analyze`.  Throws on invalid input.
nlohmann::json analyze_results(const Trinomial& T, const AnalyzeOptions& options = {});

/// {command, input, results, toolVersion, schemaVersion, seed}.
nlohmann::json envelope(const std::string& command, nlohmann::json input, nlohmann::json results,
                        std::optional<std::uint64_t> seed = std::nullopt);

/// Full command line, argv[0] included.  `color` enables ANSI colour in
/// human-readable tables.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool color = false);

}  // namespace trinomax::cli
