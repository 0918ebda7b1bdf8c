#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace girthguard {

enum class SolveMethod : uint8_t { Auto, Brute, BranchAndBound, Skip };

std::optional<SolveMethod> solve_method_from_string(const std::string& name);
std::string to_string(SolveMethod method);

/// Solver selection thresholds. "auto" uses the exhaustive solver up to
/// brute_max_n vertices, branch and bound up to bb_max_n, and skips larger
/// graphs; brute_guard is the hard ceiling gamma_brute accepts.
struct SolveConfig {
    SolveMethod method = SolveMethod::Auto;
    int brute_max_n = 14;
    int bb_max_n = 60;
    int brute_guard = 20;
};

/// Values explicitly set on the command line; they win over everything.
struct SolveOverrides {
    std::optional<SolveMethod> method;
    std::optional<int> brute_max_n;
    std::optional<int> bb_max_n;
    std::optional<int> brute_guard;
};

/// key=value lines, '#' comments; keys: solve, brute_max_n, bb_max_n,
/// brute_guard. Unknown keys are ignored, malformed lines throw.
SolveConfig parse_config_file(std::istream& in, SolveConfig base);

/// Built-in defaults, overlaid by the file named in $GIRTHGUARD_CONFIG (when
/// set), overlaid by CLI values.
SolveConfig resolve_solve_config(const SolveOverrides& cli);

}  // namespace girthguard
