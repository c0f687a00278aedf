#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lambert_tsallis/params.hpp"

// Command-line front end: classify, eval, boundary and verify subcommands.

namespace lt::cli {

enum ExitCode : int {
  kOk = 0,
  kNotExists = 2,
  kEvalDomain = 3,
  kVerifyFailed = 4,
  kUsage = 64,
};

/// `inf` (any case, optional `+`) or a decimal number. nullopt when the text
/// is not a number.
std::optional<Params> parse_params(const std::string& kappa, double gamma);

/// Locale-independent strict parse of a decimal double.
std::optional<double> parse_double(const std::string& text);

/// "default" (40×40) or "NxM": N values of κ (log-spaced in [0.25, 4], their
/// negatives and ∞) by M values of γ evenly spaced on [-2, 2].
std::optional<std::vector<Params>> parse_grid(const std::string& text);

/// The κ values of an N-row grid: ceil((N-1)/2) positive, floor((N-1)/2)
/// negative, then ∞.
std::vector<Params> grid(int n_kappa, int n_gamma);

/// Runs the tool with the given arguments (argv[0] is the program name).
/// Output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lt::cli
