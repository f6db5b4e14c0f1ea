#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace ptchain::cli {

enum class Command { Spectrum, Sweep, Phase, Metric, Hermitian, Verify };
enum class Format { Csv, Json };

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadArgs = 2;

struct RunConfig {
  Command command = Command::Spectrum;
  int n_sites = 0;
  std::optional<double> gamma;
  std::optional<double> gamma_min;
  std::optional<double> gamma_max;
  int steps = 0;
  double hopping = 1.0;
  double tol = 1e-10;
  Format format = Format::Csv;
  std::string out;  // empty: write to `stdout_stream`
  int n_max = 12;
};

std::string_view to_string(Command command);

/// Throws ptchain::InvalidArgument describing the first problem found.
void validate(const RunConfig& config);

/// Executes the command. Records go to config.out (or `stdout_stream`),
/// single-line diagnostics to `stderr_stream`.
int run(const RunConfig& config, std::ostream& stdout_stream, std::ostream& stderr_stream);

/// Fixed 12-significant-digit rendering with -0 folded to 0.
std::string format_number(double value);

}  // namespace ptchain::cli
