#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "spline_affine/exact.hpp"

namespace spline_affine {

enum class OutputFormat {
  automatic,  ///< per-subcommand default
  csv,
  json,
};

/// Parameters of one command line invocation.
struct RunConfig {
  std::string subcommand;  ///< spline, enum, chaos, riesz, gram or verify
  unsigned m = 1;
  unsigned depth = 6;
  std::uint64_t max_index = 4096;
  unsigned samples = 256;
  double tol = 1e-12;
  OutputFormat format = OutputFormat::automatic;
  std::optional<std::string> out_path;
};

/// Resource guards.
inline constexpr unsigned kMaxCliOrder = 8;
inline constexpr unsigned kMaxCliDepth = 10;
inline constexpr std::uint64_t kMaxCliIndex = std::uint64_t{1} << 16;
inline constexpr unsigned kMaxCliSamples = 1U << 20;

/// Invalid parameters; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Throws UsageError for parameters outside the accepted ranges.
void validate(const RunConfig& config);

/// Executes one validated subcommand, writing its output to `out` or to
/// config.out_path (atomically, via a temporary file and rename).
/// Returns 0 when every reported check passes, 1 otherwise.
int run(const RunConfig& config, std::ostream& out);

/// Full front end: parse, validate, run. Exit codes: 0 success, 1
/// computation error or failed check, 2 invalid flags.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spline_affine
