#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace hyperfact::cli {

enum class OutputFormat { Json, Jsonl, Csv, Pretty };

/// One parsed invocation. `params` holds the command-specific flags by
/// name without leading dashes (e.g. "t1" -> "1/2").
struct RunConfig {
  std::string command;
  std::string action;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  unsigned threads = 1;
  // Unset means JSON for single reports and JSON Lines for fuzz streams.
  std::optional<OutputFormat> output;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Executes a parsed invocation. Returns 0 when every check holds, 1 on a
/// failed check, 2 on malformed input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (honouring HYPERFACT_SEED) and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperfact::cli
