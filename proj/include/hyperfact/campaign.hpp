#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperfact/rational.hpp"

namespace hyperfact {

/// Randomized checks available to fuzzing campaigns.
enum class CheckKind {
  Saalschutz,
  KarlssonMinton,
  FieldsWimp,
  Whipple,
  QSaalschutz,
  Sears,
  WilsonSymmetry,
  WilsonCase1,
  WilsonCase2,
  AskeyWilsonCase1,
  AskeyWilsonCase2,
  Tridiag,
};

std::string_view check_name(CheckKind kind);
std::optional<CheckKind> parse_check(std::string_view name);
std::span<const CheckKind> all_checks();

/// Size bounds used when drawing parameters.
struct TrialLimits {
  unsigned saalschutz_n = 25;
  unsigned whipple_n = 15;
  unsigned karlsson_big_n = 15;
  unsigned karlsson_r = 3;
  unsigned q_series_n = 15;
  unsigned symmetry_n = 6;
  unsigned wilson_case1_n = 15;
  unsigned wilson_case2_n = 12;
  unsigned wilson_split_n = 8;
  unsigned askey_wilson_n = 10;
  unsigned tridiag_n = 30;
  unsigned max_attempts = 1000;
};

struct TrialOutcome {
  std::string check;
  std::uint64_t trial = 0;
  std::vector<std::pair<std::string, Rational>> params;
  bool holds = false;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::string error;
  /// Check-specific payload (e.g. a factorization report); null if none.
  nlohmann::ordered_json detail;
};

/// Draws one parameter point (rejecting precondition violations) and
/// runs the check there. Never throws for a failed check; the outcome
/// records it instead.
TrialOutcome run_trial(CheckKind kind, std::uint64_t seed, std::uint64_t trial, const TrialLimits& limits = {});

/// Runs trials 0..count-1 on up to `threads` workers; results are in trial order.
std::vector<TrialOutcome> run_campaign(CheckKind kind, std::uint64_t seed, std::uint64_t count, unsigned threads = 1,
                                       const TrialLimits& limits = {});

}  // namespace hyperfact
