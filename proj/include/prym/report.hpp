#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace prym {

// Exit codes shared by every subcommand:
//   0 pass, 1 validation failure, 2 parse error, 3 unsupported combination,
//   4 search exhaustion.
inline constexpr int kExitPass = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitExhausted = 4;

struct CommandReport {
  int exit_code = kExitPass;
  std::string text;             // human-readable rendering
  nlohmann::ordered_json json;  // machine-readable rendering
};

CommandReport cmd_validate(const std::string& path);
CommandReport cmd_analyze(const std::string& path);
// which: "correspondences", "prym" (n = 4 only) or "all"
CommandReport cmd_verify(const std::string& path, const std::string& which);
CommandReport cmd_search(int n, int base_genus, int branches, int count,
                         std::uint64_t rng_seed, const std::string& out_dir,
                         long long attempt_budget);

struct BoundsRequest {
  enum class Mode { kCastelnuovo, kGonality, kClifford, kPlan, kVandermonde, kGenus };
  Mode mode = Mode::kPlan;
  long long a = 0, b = 0, c = 0, d = 0;  // positional arguments per mode
};

CommandReport cmd_bounds(const BoundsRequest& request);

}  // namespace prym
