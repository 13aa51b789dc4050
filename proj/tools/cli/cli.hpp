#pragma once

// Command-line front end. `run` is the whole program minus process I/O so
// tests can drive it directly.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatlab/flats.hpp"
#include "flatlab/vecfun.hpp"

namespace flatlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitInternal = 4;

struct ParsedFunction {
  VectorialFn fn;
  std::string kind;  // "anf", "pow", "inv" or "family"
  std::vector<std::string> warnings;
};

// Accepts `;`-separated ANF coordinates (n required), `pow(n=..,e=..)`,
// `inv(n=..)` or `family:NAME(k=v,...)`. A given n or m must agree with the
// function. Syntax errors carry line/column within `spec`.
ParsedFunction parse_function(std::string_view spec, std::optional<int> n, std::optional<int> m,
                              std::optional<std::uint32_t> modulus = std::nullopt);

// Modes usable for counting k-flats of f; the first entry is what auto picks.
std::vector<CountMethod> applicable_modes(const VectorialFn& f, int k);

struct CountOutcome {
  NonvanishingReport report;
  // The Walsh route yields flat counts only.
  bool subspace_count_known = true;
  // Terms of degree < k were dropped before a rank or closed-form count;
  // they do not change either count.
  bool stripped_lower_terms = false;
};

// Count with a specific method. Throws UsageError if it does not apply.
CountOutcome count_with(const VectorialFn& f, int k, CountMethod method, const EngineOptions& opts);

struct Outcome {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// args excludes the program name. budget_env is the value of FLATLAB_BUDGET.
Outcome run(const std::vector<std::string>& args, std::optional<std::string> budget_env = std::nullopt);

}  // namespace flatlab::cli
