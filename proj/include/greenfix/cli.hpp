#pragma once

// Command-line front end: solve, compare, sweep, statics and verify.
//
// Exit statuses: 0 ok, 1 usage, 2 unreadable or malformed scenario,
// 3 scenario fails validation, 4 oracle disagrees with the closed form.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "greenfix/equilibrium.hpp"
#include "greenfix/io.hpp"

namespace greenfix::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitMismatch = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 42;

// GREENFIX_SEED when set to an unsigned integer, kDefaultSeed otherwise.
std::uint64_t default_seed();

struct VerifyOptions {
  int grid_n = 200;
  std::optional<double> epsilon;  // oracle::default_epsilon when empty
  std::int64_t n_samples = 100000;
  std::uint64_t seed = kDefaultSeed;
};

using Classifier = std::function<EquilibriumOutcome(const Scenario&)>;

struct VerifyReport {
  bool pass = false;
  std::vector<std::string> diffs;
  io::Json json;
};

// Runs the grid search and a Monte-Carlo estimate and compares both with the
// profile derived from `classifier`. The search must contain a profile
// within 1/grid_n of it in each coordinate, and (off exact ties) every
// epsilon-equilibrium must share its exemption decision. Each Monte-Carlo
// mean must lie within 5 standard errors of the exact game-tree payoff.
VerifyReport run_verify(const Scenario& s, const VerifyOptions& options,
                        const Classifier& classifier = classify_equilibrium);

// `classifier` drives `verify`; tests substitute a corrupted one.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const Classifier& classifier = classify_equilibrium);

}  // namespace greenfix::cli
