#pragma once

// Scenario files, report serialization and parameter sweeps.
//
// Numbers in reports are written with 12 significant digits so that output
// is byte-stable for golden-file comparison.

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "greenfix/equilibrium.hpp"
#include "greenfix/model.hpp"
#include "greenfix/oracle.hpp"
#include "greenfix/policy.hpp"
#include "greenfix/statics.hpp"

namespace greenfix::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses the scenario schema:
//   { "welfare": {w_D, w_H, w_H_prime, w_L, w_G},
//     "enforcement": {g, d, n},
//     "firms": {v_D, v_G, v_H, v_L, v_H_prime},
//     "rho": number,
//     "weights": {delta1, delta2} }
// Unknown or missing keys and non-numeric values throw ParseError.
ScenarioCandidate parse_scenario(std::string_view text);
ScenarioCandidate load_scenario(const std::filesystem::path& path);

// Full-precision JSON in the same schema; parse_scenario reads it back exactly.
std::string scenario_to_json(const Scenario& s);

// "%.12g"; non-finite values become "inf", "-inf" or "nan".
std::string format_number(double x);
// x rounded to 12 significant digits, or null when not finite.
Json json_number(double x);

Json to_json(const Scenario& s, const EquilibriumOutcome& outcome);
Json to_json(const PolicyComparison& c);
Json to_json(const statics::StaticsReport& r);
Json to_json(const oracle::EquilibriumSearchResult& r);
Json to_json(const oracle::MonteCarloEstimate& e);

void write_solve_csv(std::ostream& os, const Scenario& s, const EquilibriumOutcome& outcome);
void write_policy_csv(std::ostream& os, const PolicyComparison& c);
void write_statics_csv(std::ostream& os, const std::vector<statics::StaticsReport>& rows);

std::string verdict_line(const PolicyComparison& c);

// Parameters a sweep may vary: rho, d, g and the five welfare levels.
struct SweepSpec {
  std::string parameter;
  double from = 0.0;
  double to = 1.0;
  int steps = 2;
};

struct SweepRow {
  double value = 0.0;
  std::optional<EquilibriumOutcome> outcome;  // empty for skipped points
  double e_w_collusion = 0.0;                 // at the continuation eta
  double e_w_no_collusion = 0.0;
  Preference preferred = Preference::kIndifferent;
  std::string skip_reason;
};

// Throws std::invalid_argument for an unknown parameter, from >= to or
// steps < 2. Grid points that do not validate are kept as skipped rows.
std::vector<SweepRow> run_sweep(const Scenario& base, const SweepSpec& spec);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
Json sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace greenfix::io
