#pragma once

// Domain types for the green-exemption inspection game and the validation
// that turns raw numbers into a Scenario.
//
// Welfare notation (regulator's view, by realized cost and decisions):
//   w_D        high cost, collusion blocked: firms keep the dirty technology
//   w_G        low cost, collusion blocked: firms go green on their own
//   w_H        high cost, collusion allowed: justified high price
//   w_H_prime  low cost, collusion allowed, firms set the high price anyway
//   w_L        low cost, collusion allowed, firms set the low price
// A valid profile satisfies w_D < w_H < w_H_prime < w_L < w_G.

#include <string>
#include <variant>
#include <vector>

namespace greenfix {

struct WelfareProfile {
  double w_D = 0.0;
  double w_H = 0.0;
  double w_H_prime = 0.0;
  double w_L = 0.0;
  double w_G = 0.0;

  friend bool operator==(const WelfareProfile&, const WelfareProfile&) = default;
};

// Fines are paid to the inspector in full (g) and split evenly across the
// n firms, so each firm pays f = g / n.
struct EnforcementParams {
  double g = 0.0;  // total fine
  double d = 0.0;  // investigation cost
  int n = 1;       // number of firms

  double per_firm_fine() const { return g / static_cast<double>(n); }
  // Above this belief the inspector never investigates an always-violating
  // cartel: (g - d) / g.
  double investigate_bound() const { return (g - d) / g; }

  friend bool operator==(const EnforcementParams&, const EnforcementParams&) = default;
};

// Representative (symmetric) firm payoffs.
struct FirmPayoffs {
  double v_D = 0.0;
  double v_G = 0.0;
  double v_H = 0.0;
  double v_L = 0.0;
  double v_H_prime = 0.0;

  double violation_gain() const { return v_H_prime - v_L; }

  friend bool operator==(const FirmPayoffs&, const FirmPayoffs&) = default;
};

// Prior probability that the transition cost is high.
struct Belief {
  double rho = 0.0;

  friend bool operator==(const Belief&, const Belief&) = default;
};

struct SocialWeights {
  double delta1 = 0.5;  // regulator welfare
  double delta2 = 0.5;  // inspector net payoff

  friend bool operator==(const SocialWeights&, const SocialWeights&) = default;
};

struct Scenario {
  WelfareProfile welfare;
  EnforcementParams enforcement;
  FirmPayoffs firms;
  Belief belief;
  SocialWeights weights;

  double rho() const { return belief.rho; }
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Unvalidated input. The firm count is kept as a double so that non-integer
// input can be reported instead of silently truncated.
struct ScenarioCandidate {
  WelfareProfile welfare;
  double g = 0.0;
  double d = 0.0;
  double n = 1.0;
  FirmPayoffs firms;
  double rho = 0.0;
  double delta1 = 0.5;
  double delta2 = 0.5;

  static ScenarioCandidate from(const Scenario& s);
};

enum class ValidationCode {
  kNonFinite,
  kWelfareOrder,
  kFineNotAboveCost,
  kNegativeCost,
  kFirmCount,
  kFineBelowViolationGain,
  kNoViolationTemptation,
  kBeliefRange,
  kWeightRange,
  kWeightSum,
};

struct ValidationError {
  ValidationCode code;
  std::string message;
};

using ValidationErrorList = std::vector<ValidationError>;

// Either a validated scenario or every constraint the candidate violates.
class ValidationResult {
 public:
  explicit ValidationResult(Scenario s) : value_(std::move(s)) {}
  explicit ValidationResult(ValidationErrorList e) : value_(std::move(e)) {}

  bool ok() const { return std::holds_alternative<Scenario>(value_); }
  explicit operator bool() const { return ok(); }

  const Scenario& scenario() const { return std::get<Scenario>(value_); }
  const ValidationErrorList& errors() const {
    return std::get<ValidationErrorList>(value_);
  }

 private:
  std::variant<Scenario, ValidationErrorList> value_;
};

ValidationResult validate_scenario(const ScenarioCandidate& raw);

// Re-validates an already assembled scenario.
ValidationResult validate_scenario(const Scenario& s);

// Welfare-only checks (finiteness and the strict chain).
ValidationErrorList validate_welfare(const WelfareProfile& w);

// Joins messages with "; ".
std::string describe(const ValidationErrorList& errors);

// Strategy profile of the game: the regulator's exemption decision, the
// firms' violation probability, and the inspector's investigation
// probability after a high price is observed.
struct StrategyProfile {
  bool allow_collusion = false;
  double eta = 0.0;
  double mu = 0.0;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

}  // namespace greenfix
