#pragma once

// Closed-form expectations, collusion thresholds and the equilibrium
// classifier for the game with a discretionary inspector.

#include <optional>
#include <string_view>

#include "greenfix/model.hpp"

namespace greenfix {

// Regulator's expected welfare when collusion is allowed and firms violate
// with probability eta whenever the cost is low.
double expected_welfare_collusion(double rho, double eta, const WelfareProfile& w);

// Regulator's expected welfare when collusion is blocked.
double expected_welfare_no_collusion(double rho, const WelfareProfile& w);

// Belief at which the two expected welfares coincide, given eta.
double collusion_threshold(double eta, const WelfareProfile& w);

struct ThresholdExtremes {
  double rho_L;  // firms never violate
  double rho_H;  // firms always violate
};

ThresholdExtremes threshold_extremes(const WelfareProfile& w);

struct InspectionBenefit {
  double value;
  // Set when a high price is never observed (rho = 0 and eta = 0); value is
  // then 0 by convention.
  bool degenerate_conditioning;
};

// Expected fine revenue from investigating, conditional on a high price.
InspectionBenefit inspection_benefit(double rho, double eta, double g);

// Violation probability that leaves the inspector indifferent.
// Throws std::domain_error unless d > 0 and rho < (g - d) / g.
double mixed_violation_probability(double rho, double g, double d);

// Collusion threshold once eta follows the inspector-indifference rule.
double mixed_collusion_threshold(const WelfareProfile& w, double g, double d);

struct IncentiveRatio {
  double value;
  bool infinite;  // d == 0
};

// ((g - d) / d) * ((w_H - w_D) / (w_G - w_H_prime)).
IncentiveRatio incentive_ratio(const WelfareProfile& w, double g, double d);

// Investigation probability that leaves firms indifferent between violating
// and not: (v_H_prime - v_L) / f. Not part of the closed-form results for the
// regulator; it completes the inspector's side of the mixed profile.
// Throws std::domain_error unless f > v_H_prime - v_L > 0.
double inspector_mixing_probability(const FirmPayoffs& firms, double f);

enum class Regime {
  kNoCollusion,
  kPureAlwaysViolate,
  kMixedViolation,
  // d == 0: investigating is free, so any violation would be caught and
  // firms comply. Limit of the mixed regime as d -> 0.
  kNoViolationDeterred,
};

enum class InspectorBehavior {
  kNeverInvestigate,
  kIndifferent,
  kNotApplicable,
};

std::string_view to_string(Regime r);
std::string_view to_string(InspectorBehavior b);

struct EquilibriumDiagnostics {
  double rho_star_mixed;
  double rho_L;
  double rho_H;
  IncentiveRatio incentive_ratio;
  double investigate_bound;  // (g - d) / g
};

struct EquilibriumOutcome {
  Regime regime = Regime::kNoCollusion;
  bool collusion_allowed = false;
  std::optional<double> eta;  // empty when collusion is blocked
  // Inspector's investigation probability on the equilibrium path; empty
  // when collusion is blocked.
  std::optional<double> mu;
  InspectorBehavior inspector = InspectorBehavior::kNotApplicable;
  // Belief sits exactly on a regime boundary; the tie was broken by rule.
  bool boundary = false;
  EquilibriumDiagnostics diagnostics{};
};

// Regime classification for a validated scenario.
//
// Ties: rho equal to a collusion threshold blocks collusion; rho equal to
// (g - d) / g is treated as the no-investigation side. Both set `boundary`.
EquilibriumOutcome classify_equilibrium(const Scenario& s);

// Full subgame-perfect profile implied by the classification, including the
// off-path continuation (eta, mu) when collusion is blocked.
StrategyProfile subgame_perfect_profile(const Scenario& s, const EquilibriumOutcome& outcome);

}  // namespace greenfix
