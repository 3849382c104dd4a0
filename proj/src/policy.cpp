#include "greenfix/policy.hpp"

#include <cmath>
#include <limits>

namespace greenfix {
namespace {

// numerator / (delta2 * scale) with delta2 == 0 mapped to a signed infinity.
double weighted_ratio(double numerator, double delta2, double scale) {
  const double denom = delta2 * scale;
  if (denom == 0.0) {
    if (numerator == 0.0) return 0.0;
    return std::copysign(std::numeric_limits<double>::infinity(), numerator);
  }
  return numerator / denom;
}

Preference compare(double commitment, double discretion) {
  const double diff = commitment - discretion;
  if (std::abs(diff) <= kIndifferenceTolerance) return Preference::kIndifferent;
  return diff > 0.0 ? Preference::kCommitment : Preference::kDiscretion;
}

}  // namespace

std::string_view to_string(Policy p) {
  return p == Policy::kCommitment ? "Commitment" : "Discretion";
}

std::string_view to_string(PolicyRegime r) {
  switch (r) {
    case PolicyRegime::kHighRho:
      return "HighRho";
    case PolicyRegime::kIntermediateRho:
      return "IntermediateRho";
    case PolicyRegime::kSmallRho:
      return "SmallRho";
    case PolicyRegime::kTrivialNoCollusion:
      return "TrivialNoCollusion";
  }
  return "?";
}

std::string_view to_string(Preference p) {
  switch (p) {
    case Preference::kCommitment:
      return "Commitment";
    case Preference::kDiscretion:
      return "Discretion";
    case Preference::kIndifferent:
      return "Indifferent";
  }
  return "?";
}

double social_objective(double w_realized, bool investigated, bool violated,
                        const SocialWeights& weights, double g, double d) {
  const double inspector = investigated ? (violated ? g : 0.0) - d : 0.0;
  return weights.delta1 * w_realized + weights.delta2 * inspector;
}

double commitment_collusion_threshold(const WelfareProfile& w) {
  return threshold_extremes(w).rho_L;
}

double expected_social_welfare(const Scenario& s, Policy policy) {
  const WelfareProfile& w = s.welfare;
  const double rho = s.rho();
  const double d1 = s.weights.delta1;
  const double d2 = s.weights.delta2;

  if (policy == Policy::kCommitment) {
    if (rho > commitment_collusion_threshold(w)) {
      // Every high price is investigated; it is always justified.
      return d1 * expected_welfare_collusion(rho, 0.0, w) - d2 * rho * s.enforcement.d;
    }
    return d1 * expected_welfare_no_collusion(rho, w);
  }

  // The discretionary inspector earns zero in expectation in every regime.
  const EquilibriumOutcome eq = classify_equilibrium(s);
  if (!eq.collusion_allowed) return d1 * expected_welfare_no_collusion(rho, w);
  return d1 * expected_welfare_collusion(rho, *eq.eta, w);
}

PolicyComparison compare_policies(const Scenario& s) {
  const WelfareProfile& w = s.welfare;
  const double rho = s.rho();
  const double g = s.enforcement.g;
  const double d1 = s.weights.delta1;
  const double d2 = s.weights.delta2;

  PolicyComparison c;
  c.e_pi_commitment = expected_social_welfare(s, Policy::kCommitment);
  c.e_pi_discretion = expected_social_welfare(s, Policy::kDiscretion);

  if (!(rho > commitment_collusion_threshold(w))) {
    c.regime = PolicyRegime::kTrivialNoCollusion;
    c.d_threshold = std::numeric_limits<double>::quiet_NaN();
    c.margin = 0.0;
    c.preferred = Preference::kIndifferent;
    return c;
  }

  const EquilibriumOutcome eq = classify_equilibrium(s);
  switch (eq.regime) {
    case Regime::kPureAlwaysViolate:
      c.regime = PolicyRegime::kHighRho;
      c.d_threshold = weighted_ratio(d1 * (1.0 - rho) * (w.w_L - w.w_H_prime), d2, rho);
      break;
    case Regime::kMixedViolation:
    case Regime::kNoViolationDeterred:
      c.regime = PolicyRegime::kIntermediateRho;
      c.d_threshold = g - weighted_ratio(d1 * (w.w_L - w.w_H_prime), d2, 1.0);
      break;
    case Regime::kNoCollusion:
      c.regime = PolicyRegime::kSmallRho;
      c.d_threshold = weighted_ratio(
          d1 * (rho * (w.w_H - w.w_D) - (1.0 - rho) * (w.w_G - w.w_L)), d2, rho);
      break;
  }
  c.margin = c.e_pi_commitment - c.e_pi_discretion;
  c.preferred = compare(c.e_pi_commitment, c.e_pi_discretion);
  return c;
}

Preference preferred_by_threshold(const PolicyComparison& c, double d) {
  if (c.regime == PolicyRegime::kTrivialNoCollusion) return Preference::kIndifferent;
  if (d == c.d_threshold) return Preference::kIndifferent;
  // Free investigation: both policies deter violation at no cost.
  if (c.regime == PolicyRegime::kIntermediateRho && d == 0.0) return Preference::kIndifferent;
  const bool below = d < c.d_threshold;
  const bool commitment = c.regime == PolicyRegime::kIntermediateRho ? !below : below;
  return commitment ? Preference::kCommitment : Preference::kDiscretion;
}

double small_rho_threshold_plus_form(const Scenario& s) {
  const WelfareProfile& w = s.welfare;
  const double rho = s.rho();
  return weighted_ratio(
      s.weights.delta1 * (rho * (w.w_H - w.w_D) + (1.0 - rho) * (w.w_G - w.w_L)),
      s.weights.delta2, rho);
}

}  // namespace greenfix
