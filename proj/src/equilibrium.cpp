#include "greenfix/equilibrium.hpp"

#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace greenfix {

double expected_welfare_collusion(double rho, double eta, const WelfareProfile& w) {
  return rho * w.w_H + (1.0 - rho) * (eta * w.w_H_prime + (1.0 - eta) * w.w_L);
}

double expected_welfare_no_collusion(double rho, const WelfareProfile& w) {
  return rho * w.w_D + (1.0 - rho) * w.w_G;
}

double collusion_threshold(double eta, const WelfareProfile& w) {
  // Loss from collusion when the cost is low, against the gain when it is high.
  const double low_cost_loss = w.w_G - (eta * w.w_H_prime + (1.0 - eta) * w.w_L);
  const double high_cost_gain = w.w_H - w.w_D;
  return low_cost_loss / (low_cost_loss + high_cost_gain);
}

ThresholdExtremes threshold_extremes(const WelfareProfile& w) {
  return {collusion_threshold(0.0, w), collusion_threshold(1.0, w)};
}

InspectionBenefit inspection_benefit(double rho, double eta, double g) {
  const double violating = (1.0 - rho) * eta;
  const double high_price = violating + rho;
  if (high_price == 0.0) return {0.0, true};
  return {g * violating / high_price, false};
}

double mixed_violation_probability(double rho, double g, double d) {
  if (!(d > 0.0)) {
    throw std::domain_error(fmt::format(
        "no interior mixed strategy: investigation cost must be positive (d={})", d));
  }
  const double bound = (g - d) / g;
  if (!(rho < bound)) {
    throw std::domain_error(fmt::format(
        "no interior mixed strategy: rho={} is not below (g-d)/g={}", rho, bound));
  }
  return rho * d / ((1.0 - rho) * (g - d));
}

double mixed_collusion_threshold(const WelfareProfile& w, double g, double d) {
  const double net = g - d;
  const double num = net * (w.w_G - w.w_L);
  return num / (num + net * (w.w_H - w.w_D) - d * (w.w_L - w.w_H_prime));
}

IncentiveRatio incentive_ratio(const WelfareProfile& w, double g, double d) {
  if (d == 0.0) return {std::numeric_limits<double>::infinity(), true};
  return {((g - d) / d) * ((w.w_H - w.w_D) / (w.w_G - w.w_H_prime)), false};
}

double inspector_mixing_probability(const FirmPayoffs& firms, double f) {
  const double gain = firms.violation_gain();
  if (!(gain > 0.0) || !(f > gain)) {
    throw std::domain_error(fmt::format(
        "inspector mixing requires f > v_H_prime - v_L > 0 (f={}, gain={})", f, gain));
  }
  return gain / f;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kNoCollusion:
      return "NoCollusion";
    case Regime::kPureAlwaysViolate:
      return "PureAlwaysViolate";
    case Regime::kMixedViolation:
      return "MixedViolation";
    case Regime::kNoViolationDeterred:
      return "NoViolationDeterred";
  }
  return "?";
}

std::string_view to_string(InspectorBehavior b) {
  switch (b) {
    case InspectorBehavior::kNeverInvestigate:
      return "NeverInvestigate";
    case InspectorBehavior::kIndifferent:
      return "Indifferent";
    case InspectorBehavior::kNotApplicable:
      return "NotApplicable";
  }
  return "?";
}

EquilibriumOutcome classify_equilibrium(const Scenario& s) {
  const WelfareProfile& w = s.welfare;
  const double g = s.enforcement.g;
  const double d = s.enforcement.d;
  const double rho = s.rho();

  EquilibriumOutcome out;
  const auto [rho_L, rho_H] = threshold_extremes(w);
  out.diagnostics = {mixed_collusion_threshold(w, g, d), rho_L, rho_H,
                     incentive_ratio(w, g, d), s.enforcement.investigate_bound()};
  const double bound = out.diagnostics.investigate_bound;
  const IncentiveRatio ratio = out.diagnostics.incentive_ratio;

  auto allow = [&](Regime regime, double eta, double mu, InspectorBehavior inspector) {
    out.regime = regime;
    out.collusion_allowed = true;
    out.eta = eta;
    out.mu = mu;
    out.inspector = inspector;
  };

  if (d == 0.0) {
    // Free investigation deters every violation; the regulator compares
    // welfare at eta = 0.
    if (rho > rho_L) {
      allow(Regime::kNoViolationDeterred, 0.0,
            inspector_mixing_probability(s.firms, s.enforcement.per_firm_fine()),
            InspectorBehavior::kIndifferent);
    } else {
      out.boundary = rho == rho_L;
    }
    return out;
  }

  if (rho >= bound) {
    out.boundary = rho == bound;
    if (ratio.value >= 1.0 || rho > rho_H) {
      allow(Regime::kPureAlwaysViolate, 1.0, 0.0, InspectorBehavior::kNeverInvestigate);
    } else if (rho == rho_H) {
      out.boundary = true;
    }
    return out;
  }

  const double rho_star = out.diagnostics.rho_star_mixed;
  if (ratio.value > 1.0 && rho > rho_star) {
    allow(Regime::kMixedViolation, mixed_violation_probability(rho, g, d),
          inspector_mixing_probability(s.firms, s.enforcement.per_firm_fine()),
          InspectorBehavior::kIndifferent);
  } else if (ratio.value > 1.0 && rho == rho_star) {
    out.boundary = true;
  }
  return out;
}

StrategyProfile subgame_perfect_profile(const Scenario& s, const EquilibriumOutcome& outcome) {
  StrategyProfile p;
  p.allow_collusion = outcome.collusion_allowed;
  if (outcome.eta && outcome.mu) {
    p.eta = *outcome.eta;
    p.mu = *outcome.mu;
    return p;
  }
  const double g = s.enforcement.g;
  const double d = s.enforcement.d;
  const double mu_star =
      inspector_mixing_probability(s.firms, s.enforcement.per_firm_fine());
  if (d == 0.0) {
    p.eta = 0.0;
    p.mu = mu_star;
  } else if (s.rho() >= s.enforcement.investigate_bound()) {
    p.eta = 1.0;
    p.mu = 0.0;
  } else {
    p.eta = mixed_violation_probability(s.rho(), g, d);
    p.mu = mu_star;
  }
  return p;
}

}  // namespace greenfix
