#include "greenfix/statics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "greenfix/equilibrium.hpp"

namespace greenfix::statics {
namespace {

constexpr std::array<std::pair<Target, std::string_view>, 5> kTargets{{
    {Target::kRhoL, "rho_L"},
    {Target::kRhoH, "rho_H"},
    {Target::kRhoStarMixed, "rho_star_mixed"},
    {Target::kEtaMixed, "eta_mixed"},
    {Target::kRhoStarOfEta, "rho_star_of_eta"},
}};

constexpr std::array<std::pair<Parameter, std::string_view>, 10> kParameters{{
    {Parameter::kWD, "w_D"},
    {Parameter::kWH, "w_H"},
    {Parameter::kWHPrime, "w_H_prime"},
    {Parameter::kWL, "w_L"},
    {Parameter::kWG, "w_G"},
    {Parameter::kG, "g"},
    {Parameter::kD, "d"},
    {Parameter::kRho, "rho"},
    {Parameter::kEta, "eta"},
    {Parameter::kIncentiveScale, "incentive_scale"},
}};

struct Point {
  Scenario scenario;
  double eta;
};

// Shifts one parameter; kIncentiveScale moves d.
Point shifted(const Point& at, Parameter p, double delta) {
  Point out = at;
  WelfareProfile& w = out.scenario.welfare;
  switch (p) {
    case Parameter::kWD: w.w_D += delta; break;
    case Parameter::kWH: w.w_H += delta; break;
    case Parameter::kWHPrime: w.w_H_prime += delta; break;
    case Parameter::kWL: w.w_L += delta; break;
    case Parameter::kWG: w.w_G += delta; break;
    case Parameter::kG: out.scenario.enforcement.g += delta; break;
    case Parameter::kD:
    case Parameter::kIncentiveScale: out.scenario.enforcement.d += delta; break;
    case Parameter::kRho: out.scenario.belief.rho += delta; break;
    case Parameter::kEta: out.eta += delta; break;
  }
  return out;
}

void require_valid(const Point& p, Parameter param, double delta) {
  const ValidationResult r = validate_scenario(p.scenario);
  if (!r.ok()) {
    throw std::invalid_argument(fmt::format("perturbing {} by {} breaks validity: {}",
                                            to_string(param), delta, describe(r.errors())));
  }
  if (!(p.eta >= 0.0 && p.eta <= 1.0)) {
    throw std::invalid_argument(
        fmt::format("perturbing {} by {} moves eta outside [0,1]", to_string(param), delta));
  }
}

double evaluate_checked(Target t, const Point& p, Parameter param, double delta) {
  try {
    return evaluate(t, p.scenario, p.eta);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(
        fmt::format("perturbing {} by {}: {}", to_string(param), delta, e.what()));
  }
}

double incentive(const Scenario& s) {
  return (s.enforcement.g - s.enforcement.d) / s.enforcement.d;
}

Sign sign_of(double x) {
  if (x > 0.0) return Sign::kPositive;
  if (x < 0.0) return Sign::kNegative;
  return Sign::kNone;
}

}  // namespace

std::string_view to_string(Target t) {
  for (const auto& [k, name] : kTargets) {
    if (k == t) return name;
  }
  return "?";
}

std::string_view to_string(Parameter p) {
  for (const auto& [k, name] : kParameters) {
    if (k == p) return name;
  }
  return "?";
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::kPositive:
      return "+";
    case Sign::kNegative:
      return "-";
    case Sign::kNone:
      return "n/a";
  }
  return "?";
}

std::optional<Target> parse_target(std::string_view name) {
  for (const auto& [k, n] : kTargets) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::optional<Parameter> parse_parameter(std::string_view name) {
  for (const auto& [k, n] : kParameters) {
    if (n == name) return k;
  }
  return std::nullopt;
}

double evaluate(Target target, const Scenario& s, double eta) {
  const WelfareProfile& w = s.welfare;
  switch (target) {
    case Target::kRhoL:
      return threshold_extremes(w).rho_L;
    case Target::kRhoH:
      return threshold_extremes(w).rho_H;
    case Target::kRhoStarMixed:
      return mixed_collusion_threshold(w, s.enforcement.g, s.enforcement.d);
    case Target::kEtaMixed:
      return mixed_violation_probability(s.rho(), s.enforcement.g, s.enforcement.d);
    case Target::kRhoStarOfEta:
      return collusion_threshold(eta, w);
  }
  return 0.0;
}

double parameter_value(Parameter p, const Scenario& s, double eta) {
  const WelfareProfile& w = s.welfare;
  switch (p) {
    case Parameter::kWD: return w.w_D;
    case Parameter::kWH: return w.w_H;
    case Parameter::kWHPrime: return w.w_H_prime;
    case Parameter::kWL: return w.w_L;
    case Parameter::kWG: return w.w_G;
    case Parameter::kG: return s.enforcement.g;
    case Parameter::kD:
    case Parameter::kIncentiveScale: return s.enforcement.d;
    case Parameter::kRho: return s.rho();
    case Parameter::kEta: return eta;
  }
  return 0.0;
}

Sign claimed_sign(Target target, Parameter parameter, const Scenario& s) {
  using P = Parameter;
  switch (target) {
    case Target::kRhoH:
      switch (parameter) {
        case P::kWG:
        case P::kWD: return Sign::kPositive;
        case P::kWH:
        case P::kWHPrime: return Sign::kNegative;
        default: return Sign::kNone;
      }
    case Target::kRhoStarMixed: {
      const WelfareProfile& w = s.welfare;
      const double g = s.enforcement.g;
      const double d = s.enforcement.d;
      if (!(d > 0.0)) return Sign::kNone;
      switch (parameter) {
        case P::kWG: {
          const double r = mixed_collusion_threshold(w, g, d);
          return r > 0.0 && r < 1.0 ? Sign::kPositive : Sign::kNone;
        }
        case P::kWD: return Sign::kPositive;
        case P::kWH:
        case P::kWHPrime:
        case P::kIncentiveScale: return Sign::kNegative;
        case P::kWL:
          return incentive_ratio(w, g, d).value > 1.0 ? Sign::kNegative : Sign::kNone;
        default: return Sign::kNone;
      }
    }
    case Target::kEtaMixed:
      switch (parameter) {
        case P::kRho: return Sign::kPositive;
        case P::kIncentiveScale: return Sign::kNegative;
        default: return Sign::kNone;
      }
    case Target::kRhoStarOfEta:
      return parameter == P::kEta ? Sign::kPositive : Sign::kNone;
    case Target::kRhoL:
      return Sign::kNone;
  }
  return Sign::kNone;
}

double relative_step(double x) { return std::max(std::abs(x) * 1e-6, 1e-9); }

StaticsReport finite_difference(Target target, const Scenario& s, Parameter parameter,
                                double step, double eta) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  if (parameter == Parameter::kIncentiveScale && !(s.enforcement.d > 0.0)) {
    throw std::invalid_argument("incentive_scale needs d > 0");
  }
  const Point base{s, eta};
  const Point up = shifted(base, parameter, step);
  const Point down = shifted(base, parameter, -step);
  require_valid(up, parameter, step);
  require_valid(down, parameter, -step);

  const double f_up = evaluate_checked(target, up, parameter, step);
  const double f_down = evaluate_checked(target, down, parameter, -step);
  double estimate = 0.0;
  if (parameter == Parameter::kIncentiveScale) {
    // Chain rule through d: df/dr = (df/dd) / (dr/dd).
    estimate = (f_up - f_down) / (incentive(up.scenario) - incentive(down.scenario));
  } else {
    estimate = (f_up - f_down) / (2.0 * step);
  }

  StaticsReport r{target, parameter, step, estimate, claimed_sign(target, parameter, s), true};
  if (r.claimed_sign != Sign::kNone) r.agrees = sign_of(estimate) == r.claimed_sign;
  return r;
}

double second_difference_rho_star(const WelfareProfile& w, double eta, double step) {
  return (collusion_threshold(eta + step, w) - 2.0 * collusion_threshold(eta, w) +
          collusion_threshold(eta - step, w)) /
         (step * step);
}

std::vector<StaticsReport> claimed_derivatives(const Scenario& s, double eta) {
  using P = Parameter;
  static constexpr std::pair<Target, P> kPairs[] = {
      {Target::kRhoH, P::kWG},          {Target::kRhoH, P::kWD},
      {Target::kRhoH, P::kWH},          {Target::kRhoH, P::kWHPrime},
      {Target::kRhoStarMixed, P::kWG},  {Target::kRhoStarMixed, P::kWD},
      {Target::kRhoStarMixed, P::kWH},  {Target::kRhoStarMixed, P::kWHPrime},
      {Target::kRhoStarMixed, P::kWL},  {Target::kRhoStarMixed, P::kIncentiveScale},
      {Target::kEtaMixed, P::kIncentiveScale},
      {Target::kEtaMixed, P::kRho},     {Target::kRhoStarOfEta, P::kEta},
  };
  std::vector<StaticsReport> out;
  for (const auto& [target, param] : kPairs) {
    const double h = relative_step(parameter_value(param, s, eta));
    try {
      out.push_back(finite_difference(target, s, param, h, eta));
    } catch (const std::invalid_argument&) {
      // Target undefined or perturbation invalid here; nothing to report.
    }
  }
  return out;
}

}  // namespace greenfix::statics
