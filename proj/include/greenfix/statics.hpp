#pragma once

// Comparative statics by central finite differences, checked against the
// signs the model predicts for each threshold.

#include <optional>
#include <string_view>
#include <vector>

#include "greenfix/model.hpp"

namespace greenfix::statics {

enum class Target { kRhoL, kRhoH, kRhoStarMixed, kEtaMixed, kRhoStarOfEta };

enum class Parameter {
  kWD,
  kWH,
  kWHPrime,
  kWL,
  kWG,
  kG,
  kD,
  kRho,
  kEta,
  // The inspector's incentive (g - d) / d, moved by perturbing d with g fixed.
  kIncentiveScale,
};

enum class Sign { kPositive, kNegative, kNone };

std::string_view to_string(Target t);
std::string_view to_string(Parameter p);
std::string_view to_string(Sign s);  // "+", "-", "n/a"

std::optional<Target> parse_target(std::string_view name);
std::optional<Parameter> parse_parameter(std::string_view name);

struct StaticsReport {
  Target target;
  Parameter parameter;
  double step;
  double estimate;
  Sign claimed_sign;
  bool agrees;  // sign(estimate) matches claimed_sign; true when nothing is claimed
};

// Evaluates a target at scenario s; eta is only used by kRhoStarOfEta.
// Throws std::domain_error when the target is undefined (eta_mixed outside
// the interior region).
double evaluate(Target target, const Scenario& s, double eta = 0.5);

// Current value of a parameter (eta returns the given evaluation point).
double parameter_value(Parameter p, const Scenario& s, double eta = 0.5);

// Predicted sign of d(target)/d(parameter) at s. Gated claims (rho_star_mixed
// in w_L needs an incentive ratio above one, in w_G a threshold inside (0,1))
// return kNone when the gate is closed.
Sign claimed_sign(Target target, Parameter parameter, const Scenario& s);

// |x| * 1e-6, floored at 1e-9.
double relative_step(double x);

// Central difference (f(x+h) - f(x-h)) / 2h. Both perturbed scenarios are
// re-validated; throws std::invalid_argument naming the violated constraint
// if either is invalid (or the perturbed eta leaves [0,1]).
StaticsReport finite_difference(Target target, const Scenario& s, Parameter parameter,
                                double step, double eta = 0.5);

// Second central difference of rho*(eta) in eta.
double second_difference_rho_star(const WelfareProfile& w, double eta, double step);

// Every (target, parameter) pair with a sign claim, evaluated at s with a
// relative step. Pairs whose perturbation is invalid at s are skipped.
std::vector<StaticsReport> claimed_derivatives(const Scenario& s, double eta = 0.5);

}  // namespace greenfix::statics
