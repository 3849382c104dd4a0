#pragma once

// Reference scenarios, randomized generators and bisection oracles shared by
// the unit tests and the acceptance suite. The generators use the classifier
// to place rho inside a regime; the bisection oracles use only the game tree.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "greenfix/equilibrium.hpp"
#include "greenfix/model.hpp"
#include "greenfix/oracle.hpp"

namespace greenfix::testing {

// S1: w = (0,2,3,4,5), g = 10, d = 2, n = 2 (f = 5), v_L = 3, v_H' = 5.
inline Scenario s1(double rho = 0.5) {
  Scenario s;
  s.welfare = {0.0, 2.0, 3.0, 4.0, 5.0};
  s.enforcement = {10.0, 2.0, 2};
  s.firms = {1.0, 2.0, 4.0, 3.0, 5.0};
  s.belief = {rho};
  s.weights = {0.5, 0.5};
  return s;
}

// S2: S1 welfare with g = 0.5, d = 0.4 and rho = 0.6. One firm (f = 0.5) with
// a violation gain of 0.25 keeps the fine above the gain.
inline Scenario s2() {
  Scenario s = s1(0.6);
  s.enforcement = {0.5, 0.4, 1};
  s.firms = {1.0, 2.0, 4.0, 3.0, 3.25};
  return s;
}

class ScenarioGenerator {
 public:
  explicit ScenarioGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  WelfareProfile welfare() {
    WelfareProfile w;
    w.w_D = uniform(-5.0, 5.0);
    w.w_H = w.w_D + uniform(0.2, 3.0);
    w.w_H_prime = w.w_H + uniform(0.2, 3.0);
    w.w_L = w.w_H_prime + uniform(0.2, 3.0);
    w.w_G = w.w_L + uniform(0.2, 3.0);
    return w;
  }

  // Any valid scenario, rho uniform on (0,1).
  Scenario scenario() {
    Scenario s;
    s.welfare = welfare();
    const double g = uniform(1.0, 20.0);
    const int n = std::uniform_int_distribution<int>(1, 4)(rng_);
    s.enforcement = {g, g * uniform(0.05, 0.6), n};
    const double f = g / n;
    s.firms.v_L = uniform(-2.0, 5.0);
    s.firms.v_H_prime = s.firms.v_L + f * uniform(0.1, 0.9);
    s.firms.v_D = uniform(-5.0, 5.0);
    s.firms.v_G = uniform(-5.0, 5.0);
    s.firms.v_H = uniform(-5.0, 5.0);
    s.belief.rho = uniform(0.0, 1.0);
    const double d1 = uniform(0.0, 1.0);
    s.weights = {d1, 1.0 - d1};
    return s;
  }

  // A scenario whose discretionary equilibrium is `target`, with rho kept at
  // least `margin` away from every regime boundary. Throws after many
  // unsuccessful draws.
  Scenario scenario_in(Regime target, double margin = 0.05) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      Scenario s = scenario();
      const EquilibriumOutcome probe = classify_equilibrium(s);
      const auto& dg = probe.diagnostics;
      const double bound = dg.investigate_bound;
      const bool ratio_above = dg.incentive_ratio.value > 1.0;
      double lo = 0.0;
      double hi = 1.0;
      switch (target) {
        case Regime::kPureAlwaysViolate:
          lo = std::max(bound, dg.rho_H);
          break;
        case Regime::kMixedViolation:
          if (!ratio_above) continue;
          lo = dg.rho_star_mixed;
          hi = bound;
          break;
        case Regime::kNoCollusion:
          hi = ratio_above ? std::min(dg.rho_star_mixed, bound) : dg.rho_H;
          break;
        case Regime::kNoViolationDeterred:
          throw std::invalid_argument("generator needs d > 0");
      }
      if (hi - lo <= 2.0 * margin) continue;
      s.belief.rho = uniform(lo + margin, hi - margin);
      if (std::abs(s.rho() - bound) < margin) continue;
      if (classify_equilibrium(s).regime != target) {
        throw std::logic_error("generator produced a scenario outside the target regime");
      }
      return s;
    }
    throw std::runtime_error("could not draw a scenario in the requested regime");
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Root of a function with a sign change on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double f_lo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Regulator's gain from allowing collusion, read off the game tree.
inline double tree_collusion_gain(Scenario s, double rho, double eta) {
  s.belief.rho = rho;
  const double allowed =
      oracle::game_tree_payoffs(s, {true, eta, 0.0}).regulator_welfare;
  const double blocked =
      oracle::game_tree_payoffs(s, {false, eta, 0.0}).regulator_welfare;
  return allowed - blocked;
}

// Belief at which the regulator is indifferent, for fixed eta.
inline double crossing_threshold(const Scenario& s, double eta) {
  return bisect([&](double rho) { return tree_collusion_gain(s, rho, eta); }, 0.0, 1.0);
}

// Violation probability that zeroes the always-investigating inspector's
// expected payoff at belief rho.
inline double indifference_eta(Scenario s, double rho) {
  s.belief.rho = rho;
  return bisect(
      [&](double eta) { return oracle::game_tree_payoffs(s, {true, eta, 1.0}).inspector_payoff; },
      0.0, 1.0);
}

// Belief at which the regulator is indifferent once eta follows inspector
// indifference; searched on (0, hi).
inline double crossing_threshold_mixed(const Scenario& s, double hi) {
  return bisect([&](double rho) { return tree_collusion_gain(s, rho, indifference_eta(s, rho)); },
                1e-12, hi);
}

// Investigation probability at which firms are indifferent about violating.
inline double indifference_mu(const Scenario& s) {
  return bisect(
      [&](double mu) {
        const double violate = oracle::game_tree_payoffs(s, {true, 1.0, mu}).firm_payoff;
        const double comply = oracle::game_tree_payoffs(s, {true, 0.0, mu}).firm_payoff;
        return violate - comply;
      },
      0.0, 1.0);
}

}  // namespace greenfix::testing
