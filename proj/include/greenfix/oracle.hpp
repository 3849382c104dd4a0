#pragma once

// Brute-force checks of the game that do not use any closed-form threshold:
// exact expectation over the game tree, unilateral-deviation tests, a grid
// search for epsilon-equilibria and a seeded Monte-Carlo estimate.

#include <cstdint>
#include <vector>

#include "greenfix/model.hpp"

namespace greenfix::oracle {

struct PayoffVector {
  double regulator_welfare = 0.0;
  double firm_payoff = 0.0;  // per firm
  double inspector_payoff = 0.0;
};

// Payoffs at one terminal node of the game tree.
PayoffVector leaf_payoffs(const Scenario& s, bool allow_collusion, bool high_cost,
                          bool violate, bool investigate);

// Exact expected payoffs, enumerating every chance and strategy branch.
PayoffVector game_tree_payoffs(const Scenario& s, const StrategyProfile& p);

struct DeviationReport {
  // Best gain from a unilateral deviation to a pure strategy, evaluated in the
  // collusion subgame (so off-path continuations are checked too).
  double firm_gain = 0.0;
  double inspector_gain = 0.0;
  // Expected welfare under collusion and under competition at the profile's
  // eta and mu.
  double welfare_collusion = 0.0;
  double welfare_no_collusion = 0.0;
  // The exemption decision is a best reply to the continuation (ties accept
  // either decision).
  bool regulator_consistent = false;

  bool is_equilibrium(double epsilon) const {
    return regulator_consistent && firm_gain <= epsilon && inspector_gain <= epsilon;
  }
};

DeviationReport best_response_check(const Scenario& s, const StrategyProfile& p);

struct EquilibriumSearchResult {
  std::vector<StrategyProfile> profiles;
  int grid_n = 0;
  double epsilon = 0.0;
};

// Most a deviation gain can change per unit change in the opponent's mixing
// probability: (1 - rho) * max(f, g - d). The regulator's check is exact and
// does not enter.
double payoff_scale(const Scenario& s);

// payoff_scale / (2 * grid_n): no deviation gain at the grid point nearest an
// exact equilibrium of the collusion subgame exceeds this.
double discretization_bound(const Scenario& s, int grid_n);

// 4 * max(1, payoff_scale) / grid_n.
double default_epsilon(const Scenario& s, int grid_n);

// Enumerates allow x eta-grid x mu-grid ((grid_n + 1)^2 points per exemption
// decision) and keeps every epsilon-equilibrium, in grid order.
// Throws std::invalid_argument if grid_n < 2 or epsilon < 0.
EquilibriumSearchResult grid_equilibrium_search(const Scenario& s, int grid_n, double epsilon);

struct ComponentEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  bool covers(double x) const { return ci_low <= x && x <= ci_high; }
};

struct MonteCarloEstimate {
  ComponentEstimate regulator_welfare;
  ComponentEstimate firm_payoff;
  ComponentEstimate inspector_payoff;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

// Samples the cost realization, the violation draw and the investigation
// draw n_samples times. The generator is std::mt19937_64 with uniforms built
// from the top 53 bits of each output, so results depend only on the seed.
// Confidence intervals are 95% normal approximations.
// Throws std::invalid_argument if n_samples < 1.
MonteCarloEstimate monte_carlo_estimate(const Scenario& s, const StrategyProfile& p,
                                        std::int64_t n_samples, std::uint64_t seed);

}  // namespace greenfix::oracle
