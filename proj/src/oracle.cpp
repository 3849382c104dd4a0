#include "greenfix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace greenfix::oracle {
namespace {

constexpr double kZ95 = 1.959963984540054;

PayoffVector& accumulate(PayoffVector& acc, double prob, const PayoffVector& leaf) {
  acc.regulator_welfare += prob * leaf.regulator_welfare;
  acc.firm_payoff += prob * leaf.firm_payoff;
  acc.inspector_payoff += prob * leaf.inspector_payoff;
  return acc;
}

// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Welford running mean and variance.
class RunningStat {
 public:
  void push(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }

  ComponentEstimate estimate() const {
    ComponentEstimate e;
    e.mean = mean_;
    const double var = n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
    e.std_error = std::sqrt(var / static_cast<double>(n_));
    e.ci_low = mean_ - kZ95 * e.std_error;
    e.ci_high = mean_ + kZ95 * e.std_error;
    return e;
  }

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace

PayoffVector leaf_payoffs(const Scenario& s, bool allow_collusion, bool high_cost,
                          bool violate, bool investigate) {
  const WelfareProfile& w = s.welfare;
  const FirmPayoffs& v = s.firms;
  if (!allow_collusion) {
    return high_cost ? PayoffVector{w.w_D, v.v_D, 0.0} : PayoffVector{w.w_G, v.v_G, 0.0};
  }
  const double g = s.enforcement.g;
  const double d = s.enforcement.d;
  if (high_cost) {
    // Justified high price; an investigation finds nothing.
    return {w.w_H, v.v_H, investigate ? -d : 0.0};
  }
  if (!violate) return {w.w_L, v.v_L, 0.0};
  if (investigate) return {w.w_H_prime, v.v_H_prime - s.enforcement.per_firm_fine(), g - d};
  return {w.w_H_prime, v.v_H_prime, 0.0};
}

PayoffVector game_tree_payoffs(const Scenario& s, const StrategyProfile& p) {
  const double rho = s.rho();
  PayoffVector acc;
  for (const bool high_cost : {true, false}) {
    const double p_cost = high_cost ? rho : 1.0 - rho;
    if (!p.allow_collusion) {
      accumulate(acc, p_cost, leaf_payoffs(s, false, high_cost, false, false));
      continue;
    }
    for (const bool violate : {true, false}) {
      // With a high cost the high price is the only option.
      const double p_violate = high_cost ? (violate ? 1.0 : 0.0) : (violate ? p.eta : 1.0 - p.eta);
      if (p_violate == 0.0) continue;
      const bool high_price = high_cost || violate;
      for (const bool investigate : {true, false}) {
        const double p_inspect =
            high_price ? (investigate ? p.mu : 1.0 - p.mu) : (investigate ? 0.0 : 1.0);
        if (p_inspect == 0.0) continue;
        accumulate(acc, p_cost * p_violate * p_inspect,
                   leaf_payoffs(s, true, high_cost, violate, investigate));
      }
    }
  }
  return acc;
}

DeviationReport best_response_check(const Scenario& s, const StrategyProfile& p) {
  DeviationReport r;
  StrategyProfile sub = p;
  sub.allow_collusion = true;
  const PayoffVector here = game_tree_payoffs(s, sub);

  double best_firm = here.firm_payoff;
  double best_inspector = here.inspector_payoff;
  for (const double pure : {0.0, 1.0}) {
    StrategyProfile firm_dev = sub;
    firm_dev.eta = pure;
    best_firm = std::max(best_firm, game_tree_payoffs(s, firm_dev).firm_payoff);

    StrategyProfile insp_dev = sub;
    insp_dev.mu = pure;
    best_inspector = std::max(best_inspector, game_tree_payoffs(s, insp_dev).inspector_payoff);
  }
  r.firm_gain = best_firm - here.firm_payoff;
  r.inspector_gain = best_inspector - here.inspector_payoff;

  StrategyProfile blocked = p;
  blocked.allow_collusion = false;
  r.welfare_collusion = here.regulator_welfare;
  r.welfare_no_collusion = game_tree_payoffs(s, blocked).regulator_welfare;
  r.regulator_consistent = p.allow_collusion ? r.welfare_collusion >= r.welfare_no_collusion
                                             : r.welfare_no_collusion >= r.welfare_collusion;
  return r;
}

double payoff_scale(const Scenario& s) {
  const double f = s.enforcement.per_firm_fine();
  return (1.0 - s.rho()) * std::max(f, s.enforcement.g - s.enforcement.d);
}

double discretization_bound(const Scenario& s, int grid_n) {
  return payoff_scale(s) / (2.0 * static_cast<double>(grid_n));
}

double default_epsilon(const Scenario& s, int grid_n) {
  return 4.0 * std::max(1.0, payoff_scale(s)) / static_cast<double>(grid_n);
}

EquilibriumSearchResult grid_equilibrium_search(const Scenario& s, int grid_n, double epsilon) {
  if (grid_n < 2) throw std::invalid_argument("grid_n must be at least 2");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");

  EquilibriumSearchResult result;
  result.grid_n = grid_n;
  result.epsilon = epsilon;
  const double n = static_cast<double>(grid_n);
  for (const bool allow : {true, false}) {
    for (int i = 0; i <= grid_n; ++i) {
      for (int j = 0; j <= grid_n; ++j) {
        const StrategyProfile p{allow, i / n, j / n};
        if (best_response_check(s, p).is_equilibrium(epsilon)) result.profiles.push_back(p);
      }
    }
  }
  return result;
}

MonteCarloEstimate monte_carlo_estimate(const Scenario& s, const StrategyProfile& p,
                                        std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
  std::mt19937_64 rng(seed);
  RunningStat regulator, firm, inspector;
  const double rho = s.rho();
  for (std::int64_t k = 0; k < n_samples; ++k) {
    const bool high_cost = uniform01(rng) < rho;
    bool violate = false;
    bool investigate = false;
    if (p.allow_collusion) {
      violate = !high_cost && uniform01(rng) < p.eta;
      if (high_cost || violate) investigate = uniform01(rng) < p.mu;
    }
    const PayoffVector leaf = leaf_payoffs(s, p.allow_collusion, high_cost, violate, investigate);
    regulator.push(leaf.regulator_welfare);
    firm.push(leaf.firm_payoff);
    inspector.push(leaf.inspector_payoff);
  }
  return {regulator.estimate(), firm.estimate(), inspector.estimate(), n_samples, seed};
}

}  // namespace greenfix::oracle
