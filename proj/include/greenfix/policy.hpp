#pragma once

// Social-planner comparison of a committed "always investigate" inspector
// against the discretionary one.

#include <string_view>

#include "greenfix/equilibrium.hpp"
#include "greenfix/model.hpp"

namespace greenfix {

enum class Policy { kCommitment, kDiscretion };

enum class PolicyRegime {
  kHighRho,            // discretion: collusion allowed, no investigation, always violate
  kIntermediateRho,    // discretion: collusion allowed, mixed violation
  kSmallRho,           // discretion blocks collusion, commitment allows it
  kTrivialNoCollusion  // both policies block collusion
};

enum class Preference { kCommitment, kDiscretion, kIndifferent };

std::string_view to_string(Policy p);
std::string_view to_string(PolicyRegime r);
std::string_view to_string(Preference p);

inline constexpr double kIndifferenceTolerance = 1e-12;

// delta1 * w + delta2 * h * (g * k - d), with h the investigation indicator
// and k the violation indicator.
double social_objective(double w_realized, bool investigated, bool violated,
                        const SocialWeights& weights, double g, double d);

// Under commitment firms never violate, so collusion is allowed iff rho > rho_L.
double commitment_collusion_threshold(const WelfareProfile& w);

double expected_social_welfare(const Scenario& s, Policy policy);

struct PolicyComparison {
  PolicyRegime regime = PolicyRegime::kTrivialNoCollusion;
  double e_pi_commitment = 0.0;
  double e_pi_discretion = 0.0;
  Preference preferred = Preference::kIndifferent;
  // Critical investigation cost for this regime. Commitment is preferred for
  // d below it (HighRho, SmallRho) or above it (IntermediateRho). NaN for the
  // trivial regime.
  double d_threshold = 0.0;
  double margin = 0.0;  // e_pi_commitment - e_pi_discretion
};

PolicyComparison compare_policies(const Scenario& s);

// Verdict obtained from the regime's d-threshold alone.
Preference preferred_by_threshold(const PolicyComparison& c, double d);

// The small-rho threshold with a plus sign on the (w_G - w_L) term, as it is
// sometimes quoted. It disagrees with the direct welfare comparison; kept
// only to demonstrate the discrepancy.
double small_rho_threshold_plus_form(const Scenario& s);

}  // namespace greenfix
