#include "greenfix/model.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "support/scenarios.hpp"

namespace greenfix {
namespace {

using testing::s1;

ScenarioCandidate s1_candidate() { return ScenarioCandidate::from(s1()); }

bool has_code(const ValidationErrorList& errors, ValidationCode code) {
  for (const auto& e : errors) {
    if (e.code == code) return true;
  }
  return false;
}

TEST(ValidateScenario, AcceptsReferenceScenario) {
  const ValidationResult r = validate_scenario(s1_candidate());
  ASSERT_TRUE(r.ok()) << describe(r.errors());
  EXPECT_EQ(r.scenario(), s1());
  EXPECT_DOUBLE_EQ(r.scenario().enforcement.per_firm_fine(), 5.0);
}

TEST(ValidateScenario, RejectsBrokenWelfareOrder) {
  ScenarioCandidate c = s1_candidate();
  c.welfare.w_L = 4.0;
  c.welfare.w_H_prime = 4.5;
  const ValidationResult r = validate_scenario(c);
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.errors().size(), 1u);
  EXPECT_EQ(r.errors()[0].code, ValidationCode::kWelfareOrder);
  EXPECT_NE(r.errors()[0].message.find("w_H_prime < w_L violated"), std::string::npos);
}

TEST(ValidateScenario, RejectsEqualAdjacentWelfare) {
  ScenarioCandidate c = s1_candidate();
  c.welfare.w_H = c.welfare.w_D;
  const ValidationResult r = validate_scenario(c);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.errors().size(), 1u);
  EXPECT_NE(r.errors()[0].message.find("w_D < w_H violated"), std::string::npos);
}

TEST(ValidateScenario, RejectsFineBelowViolationGain) {
  ScenarioCandidate c = s1_candidate();
  c.g = 3.0;  // f = 1.5 against a gain of 2
  const ValidationResult r = validate_scenario(c);
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.errors().size(), 1u);
  EXPECT_EQ(r.errors()[0].code, ValidationCode::kFineBelowViolationGain);
  EXPECT_NE(r.errors()[0].message.find("fine below violation gain"), std::string::npos);
}

TEST(ValidateScenario, AcceptsZeroInvestigationCost) {
  ScenarioCandidate c = s1_candidate();
  c.d = 0.0;
  EXPECT_TRUE(validate_scenario(c).ok());
}

TEST(ValidateScenario, RejectsEnforcementAndRangeProblems) {
  ScenarioCandidate c = s1_candidate();
  c.d = -1.0;
  EXPECT_TRUE(has_code(validate_scenario(c).errors(), ValidationCode::kNegativeCost));

  c = s1_candidate();
  c.d = 10.0;
  EXPECT_TRUE(has_code(validate_scenario(c).errors(), ValidationCode::kFineNotAboveCost));

  c = s1_candidate();
  c.n = 2.5;
  EXPECT_TRUE(has_code(validate_scenario(c).errors(), ValidationCode::kFirmCount));
  c.n = 0.0;
  EXPECT_TRUE(has_code(validate_scenario(c).errors(), ValidationCode::kFirmCount));

  c = s1_candidate();
  c.rho = 1.5;
  EXPECT_TRUE(has_code(validate_scenario(c).errors(), ValidationCode::kBeliefRange));

  c = s1_candidate();
  c.delta1 = 0.7;
  EXPECT_TRUE(has_code(validate_scenario(c).errors(), ValidationCode::kWeightSum));

  c = s1_candidate();
  c.firms.v_H_prime = c.firms.v_L;
  EXPECT_TRUE(has_code(validate_scenario(c).errors(), ValidationCode::kNoViolationTemptation));

  c = s1_candidate();
  c.welfare.w_G = std::numeric_limits<double>::quiet_NaN();
  const auto nan_errors = validate_scenario(c).errors();
  ASSERT_EQ(nan_errors.size(), 1u);
  EXPECT_EQ(nan_errors[0].code, ValidationCode::kNonFinite);
}

TEST(ValidateScenario, ReportsEveryIndependentViolation) {
  // Each mutation breaks exactly one constraint that no other mutation
  // touches; applying any subset must yield exactly that many errors.
  using Mutation = void (*)(ScenarioCandidate&);
  const Mutation mutations[] = {
      [](ScenarioCandidate& c) { c.welfare.w_D = 2.5; },        // w_D < w_H
      [](ScenarioCandidate& c) { c.welfare.w_G = 3.9; },        // w_L < w_G
      [](ScenarioCandidate& c) { c.rho = -0.25; },              // rho range
      [](ScenarioCandidate& c) { c.n = 1.5; },                  // firm count
      [](ScenarioCandidate& c) { c.delta2 = 0.25; },            // weight sum
      [](ScenarioCandidate& c) { c.firms.v_D = INFINITY; },     // finiteness
  };
  const int k = static_cast<int>(std::size(mutations));
  for (int mask = 0; mask < (1 << k); ++mask) {
    ScenarioCandidate c = s1_candidate();
    int expected = 0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1 << i)) {
        mutations[i](c);
        ++expected;
      }
    }
    const ValidationResult r = validate_scenario(c);
    if (expected == 0) {
      EXPECT_TRUE(r.ok());
    } else {
      ASSERT_FALSE(r.ok());
      EXPECT_EQ(static_cast<int>(r.errors().size()), expected) << describe(r.errors());
    }
  }
}

TEST(ValidateScenario, IdempotentOnRandomValidScenarios) {
  testing::ScenarioGenerator gen(7);
  for (int i = 0; i < 500; ++i) {
    const Scenario s = gen.scenario();
    const ValidationResult first = validate_scenario(s);
    ASSERT_TRUE(first.ok()) << describe(first.errors());
    const ValidationResult second = validate_scenario(first.scenario());
    ASSERT_TRUE(second.ok());
    EXPECT_EQ(second.scenario(), s);
  }
}

TEST(ValidateScenario, AcceptedWelfareChainIsStrict) {
  testing::ScenarioGenerator gen(11);
  for (int i = 0; i < 500; ++i) {
    ScenarioCandidate c = ScenarioCandidate::from(gen.scenario());
    // Snap each level to a coarse lattice so that ties occur often.
    for (double* x : {&c.welfare.w_D, &c.welfare.w_H, &c.welfare.w_H_prime, &c.welfare.w_L,
                      &c.welfare.w_G}) {
      *x = std::round(*x);
    }
    const ValidationResult r = validate_scenario(c);
    if (!r.ok()) continue;
    const WelfareProfile& w = r.scenario().welfare;
    EXPECT_LT(w.w_D, w.w_H);
    EXPECT_LT(w.w_H, w.w_H_prime);
    EXPECT_LT(w.w_H_prime, w.w_L);
    EXPECT_LT(w.w_L, w.w_G);
  }
}

}  // namespace
}  // namespace greenfix
