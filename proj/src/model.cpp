#include "greenfix/model.hpp"

#include <cmath>

#include <fmt/format.h>

namespace greenfix {
namespace {

struct Field {
  const char* name;
  double value;
};

void check_finite(std::initializer_list<Field> fields, ValidationErrorList& out) {
  for (const auto& f : fields) {
    if (!std::isfinite(f.value)) {
      out.push_back({ValidationCode::kNonFinite,
                     fmt::format("{} must be finite (got {})", f.name, f.value)});
    }
  }
}

void check_chain(const WelfareProfile& w, ValidationErrorList& out) {
  const Field chain[] = {{"w_D", w.w_D},
                         {"w_H", w.w_H},
                         {"w_H_prime", w.w_H_prime},
                         {"w_L", w.w_L},
                         {"w_G", w.w_G}};
  for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
    const Field& lo = chain[i];
    const Field& hi = chain[i + 1];
    // Non-finite entries are reported once, by the finiteness check.
    if (!std::isfinite(lo.value) || !std::isfinite(hi.value)) continue;
    if (!(lo.value < hi.value)) {
      out.push_back({ValidationCode::kWelfareOrder,
                     fmt::format("{} < {} violated ({}={}, {}={})", lo.name,
                                 hi.name, lo.name, lo.value, hi.name, hi.value)});
    }
  }
}

bool is_positive_integer(double n) {
  return std::isfinite(n) && n >= 1.0 && std::floor(n) == n && n <= 1e9;
}

}  // namespace

ScenarioCandidate ScenarioCandidate::from(const Scenario& s) {
  ScenarioCandidate c;
  c.welfare = s.welfare;
  c.g = s.enforcement.g;
  c.d = s.enforcement.d;
  c.n = static_cast<double>(s.enforcement.n);
  c.firms = s.firms;
  c.rho = s.belief.rho;
  c.delta1 = s.weights.delta1;
  c.delta2 = s.weights.delta2;
  return c;
}

ValidationErrorList validate_welfare(const WelfareProfile& w) {
  ValidationErrorList errors;
  check_finite({{"w_D", w.w_D},
                {"w_H", w.w_H},
                {"w_H_prime", w.w_H_prime},
                {"w_L", w.w_L},
                {"w_G", w.w_G}},
               errors);
  check_chain(w, errors);
  return errors;
}

ValidationResult validate_scenario(const ScenarioCandidate& raw) {
  ValidationErrorList errors = validate_welfare(raw.welfare);

  const FirmPayoffs& v = raw.firms;
  check_finite({{"g", raw.g},
                {"d", raw.d},
                {"v_D", v.v_D},
                {"v_G", v.v_G},
                {"v_H", v.v_H},
                {"v_L", v.v_L},
                {"v_H_prime", v.v_H_prime},
                {"rho", raw.rho},
                {"delta1", raw.delta1},
                {"delta2", raw.delta2}},
               errors);

  const bool g_ok = std::isfinite(raw.g);
  const bool d_ok = std::isfinite(raw.d);
  if (g_ok && d_ok && !(raw.g > raw.d)) {
    errors.push_back({ValidationCode::kFineNotAboveCost,
                      fmt::format("g > d violated (g={}, d={})", raw.g, raw.d)});
  }
  if (d_ok && raw.d < 0.0) {
    errors.push_back({ValidationCode::kNegativeCost,
                      fmt::format("d >= 0 violated (d={})", raw.d)});
  }

  const bool n_ok = is_positive_integer(raw.n);
  if (!n_ok) {
    errors.push_back({ValidationCode::kFirmCount,
                      fmt::format("n must be a positive integer (got {})", raw.n)});
  }

  const bool v_ok = std::isfinite(v.v_L) && std::isfinite(v.v_H_prime);
  if (v_ok && !(v.v_H_prime > v.v_L)) {
    errors.push_back({ValidationCode::kNoViolationTemptation,
                      fmt::format("v_H_prime > v_L violated (v_H_prime={}, v_L={})",
                                  v.v_H_prime, v.v_L)});
  }
  if (g_ok && n_ok && v_ok) {
    const double f = raw.g / raw.n;
    const double gain = v.v_H_prime - v.v_L;
    if (!(f > gain)) {
      errors.push_back(
          {ValidationCode::kFineBelowViolationGain,
           fmt::format("fine below violation gain (f={}, v_H_prime-v_L={})", f, gain)});
    }
  }

  if (std::isfinite(raw.rho) && !(raw.rho >= 0.0 && raw.rho <= 1.0)) {
    errors.push_back({ValidationCode::kBeliefRange,
                      fmt::format("rho must lie in [0,1] (got {})", raw.rho)});
  }

  const bool d1_ok = std::isfinite(raw.delta1);
  const bool d2_ok = std::isfinite(raw.delta2);
  if (d1_ok && !(raw.delta1 >= 0.0 && raw.delta1 <= 1.0)) {
    errors.push_back({ValidationCode::kWeightRange,
                      fmt::format("delta1 must lie in [0,1] (got {})", raw.delta1)});
  }
  if (d2_ok && !(raw.delta2 >= 0.0 && raw.delta2 <= 1.0)) {
    errors.push_back({ValidationCode::kWeightRange,
                      fmt::format("delta2 must lie in [0,1] (got {})", raw.delta2)});
  }
  if (d1_ok && d2_ok && std::abs(raw.delta1 + raw.delta2 - 1.0) > 1e-12) {
    errors.push_back({ValidationCode::kWeightSum,
                      fmt::format("delta1 + delta2 = 1 violated (sum={})",
                                  raw.delta1 + raw.delta2)});
  }

  if (!errors.empty()) return ValidationResult(std::move(errors));

  Scenario s;
  s.welfare = raw.welfare;
  s.enforcement = {raw.g, raw.d, static_cast<int>(raw.n)};
  s.firms = raw.firms;
  s.belief = {raw.rho};
  s.weights = {raw.delta1, raw.delta2};
  return ValidationResult(s);
}

ValidationResult validate_scenario(const Scenario& s) {
  return validate_scenario(ScenarioCandidate::from(s));
}

std::string describe(const ValidationErrorList& errors) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += "; ";
    out += e.message;
  }
  return out;
}

}  // namespace greenfix
