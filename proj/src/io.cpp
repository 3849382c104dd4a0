#include "greenfix/io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>

namespace greenfix::io {
namespace {

using RawJson = nlohmann::json;

void reject_unknown(const RawJson& obj, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || a == key;
    if (!known) throw ParseError(fmt::format("unknown key '{}' in {}", key, where));
  }
}

const RawJson& member(const RawJson& obj, std::string_view where, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(fmt::format("missing key '{}' in {}", key, where));
  return *it;
}

double number(const RawJson& obj, std::string_view where, const char* key) {
  const RawJson& v = member(obj, where, key);
  if (!v.is_number()) throw ParseError(fmt::format("'{}' in {} must be a number", key, where));
  return v.get<double>();
}

const RawJson& object(const RawJson& obj, const char* key) {
  const RawJson& v = member(obj, "scenario", key);
  if (!v.is_object()) throw ParseError(fmt::format("'{}' must be an object", key));
  return v;
}

double round12(double x) { return std::stod(fmt::format("{:.12g}", x)); }

std::string csv_optional(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string("NA");
}

bool set_parameter(Scenario& s, std::string_view name, double value) {
  WelfareProfile& w = s.welfare;
  if (name == "rho") s.belief.rho = value;
  else if (name == "d") s.enforcement.d = value;
  else if (name == "g") s.enforcement.g = value;
  else if (name == "w_D") w.w_D = value;
  else if (name == "w_H") w.w_H = value;
  else if (name == "w_H_prime") w.w_H_prime = value;
  else if (name == "w_L") w.w_L = value;
  else if (name == "w_G") w.w_G = value;
  else return false;
  return true;
}

}  // namespace

ScenarioCandidate parse_scenario(std::string_view text) {
  RawJson root;
  try {
    root = RawJson::parse(text);
  } catch (const RawJson::parse_error& e) {
    throw ParseError(fmt::format("malformed JSON: {}", e.what()));
  }
  if (!root.is_object()) throw ParseError("scenario must be a JSON object");
  reject_unknown(root, "scenario", {"welfare", "enforcement", "firms", "rho", "weights"});

  ScenarioCandidate c;
  const RawJson& w = object(root, "welfare");
  reject_unknown(w, "welfare", {"w_D", "w_H", "w_H_prime", "w_L", "w_G"});
  c.welfare = {number(w, "welfare", "w_D"), number(w, "welfare", "w_H"),
               number(w, "welfare", "w_H_prime"), number(w, "welfare", "w_L"),
               number(w, "welfare", "w_G")};

  const RawJson& e = object(root, "enforcement");
  reject_unknown(e, "enforcement", {"g", "d", "n"});
  c.g = number(e, "enforcement", "g");
  c.d = number(e, "enforcement", "d");
  c.n = number(e, "enforcement", "n");

  const RawJson& f = object(root, "firms");
  reject_unknown(f, "firms", {"v_D", "v_G", "v_H", "v_L", "v_H_prime"});
  c.firms = {number(f, "firms", "v_D"), number(f, "firms", "v_G"), number(f, "firms", "v_H"),
             number(f, "firms", "v_L"), number(f, "firms", "v_H_prime")};

  c.rho = number(root, "scenario", "rho");

  const RawJson& wt = object(root, "weights");
  reject_unknown(wt, "weights", {"delta1", "delta2"});
  c.delta1 = number(wt, "weights", "delta1");
  c.delta2 = number(wt, "weights", "delta2");
  return c;
}

ScenarioCandidate load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot read scenario file '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
  RawJson j;
  const WelfareProfile& w = s.welfare;
  const FirmPayoffs& v = s.firms;
  j["welfare"] = {{"w_D", w.w_D}, {"w_H", w.w_H}, {"w_H_prime", w.w_H_prime},
                  {"w_L", w.w_L}, {"w_G", w.w_G}};
  j["enforcement"] = {{"g", s.enforcement.g}, {"d", s.enforcement.d}, {"n", s.enforcement.n}};
  j["firms"] = {{"v_D", v.v_D}, {"v_G", v.v_G}, {"v_H", v.v_H}, {"v_L", v.v_L},
                {"v_H_prime", v.v_H_prime}};
  j["rho"] = s.belief.rho;
  j["weights"] = {{"delta1", s.weights.delta1}, {"delta2", s.weights.delta2}};
  return j.dump(2) + "\n";
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.12g}", x);
}

Json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

Json to_json(const Scenario& s, const EquilibriumOutcome& o) {
  const StrategyProfile cont = subgame_perfect_profile(s, o);
  const auto& dg = o.diagnostics;
  Json j;
  j["rho"] = json_number(s.rho());
  j["regime"] = std::string(to_string(o.regime));
  j["collusion_allowed"] = o.collusion_allowed;
  j["eta"] = o.eta ? json_number(*o.eta) : Json(nullptr);
  j["mu"] = o.mu ? json_number(*o.mu) : Json(nullptr);
  j["inspector"] = std::string(to_string(o.inspector));
  j["boundary"] = o.boundary;
  j["thresholds"] = {{"rho_L", json_number(dg.rho_L)},
                     {"rho_H", json_number(dg.rho_H)},
                     {"rho_star_mixed", json_number(dg.rho_star_mixed)},
                     {"investigate_bound", json_number(dg.investigate_bound)}};
  j["incentive_ratio"] = json_number(dg.incentive_ratio.value);
  j["incentive_ratio_infinite"] = dg.incentive_ratio.infinite;
  j["continuation"] = {{"eta", json_number(cont.eta)}, {"mu", json_number(cont.mu)}};
  j["expected_welfare"] = {
      {"collusion", json_number(expected_welfare_collusion(s.rho(), cont.eta, s.welfare))},
      {"no_collusion", json_number(expected_welfare_no_collusion(s.rho(), s.welfare))}};
  return j;
}

Json to_json(const PolicyComparison& c) {
  Json j;
  j["regime"] = std::string(to_string(c.regime));
  j["e_pi_commitment"] = json_number(c.e_pi_commitment);
  j["e_pi_discretion"] = json_number(c.e_pi_discretion);
  j["preferred"] = std::string(to_string(c.preferred));
  j["d_threshold"] = json_number(c.d_threshold);
  j["margin"] = json_number(c.margin);
  return j;
}

Json to_json(const statics::StaticsReport& r) {
  Json j;
  j["target"] = std::string(statics::to_string(r.target));
  j["parameter"] = std::string(statics::to_string(r.parameter));
  j["step"] = json_number(r.step);
  j["estimate"] = json_number(r.estimate);
  j["claimed_sign"] = std::string(statics::to_string(r.claimed_sign));
  j["agrees"] = r.agrees;
  return j;
}

Json to_json(const oracle::EquilibriumSearchResult& r) {
  Json j;
  j["grid_n"] = r.grid_n;
  j["epsilon"] = json_number(r.epsilon);
  Json profiles = Json::array();
  for (const auto& p : r.profiles) {
    profiles.push_back(
        {{"allow_collusion", p.allow_collusion}, {"eta", json_number(p.eta)}, {"mu", json_number(p.mu)}});
  }
  j["profiles"] = std::move(profiles);
  return j;
}

Json to_json(const oracle::MonteCarloEstimate& e) {
  auto component = [](const oracle::ComponentEstimate& c) {
    return Json{{"mean", json_number(c.mean)},
                {"std_error", json_number(c.std_error)},
                {"ci_low", json_number(c.ci_low)},
                {"ci_high", json_number(c.ci_high)}};
  };
  Json j;
  j["n_samples"] = e.n_samples;
  j["seed"] = e.seed;
  j["regulator_welfare"] = component(e.regulator_welfare);
  j["firm_payoff"] = component(e.firm_payoff);
  j["inspector_payoff"] = component(e.inspector_payoff);
  return j;
}

void write_solve_csv(std::ostream& os, const Scenario& s, const EquilibriumOutcome& o) {
  const StrategyProfile cont = subgame_perfect_profile(s, o);
  const auto& dg = o.diagnostics;
  os << "rho,regime,collusion_allowed,eta,mu,inspector,boundary,rho_L,rho_H,"
        "rho_star_mixed,investigate_bound,incentive_ratio,e_w_collusion,e_w_no_collusion\n";
  os << format_number(s.rho()) << ',' << to_string(o.regime) << ','
     << (o.collusion_allowed ? "true" : "false") << ',' << csv_optional(o.eta) << ','
     << csv_optional(o.mu) << ',' << to_string(o.inspector) << ','
     << (o.boundary ? "true" : "false") << ',' << format_number(dg.rho_L) << ','
     << format_number(dg.rho_H) << ',' << format_number(dg.rho_star_mixed) << ','
     << format_number(dg.investigate_bound) << ',' << format_number(dg.incentive_ratio.value)
     << ',' << format_number(expected_welfare_collusion(s.rho(), cont.eta, s.welfare)) << ','
     << format_number(expected_welfare_no_collusion(s.rho(), s.welfare)) << '\n';
}

void write_policy_csv(std::ostream& os, const PolicyComparison& c) {
  os << "regime,e_pi_commitment,e_pi_discretion,preferred,d_threshold,margin\n";
  os << to_string(c.regime) << ',' << format_number(c.e_pi_commitment) << ','
     << format_number(c.e_pi_discretion) << ',' << to_string(c.preferred) << ','
     << (std::isnan(c.d_threshold) ? std::string("NA") : format_number(c.d_threshold)) << ','
     << format_number(c.margin) << '\n';
}

void write_statics_csv(std::ostream& os, const std::vector<statics::StaticsReport>& rows) {
  os << "target,parameter,step,estimate,claimed_sign,agrees\n";
  for (const auto& r : rows) {
    os << statics::to_string(r.target) << ',' << statics::to_string(r.parameter) << ','
       << format_number(r.step) << ',' << format_number(r.estimate) << ','
       << statics::to_string(r.claimed_sign) << ',' << (r.agrees ? "true" : "false") << '\n';
  }
}

std::string verdict_line(const PolicyComparison& c) {
  if (c.regime == PolicyRegime::kTrivialNoCollusion) {
    return "verdict: collusion blocked under both policies; no difference";
  }
  return fmt::format("verdict: {} preferred ({}, margin {})", to_string(c.preferred),
                     to_string(c.regime), format_number(c.margin));
}

std::vector<SweepRow> run_sweep(const Scenario& base, const SweepSpec& spec) {
  Scenario probe = base;
  if (!set_parameter(probe, spec.parameter, 0.0)) {
    throw std::invalid_argument(fmt::format("cannot sweep unknown parameter '{}'", spec.parameter));
  }
  if (!(spec.from < spec.to)) throw std::invalid_argument("sweep needs from < to");
  if (spec.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i) {
    SweepRow row;
    const int last = spec.steps - 1;
    row.value = (spec.from * (last - i) + spec.to * i) / last;
    Scenario s = base;
    set_parameter(s, spec.parameter, row.value);
    const ValidationResult v = validate_scenario(s);
    if (!v.ok()) {
      row.skip_reason = describe(v.errors());
      rows.push_back(std::move(row));
      continue;
    }
    const EquilibriumOutcome o = classify_equilibrium(s);
    const StrategyProfile cont = subgame_perfect_profile(s, o);
    row.e_w_collusion = expected_welfare_collusion(s.rho(), cont.eta, s.welfare);
    row.e_w_no_collusion = expected_welfare_no_collusion(s.rho(), s.welfare);
    row.preferred = compare_policies(s).preferred;
    row.outcome = o;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "value,regime,eta,e_w_collusion,e_w_no_collusion,preferred_policy,skip_reason\n";
  for (const auto& r : rows) {
    os << format_number(r.value) << ',';
    if (!r.outcome) {
      // Reasons are free text; quote them for CSV.
      std::string reason = r.skip_reason;
      for (std::size_t pos = 0; (pos = reason.find('"', pos)) != std::string::npos; pos += 2) {
        reason.insert(pos, 1, '"');
      }
      os << "skipped,NA,NA,NA,NA,\"" << reason << "\"\n";
      continue;
    }
    os << to_string(r.outcome->regime) << ',' << csv_optional(r.outcome->eta) << ','
       << format_number(r.e_w_collusion) << ',' << format_number(r.e_w_no_collusion) << ','
       << to_string(r.preferred) << ",\n";
  }
}

Json sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  Json j;
  j["parameter"] = spec.parameter;
  j["from"] = json_number(spec.from);
  j["to"] = json_number(spec.to);
  j["steps"] = spec.steps;
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["value"] = json_number(r.value);
    if (r.outcome) {
      row["regime"] = std::string(to_string(r.outcome->regime));
      row["eta"] = r.outcome->eta ? json_number(*r.outcome->eta) : Json(nullptr);
      row["e_w_collusion"] = json_number(r.e_w_collusion);
      row["e_w_no_collusion"] = json_number(r.e_w_no_collusion);
      row["preferred_policy"] = std::string(to_string(r.preferred));
    } else {
      row["skip_reason"] = r.skip_reason;
    }
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j;
}

}  // namespace greenfix::io
