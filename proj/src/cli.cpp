#include "greenfix/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "greenfix/oracle.hpp"
#include "greenfix/policy.hpp"
#include "greenfix/statics.hpp"

namespace greenfix::cli {
namespace {

struct CommonArgs {
  std::string scenario;
  std::string out;
  std::string format;
};

// Loads and validates; on failure reports to err and returns the exit code.
std::variant<Scenario, int> load(const std::string& path, std::ostream& err) {
  ScenarioCandidate c;
  try {
    c = io::load_scenario(path);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  const ValidationResult v = validate_scenario(c);
  if (!v.ok()) {
    err << "error: scenario '" << path << "' is invalid:\n";
    for (const auto& e : v.errors()) err << "  " << e.message << '\n';
    return kExitValidation;
  }
  return v.scenario();
}

// Writes to --out when given, otherwise to out.
int emit(const CommonArgs& args, const std::string& text, std::ostream& out, std::ostream& err) {
  if (args.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << args.out << "'\n";
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonArgs& args, const std::string& default_format) {
  cmd->add_option("--scenario", args.scenario, "Scenario JSON file")->required();
  cmd->add_option("--out", args.out, "Write output here instead of stdout");
  args.format = default_format;
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

int cmd_solve(const CommonArgs& args, std::ostream& out, std::ostream& err) {
  auto loaded = load(args.scenario, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const Scenario& s = std::get<Scenario>(loaded);
  const EquilibriumOutcome o = classify_equilibrium(s);
  std::ostringstream text;
  if (args.format == "csv") {
    io::write_solve_csv(text, s, o);
  } else {
    text << io::to_json(s, o).dump(2) << '\n';
  }
  return emit(args, text.str(), out, err);
}

int cmd_compare(const CommonArgs& args, std::ostream& out, std::ostream& err) {
  auto loaded = load(args.scenario, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const PolicyComparison c = compare_policies(std::get<Scenario>(loaded));
  std::ostringstream text;
  if (args.format == "csv") {
    io::write_policy_csv(text, c);
  } else {
    text << io::to_json(c).dump(2) << '\n' << io::verdict_line(c) << '\n';
  }
  return emit(args, text.str(), out, err);
}

int cmd_sweep(const CommonArgs& args, const io::SweepSpec& spec, std::ostream& out,
              std::ostream& err) {
  auto loaded = load(args.scenario, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  std::vector<io::SweepRow> rows;
  try {
    rows = io::run_sweep(std::get<Scenario>(loaded), spec);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::ostringstream text;
  if (args.format == "json") {
    text << io::sweep_to_json(spec, rows).dump(2) << '\n';
  } else {
    io::write_sweep_csv(text, rows);
  }
  return emit(args, text.str(), out, err);
}

int cmd_statics(const CommonArgs& args, double eta, std::ostream& out, std::ostream& err) {
  auto loaded = load(args.scenario, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const auto rows = statics::claimed_derivatives(std::get<Scenario>(loaded), eta);
  std::ostringstream text;
  if (args.format == "json") {
    io::Json arr = io::Json::array();
    for (const auto& r : rows) arr.push_back(io::to_json(r));
    text << arr.dump(2) << '\n';
  } else {
    io::write_statics_csv(text, rows);
  }
  return emit(args, text.str(), out, err);
}

int cmd_verify(const CommonArgs& args, const VerifyOptions& options, const Classifier& classifier,
               std::ostream& out, std::ostream& err) {
  auto loaded = load(args.scenario, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  VerifyReport report;
  try {
    report = run_verify(std::get<Scenario>(loaded), options, classifier);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const int written = emit(args, report.json.dump(2) + "\n", out, err);
  if (written != kExitOk) return written;
  if (!report.pass) {
    err << "verification failed:\n";
    for (const auto& d : report.diffs) err << "  " << d << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

io::Json profile_json(const StrategyProfile& p) {
  return {{"allow_collusion", p.allow_collusion},
          {"eta", io::json_number(p.eta)},
          {"mu", io::json_number(p.mu)}};
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("GREENFIX_SEED");
  if (env == nullptr) return kDefaultSeed;
  const std::string_view text(env);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return kDefaultSeed;
  return value;
}

VerifyReport run_verify(const Scenario& s, const VerifyOptions& options,
                        const Classifier& classifier) {
  const EquilibriumOutcome outcome = classifier(s);
  const StrategyProfile expected = subgame_perfect_profile(s, outcome);
  const double epsilon = options.epsilon.value_or(oracle::default_epsilon(s, options.grid_n));
  const oracle::EquilibriumSearchResult search =
      oracle::grid_equilibrium_search(s, options.grid_n, epsilon);

  VerifyReport report;
  const double tolerance = 1.0 / options.grid_n + 1e-12;

  std::optional<StrategyProfile> nearest;
  double nearest_dist = std::numeric_limits<double>::infinity();
  int allow_mismatches = 0;
  for (const auto& p : search.profiles) {
    if (p.allow_collusion != expected.allow_collusion) {
      ++allow_mismatches;
      continue;
    }
    const double dist = std::max(std::abs(p.eta - expected.eta), std::abs(p.mu - expected.mu));
    if (dist < nearest_dist) {
      nearest_dist = dist;
      nearest = p;
    }
  }
  if (!nearest || nearest_dist > tolerance) {
    report.diffs.push_back(fmt::format(
        "no epsilon-equilibrium within {} of closed form (allow={}, eta={}, mu={}); nearest "
        "distance {}",
        io::format_number(1.0 / options.grid_n), expected.allow_collusion,
        io::format_number(expected.eta), io::format_number(expected.mu),
        io::format_number(nearest_dist)));
  }
  if (allow_mismatches > 0 && !outcome.boundary) {
    report.diffs.push_back(fmt::format(
        "{} epsilon-equilibria take the opposite exemption decision (closed form allow={})",
        allow_mismatches, expected.allow_collusion));
  }

  const oracle::PayoffVector exact = oracle::game_tree_payoffs(s, expected);
  const oracle::MonteCarloEstimate mc =
      oracle::monte_carlo_estimate(s, expected, options.n_samples, options.seed);
  auto check_mc = [&](const char* name, const oracle::ComponentEstimate& c, double x) {
    const double err = std::abs(c.mean - x);
    const bool ok = c.std_error > 0.0 ? err <= 5.0 * c.std_error
                                      : err <= 1e-9 * std::max(1.0, std::abs(x));
    if (!ok) {
      report.diffs.push_back(fmt::format("monte-carlo {} mean {} vs exact {} (std error {})", name,
                                         io::format_number(c.mean), io::format_number(x),
                                         io::format_number(c.std_error)));
    }
  };
  check_mc("regulator_welfare", mc.regulator_welfare, exact.regulator_welfare);
  check_mc("firm_payoff", mc.firm_payoff, exact.firm_payoff);
  check_mc("inspector_payoff", mc.inspector_payoff, exact.inspector_payoff);

  report.pass = report.diffs.empty();

  io::Json& j = report.json;
  j["closed_form"] = {{"regime", std::string(to_string(outcome.regime))},
                      {"boundary", outcome.boundary},
                      {"profile", profile_json(expected)}};
  j["oracle"] = {{"grid_n", search.grid_n},
                 {"epsilon", io::json_number(search.epsilon)},
                 {"profiles_found", search.profiles.size()},
                 {"allow_mismatches", allow_mismatches},
                 {"nearest", nearest ? profile_json(*nearest) : io::Json(nullptr)},
                 {"nearest_distance", io::json_number(nearest_dist)}};
  j["exact_payoffs"] = {{"regulator_welfare", io::json_number(exact.regulator_welfare)},
                        {"firm_payoff", io::json_number(exact.firm_payoff)},
                        {"inspector_payoff", io::json_number(exact.inspector_payoff)}};
  j["monte_carlo"] = io::to_json(mc);
  j["pass"] = report.pass;
  j["diff"] = report.diffs;
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const Classifier& classifier) {
  CLI::App app{"Equilibrium engine for the green-exemption inspection game", "greenfix"};
  app.require_subcommand(1);

  CommonArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Classify the equilibrium of a scenario");
  add_common(solve, solve_args, "json");

  CommonArgs compare_args;
  auto* compare = app.add_subcommand("compare", "Compare commitment and discretion policies");
  add_common(compare, compare_args, "json");

  CommonArgs sweep_args;
  io::SweepSpec spec;
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter over a uniform grid");
  add_common(sweep, sweep_args, "csv");
  sweep->add_option("--param", spec.parameter, "rho, d, g, w_D, w_H, w_H_prime, w_L or w_G")
      ->required();
  sweep->add_option("--from", spec.from, "First grid value")->required();
  sweep->add_option("--to", spec.to, "Last grid value")->required();
  sweep->add_option("--steps", spec.steps, "Number of grid points (>= 2)")->required();

  CommonArgs statics_args;
  double statics_eta = 0.5;
  auto* statics_cmd = app.add_subcommand("statics", "Finite-difference comparative statics");
  add_common(statics_cmd, statics_args, "csv");
  statics_cmd->add_option("--eta", statics_eta, "Evaluation point for rho*(eta)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  CommonArgs verify_args;
  VerifyOptions verify_opts;
  verify_opts.seed = default_seed();
  double epsilon = -1.0;
  auto* verify = app.add_subcommand("verify", "Check closed forms against the brute-force oracle");
  add_common(verify, verify_args, "json");
  verify->add_option("--grid-n", verify_opts.grid_n, "Grid intervals per probability axis")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  verify->add_option("--epsilon", epsilon, "Deviation tolerance (default 4*max(1, scale)/grid_n)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", verify_opts.n_samples, "Monte-Carlo samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "Monte-Carlo seed (default $GREENFIX_SEED or 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*solve) return cmd_solve(solve_args, out, err);
  if (*compare) return cmd_compare(compare_args, out, err);
  if (*sweep) return cmd_sweep(sweep_args, spec, out, err);
  if (*statics_cmd) return cmd_statics(statics_args, statics_eta, out, err);
  if (epsilon >= 0.0) verify_opts.epsilon = epsilon;
  return cmd_verify(verify_args, verify_opts, classifier, out, err);
}

}  // namespace greenfix::cli
