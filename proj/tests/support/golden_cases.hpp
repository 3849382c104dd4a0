#pragma once

// CLI invocations whose output is pinned byte-for-byte under tests/golden.

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "greenfix/cli.hpp"

namespace greenfix::testing {

struct GoldenCase {
  std::string golden;             // file name under tests/golden
  std::vector<std::string> args;  // after the program name; "@" prefixes a fixture
};

inline void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.golden; }

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"solve_s1.json", {"solve", "--scenario", "@s1.json"}},
      {"solve_s1_rho09.csv", {"solve", "--scenario", "@s1_rho09.json", "--format", "csv"}},
      {"solve_s1_rho03.json", {"solve", "--scenario", "@s1_rho03.json"}},
      {"compare_s2.json", {"compare", "--scenario", "@s2.json"}},
      {"compare_s1_rho09.json", {"compare", "--scenario", "@s1_rho09.json"}},
      {"compare_s1_rho02.json", {"compare", "--scenario", "@s1_rho02.json"}},
      {"compare_s1_rho035.csv", {"compare", "--scenario", "@s1_rho035.json", "--format", "csv"}},
      {"sweep_s1_rho.csv",
       {"sweep", "--scenario", "@s1.json", "--param", "rho", "--from", "0.05", "--to", "0.95",
        "--steps", "19"}},
      {"sweep_s1_d.csv",
       {"sweep", "--scenario", "@s1.json", "--param", "d", "--from", "0.1", "--to", "9.9",
        "--steps", "15"}},
      {"sweep_s2_w_L.json",
       {"sweep", "--scenario", "@s2.json", "--param", "w_L", "--from", "2.5", "--to", "5.5",
        "--steps", "7", "--format", "json"}},
  };
  return cases;
}

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

// Runs the CLI in-process; "@name" arguments resolve to fixtures in data_dir.
inline CliResult run_cli(const std::vector<std::string>& args, const std::string& data_dir) {
  std::vector<std::string> owned{"greenfix"};
  for (const auto& a : args) {
    owned.push_back(a.size() > 1 && a[0] == '@' ? data_dir + "/fixtures/" + a.substr(1) : a);
  }
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace greenfix::testing
