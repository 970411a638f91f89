#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sweep.hpp"

namespace bbrc {

struct CheckResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions

  void expect(bool ok, const std::function<std::string()>& describe);
  void merge(const CheckResult& other);
  bool passed() const { return failures == 0; }
  std::string line() const;
};

std::vector<std::string> suite_names();
// Throws errc::unknown_suite for unrecognized names.
CheckResult run_one_suite(const std::string& name);

struct SuiteRun {
  std::vector<CheckResult> results;
  bool all_passed() const;
  std::string report() const;  // one line per suite plus a JSON summary line
};
SuiteRun run_suites(const std::vector<std::string>& names);

namespace checks {

struct Grid {
  std::vector<int> alphabets;
  int max_m = 1;
  int width_cap = 1;
};

// golden replays of the worked examples
CheckResult golden_boxball();
CheckResult golden_energy();
CheckResult golden_phi();
CheckResult golden_rc_operators();
CheckResult golden_lambda_shapes();
CheckResult golden_lsym();
CheckResult golden_convex();
CheckResult golden_evolved_rc();
CheckResult paper_tables();

// parameterized verification
CheckResult first_shape_grid(const Grid& g, int random_samples, int random_width_cap,
                             std::uint64_t seed);
CheckResult conjecture_grid(const Grid& g, int random_samples, int random_width_cap,
                            std::uint64_t seed);
CheckResult energy_identity(const Grid& g, int max_s, int max_ell);
CheckResult bijection_round_trip(const Grid& g);
CheckResult r_invariance(const Grid& g);
CheckResult yang_baxter(int max_n, int width_cap, int rational_trials, std::uint64_t seed);
CheckResult crystal_commutation(const Grid& g);
CheckResult rigging_shift(const Grid& g, int max_r, int max_s);
CheckResult lemma_tau(int max_total);
CheckResult lsym_invariance(int max_n, int max_m, int trials, std::uint64_t seed);
CheckResult noncrossing_vs_schur(int max_n, int max_m);
CheckResult cell_transfer(int max_n, int max_m);
CheckResult convex_random(int samples, std::uint64_t seed);
CheckResult soliton_checks(const Grid& g);

}  // namespace checks

}  // namespace bbrc
