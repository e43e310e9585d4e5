#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "descents/composition.hpp"
#include "descents/sawtooth.hpp"
#include "descents/stats.hpp"

namespace descents::analysis {

struct CheckReport {
  std::string name;
  std::string composition;
  bool applicable = true;  // degenerate cases report a skip
  bool pass = true;
  std::string detail;
  nlohmann::json data;
};

// Conditional first-particle density stays below 4 A^2 when every normalized
// kernel is bounded by A; conditioning runs over a grid of values for the
// third chain particle.
CheckReport density_bound_check(const Composition& c, const Rational& A, int grid_points = 201);

// |d'| of the first-particle density, conditioned on the fourth chain
// particle, against the constant 4 A^3 (K_A + 4 A K_A^2), K_A = 4 A^2.
CheckReport derivative_bound_report(const Composition& c, const Rational& A,
                                    int grid_points = 201);

struct GapReport {
  std::string composition;
  int grid = 0;
  Rational sup_gap;  // max |d(x,y) - d(x) d(y)| over the grid
  Rational cdf_gap;  // max over t and pin pairs of |F(t|y) - F(t|y')|
  double seconds = 0;
};

GapReport independence_gap(const Composition& c, int grid_k, int t_points = 101,
                           int y_points = 21);

// sup_t |F_{first|last=y} - F_first| <= K_A / (max interior run - 2).
CheckReport large_run_bound_check(const Composition& c, int t_points = 201);

// Exact conditional density of the first particle of the {2,b,2} chain given
// the last particle at y; y = 0 is the continuous limit.
Rational closed_form_db(int b, const Rational& x, const Rational& y);
CheckReport closed_form_db_check(int b, int grid_points = 21);

CheckReport alternating_asymptotic_check(int n_max);

// Exact total variation between the joint law of (sigma(i1), sigma(i2)) over
// the class and the product of its marginals (exhaustive enumeration).
Rational exact_position_tv(const Composition& c, int i1, int i2);

// Sampled Levy-Prokhorov upper bound for positions of the class permutation.
LPDistanceEstimate lp_independence_experiment(const Composition& c,
                                              const std::vector<int>& positions,
                                              long long samples, int bins, uint64_t seed);

CheckReport truncation_check(const Composition& c, int n, int t_points = 101);

// Exact CDF of the first particle given the last pinned at y, on a t-grid.
std::vector<Rational> first_given_last_cdf(const SawtoothModel& m, const Rational& y,
                                           const std::vector<Rational>& t_grid);

struct SuiteParams {
  int n_max = 0;          // 0 = suite default
  int grid = 0;
  long long samples = 0;
  int seeds = 0;
  uint64_t seed = 0x5eed5eedULL;
};

struct SuiteResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  nlohmann::json data;
};

const std::vector<std::string>& suite_names();
SuiteResult run_criterion(int index, const SuiteParams& params = {});
SuiteResult run_suite(const std::string& name, const SuiteParams& params = {});
std::vector<SuiteResult> run_all(const SuiteParams& params = {});

}  // namespace descents::analysis
