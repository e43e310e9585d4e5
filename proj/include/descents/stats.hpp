#pragma once

#include <vector>

#include "descents/rational.hpp"

namespace descents {

enum class Dominance { Dominates, Incomparable };

// Does the law behind cdf_b stochastically dominate the one behind cdf_a?
// CDF criterion: F_b <= F_a pointwise, up to the slack band.
Dominance dominance_check(const std::vector<double>& cdf_a, const std::vector<double>& cdf_b,
                          double slack = 0.0);
Dominance dominance_check(const std::vector<Rational>& cdf_a,
                          const std::vector<Rational>& cdf_b);

// Half-width of the Dvoretzky-Kiefer-Wolfowitz band at confidence 1 - alpha.
double dkw_band(long long samples, double alpha);

// P(chi2_dof >= stat)
double chi_square_pvalue(double stat, int dof);

// Binned sample counts on a k x k grid over [0,1]^2.
struct EmpiricalJoint {
  explicit EmpiricalJoint(int k);

  void add(double x, double y);
  long long count(int i, int j) const { return counts[static_cast<size_t>(i * k + j)]; }
  std::vector<long long> marginal_x() const;
  std::vector<long long> marginal_y() const;
  // (1/2) sum_ij | c_ij/N - (r_i/N)(s_j/N) |
  double tv_against_product() const;

  int k;
  std::vector<long long> counts;
  long long total = 0;
};

struct LPDistanceEstimate {
  double delta = 0;  // bin width
  double tv = 0;     // binned total variation
  double bound = 0;  // delta * sqrt(2) + tv
};

LPDistanceEstimate lp_upper_bound(const EmpiricalJoint& joint);

}  // namespace descents
