#include "descents/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <stdexcept>

namespace descents {

Dominance dominance_check(const std::vector<double>& cdf_a, const std::vector<double>& cdf_b,
                          double slack) {
  if (cdf_a.size() != cdf_b.size()) throw std::invalid_argument("mismatched grids");
  for (size_t i = 0; i < cdf_a.size(); ++i)
    if (cdf_b[i] > cdf_a[i] + slack) return Dominance::Incomparable;
  return Dominance::Dominates;
}

Dominance dominance_check(const std::vector<Rational>& cdf_a,
                          const std::vector<Rational>& cdf_b) {
  if (cdf_a.size() != cdf_b.size()) throw std::invalid_argument("mismatched grids");
  for (size_t i = 0; i < cdf_a.size(); ++i)
    if (cdf_b[i] > cdf_a[i]) return Dominance::Incomparable;
  return Dominance::Dominates;
}

double dkw_band(long long samples, double alpha) {
  if (samples <= 0) throw std::invalid_argument("need samples");
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(samples)));
}

double chi_square_pvalue(double stat, int dof) {
  if (dof < 1) throw std::invalid_argument("dof must be positive");
  boost::math::chi_squared dist(static_cast<double>(dof));
  if (stat <= 0) return 1.0;
  return boost::math::cdf(boost::math::complement(dist, stat));
}

EmpiricalJoint::EmpiricalJoint(int k) : k(k) {
  if (k < 1) throw std::invalid_argument("grid resolution must be positive");
  counts.assign(static_cast<size_t>(k) * static_cast<size_t>(k), 0);
}

void EmpiricalJoint::add(double x, double y) {
  auto bin = [this](double v) {
    int b = static_cast<int>(v * k);
    if (b < 0) b = 0;
    if (b >= k) b = k - 1;
    return b;
  };
  counts[static_cast<size_t>(bin(x) * k + bin(y))] += 1;
  total += 1;
}

std::vector<long long> EmpiricalJoint::marginal_x() const {
  std::vector<long long> m(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[static_cast<size_t>(i)] += count(i, j);
  return m;
}

std::vector<long long> EmpiricalJoint::marginal_y() const {
  std::vector<long long> m(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[static_cast<size_t>(j)] += count(i, j);
  return m;
}

double EmpiricalJoint::tv_against_product() const {
  if (total == 0) return 0.0;
  auto mx = marginal_x();
  auto my = marginal_y();
  const double n = static_cast<double>(total);
  double tv = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      double joint = static_cast<double>(count(i, j)) / n;
      double prod = (static_cast<double>(mx[static_cast<size_t>(i)]) / n) *
                    (static_cast<double>(my[static_cast<size_t>(j)]) / n);
      tv += std::abs(joint - prod);
    }
  return tv / 2.0;
}

LPDistanceEstimate lp_upper_bound(const EmpiricalJoint& joint) {
  LPDistanceEstimate est;
  est.delta = 1.0 / joint.k;
  est.tv = joint.tv_against_product();
  est.bound = est.delta * std::sqrt(2.0) + est.tv;
  return est;
}

}  // namespace descents
