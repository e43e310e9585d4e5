#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "descents/gibbs.hpp"
#include "descents/sampler.hpp"

using namespace descents;

namespace {

// Kolmogorov distance between sorted samples and an exact CDF
double ks_distance(std::vector<double> xs, const PiecewisePoly& cdf) {
  std::sort(xs.begin(), xs.end());
  double worst = 0;
  const double n = static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    double x = std::clamp(xs[i], 0.0, 1.0);
    double f = to_double(cdf(Rational(x)));  // dyadic, exact
    worst = std::max(worst, std::abs(f - (static_cast<double>(i) + 1) / n));
    worst = std::max(worst, std::abs(f - static_cast<double>(i) / n));
  }
  return worst;
}

}  // namespace

TEST_CASE("single bond, constant kernel: site conditional is uniform below the peak") {
  BlackBoxChain chain;
  chain.kernels.push_back([](double) { return 1.0; });
  chain.bonds.push_back(Orientation::Ascending);
  GibbsChain g(chain, 4242);
  g.clamp(2, 0.5);
  std::vector<double> xs;
  g.run(200);  // burn-in
  for (int i = 0; i < 20000; ++i) {
    g.sweep();
    xs.push_back(g.site_value(1));
  }
  // X_1 | Y_1 = 1/2 is uniform on [0, 1/2]
  double below_quarter = 0, above_half = 0;
  for (double x : xs) {
    if (x <= 0.25) ++below_quarter;
    if (x > 0.5) ++above_half;
  }
  CHECK(above_half == 0);
  CHECK(below_quarter / static_cast<double>(xs.size()) == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("chain samples converge to the exact first-particle marginal") {
  Composition c({2, 3});
  SawtoothModel m = model_from_composition(c);
  GibbsChain g(black_box(m), 99);
  g.run(500);
  std::vector<double> xs;
  const int sweeps = 100000;
  xs.reserve(sweeps);
  for (int i = 0; i < sweeps; ++i) {
    g.sweep();
    xs.push_back(g.site_value(1));
  }
  DensityReport exact = marginal_first(m);
  CHECK(ks_distance(std::move(xs), exact.cdf) < 0.02);
}

TEST_CASE("last-particle mean under a clamped first particle stays in the kernel band") {
  // runs {2, 6, 2}: with the first particle at 0, the last (a peak with a
  // constant adjacent kernel, R = 2) has mean in [1/2, 2/3]; the coarser
  // band [1/R, 1/(R-1)] = [1/2, 1] must hold as well
  SawtoothModel m = model_from_composition(Composition::from_run_lengths({2, 6, 2}));
  GibbsChain g(black_box(m), 2718);
  g.clamp(1, 0.0);
  g.run(500);
  double sum = 0;
  const int sweeps = 20000;
  for (int i = 0; i < sweeps; ++i) {
    g.sweep();
    sum += g.site_value(m.particles());
  }
  double mean = sum / sweeps;
  CHECK(mean >= 0.5 - 0.01);
  CHECK(mean <= 2.0 / 3.0 + 0.01);
  CHECK(mean <= 1.0);
}

TEST_CASE("negative densities are rejected") {
  BlackBoxChain chain;
  chain.kernels.push_back([](double t) { return t - 0.5; });
  chain.bonds.push_back(Orientation::Ascending);
  GibbsChain g(chain, 1);
  CHECK_THROWS_AS(g.run(3), std::domain_error);
}

TEST_CASE("most lower particles visit the boundary region") {
  // alternating size 6, upper particle 6 clamped: the window of lower
  // particles {3, 5} dips below eta = 1/4 much more often than the
  // complementary bound 1 - (3/4)^3 requires
  SawtoothModel m = model_from_composition(Composition::alternating(6));
  GibbsChain g(black_box(m), 555);
  g.clamp(6, 0.5);
  g.run(500);
  int visits = 0;
  const int sweeps = 20000;
  for (int i = 0; i < sweeps; ++i) {
    g.sweep();
    if (std::min(g.site_value(3), g.site_value(5)) < 0.25) ++visits;
  }
  double lower_bound = 1.0 - std::pow(0.75, 3) - 0.05;
  CHECK(static_cast<double>(visits) / sweeps >= lower_bound);
}

TEST_CASE("gibbs matches a nonpolynomial log-concave kernel chain") {
  // exp-kernel chain: increasing and log-concave, outside the exact path
  BlackBoxChain chain;
  auto kernel = [](double t) { return std::exp(2.0 * t) - 1.0; };
  chain.kernels = {kernel, kernel};
  chain.bonds = {Orientation::Ascending, Orientation::Descending};
  GibbsChain g(chain, 31415);
  g.run(300);
  // the middle particle is the peak; check P(peak <= t) against direct
  // numerical integration of the 3-particle chain
  std::vector<double> ys;
  for (int i = 0; i < 40000; ++i) {
    g.sweep();
    ys.push_back(g.site_value(2));
  }
  // d(y) ~ (int_0^y k)^2; with k = e^(2u)-1: int = (e^(2y)-1)/2 - y
  auto mass = [](double y) {
    double m = (std::exp(2.0 * y) - 1.0) / 2.0 - y;
    return m * m;
  };
  const int grid = 400;
  std::vector<double> cdf(grid + 1, 0.0);
  for (int i = 1; i <= grid; ++i) {
    double a = (i - 1.0) / grid, b = static_cast<double>(i) / grid;
    cdf[i] = cdf[i - 1] + (mass(a) + 4.0 * mass(0.5 * (a + b)) + mass(b)) * (b - a) / 6.0;
  }
  for (auto& v : cdf) v /= cdf[grid];
  std::sort(ys.begin(), ys.end());
  double worst = 0;
  for (size_t i = 0; i < ys.size(); ++i) {
    double y = ys[i];
    size_t cell = std::min<size_t>(grid, static_cast<size_t>(y * grid));
    double f = cdf[cell];  // grid resolution 1/400 is fine at this tolerance
    worst = std::max(worst, std::abs(f - static_cast<double>(i) / ys.size()));
  }
  CHECK(worst < 0.025);
}
