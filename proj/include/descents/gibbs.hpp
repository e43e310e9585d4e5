#pragma once

#include <functional>
#include <vector>

#include "descents/rng.hpp"
#include "descents/sawtooth.hpp"

namespace descents {

// Chain with black-box kernels for the numeric sampling path; densities must
// be nonnegative and nondecreasing on [0,1].
struct BlackBoxChain {
  std::vector<std::function<double(double)>> kernels;
  std::vector<Orientation> bonds;

  int particles() const { return static_cast<int>(bonds.size()) + 1; }
  bool particle_is_upper(int k) const;
};

// Double-precision view of an exact model, kernels normalized to unit mass.
BlackBoxChain black_box(const SawtoothModel& m);

// Single-site sweep sampler. Each update draws from the exact one-site
// conditional by adaptive-quadrature inverse CDF.
class GibbsChain {
 public:
  GibbsChain(BlackBoxChain model, uint64_t seed, double cdf_tol = 1e-10);

  void sweep();
  void run(int sweeps);
  const std::vector<double>& state() const { return x_; }
  double site_value(int k) const { return x_[static_cast<size_t>(k) - 1]; }
  // Freeze a site at a value; it is skipped by sweeps (conditioned chain).
  void clamp(int k, double v);

 private:
  double sample_site(int k);

  BlackBoxChain model_;
  std::vector<double> x_;
  std::vector<bool> clamped_;
  SplitMix64 rng_;
  double tol_;
};

}  // namespace descents
