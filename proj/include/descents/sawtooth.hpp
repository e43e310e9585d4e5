#pragma once

#include <optional>
#include <string>
#include <vector>

#include "descents/composition.hpp"
#include "descents/piecewise.hpp"

namespace descents {

// Chain of particles w_1..w_m in [0,1]; bond k constrains w_k and w_{k+1}
// (Ascending: w_k <= w_{k+1}) and weights the gap with kernels[k]:
//   density(w) ~ prod_k kernels[k](|w_{k+1} - w_k|) * 1_{bond}
// Upper particles are the local maxima of the chain, lower ones the minima.
struct SawtoothModel {
  std::vector<Poly> kernels;
  std::vector<Orientation> bonds;    // bonds.size() == kernels.size()
  std::vector<int> run_lengths;      // set when built from a composition
  bool normalized = false;

  int particles() const { return static_cast<int>(bonds.size()) + 1; }
  // 1-based particle index.
  bool particle_is_upper(int k) const;
  ModelType type() const;
  std::string particle_label(int k) const;  // "X_1", "Y_2", ...

  SawtoothModel reversed() const;
  SawtoothModel normalized_copy() const;
  // Keep the first k particles and the bonds between them.
  SawtoothModel truncated_to(int k) const;
};

// gamma~_l(t) = t^(l-2) / (l-2)!, the kernel a run of length l contributes.
Poly gamma_kernel(int run_length);
// (l-1) t^(l-2), its unit-mass version.
Poly gamma_density(int run_length);

// Non-renormalized model of a composition: one kernel per run.
SawtoothModel model_from_composition(const Composition& c);

Rational volume(const SawtoothModel& m);

struct Pin {
  int particle = 0;  // 1-based
  Rational value;
};

// Integral of the chain over particles 1..target-1 (from_left) or
// target+1..particles (otherwise), with pinned particles substituted instead
// of integrated and floor constraints w_k >= floors[k-1] applied where set.
// The result is a function of w_target.
PiecewisePoly sweep(const SawtoothModel& m, int target, const std::vector<Pin>& pins,
                    bool from_left,
                    const std::vector<std::optional<Rational>>& floors = {});

// Total chain mass with the given pins evaluated and floors applied.
Rational pinned_mass(const SawtoothModel& m, const std::vector<Pin>& pins,
                     const std::vector<std::optional<Rational>>& floors = {});

struct DensityReport {
  std::string variable;
  std::string conditioning;
  PiecewisePoly density;  // integrates to 1
  PiecewisePoly cdf;      // prefix integral of density; cdf(1) = 1
  Rational normalizer;    // raw mass divided out
};

DensityReport marginal(const SawtoothModel& m, int particle);
DensityReport marginal_first(const SawtoothModel& m);
DensityReport marginal_last(const SawtoothModel& m);

// Conditional law of one particle given pinned values of others. Pins at 0/1
// whose kernel support degenerates (lower particle at 1, upper at 0) are
// replaced by the equivalent pin on the neighbor toward the target, which is
// the continuous limit of the conditioning.
DensityReport conditional_density(const SawtoothModel& m, int target, std::vector<Pin> pins);

// Joint density d_{first,last} of the extreme particles on grid x grid,
// entry [i][j] = d(grid[i], grid[j]).
std::vector<std::vector<Rational>> joint_extremes_on_grid(const SawtoothModel& m,
                                                          const std::vector<Rational>& grid);

// Normalized prefix / reflected-prefix integrals of a nonnegative density.
Poly gamma_plus(const Poly& f);
Poly gamma_minus(const Poly& f);

// Pointwise CDF bounds lower <= F <= upper.
struct EnvelopePair {
  Poly lower_cdf;
  Poly upper_cdf;
};

struct EnvelopeBounds {
  EnvelopePair first;                // for the first particle, conditioning far right
  std::optional<EnvelopePair> last;  // for the last particle; set when particles >= 4
};

// CDF envelopes of the extreme particles under conditioning separated by at
// least two bonds: for a lower extreme with adjacent kernel f the sandwich is
// Gamma^-(f) <= F <= Gamma^- (Gamma^+(f)); for an upper extreme it mirrors to
// Gamma^+ (Gamma^+(f)) <= F <= Gamma^+(f).
EnvelopeBounds envelope_bounds(const SawtoothModel& m);

}  // namespace descents
