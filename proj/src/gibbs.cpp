#include "descents/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace descents {

bool BlackBoxChain::particle_is_upper(int k) const {
  if (k < 1 || k > particles()) throw std::out_of_range("particle index");
  if (k == 1) {
    if (bonds.empty()) return false;
    return bonds[0] == Orientation::Descending;
  }
  return bonds[static_cast<size_t>(k) - 2] == Orientation::Ascending;
}

BlackBoxChain black_box(const SawtoothModel& m) {
  BlackBoxChain out;
  out.bonds = m.bonds;
  for (const auto& kernel : m.kernels) {
    Rational mass = integral01(kernel);
    std::vector<double> coeffs;
    for (const auto& c : kernel.coeffs()) coeffs.push_back(to_double(c / mass));
    out.kernels.push_back([coeffs](double t) {
      double acc = 0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
      return acc;
    });
  }
  return out;
}

namespace {

struct Segment {
  double a, b, mass;
};

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

void subdivide(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double whole, double eps, int depth, std::vector<Segment>& out) {
  double m = 0.5 * (a + b);
  double fm = f(m);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(a, fa, flm, m, fm);
  double right = simpson(m, fm, frm, b, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
    out.push_back({a, m, left});
    out.push_back({m, b, right});
    return;
  }
  subdivide(f, a, fa, m, fm, left, eps * 0.5, depth - 1, out);
  subdivide(f, m, fm, b, fb, right, eps * 0.5, depth - 1, out);
}

}  // namespace

GibbsChain::GibbsChain(BlackBoxChain model, uint64_t seed, double cdf_tol)
    : model_(std::move(model)), rng_(SplitMix64::stream(seed, 0)), tol_(cdf_tol) {
  x_.resize(static_cast<size_t>(model_.particles()));
  clamped_.assign(x_.size(), false);
  for (int k = 1; k <= model_.particles(); ++k)
    x_[static_cast<size_t>(k) - 1] = model_.particle_is_upper(k) ? 1.0 : 0.0;
}

void GibbsChain::clamp(int k, double v) {
  x_.at(static_cast<size_t>(k) - 1) = v;
  clamped_.at(static_cast<size_t>(k) - 1) = true;
}

void GibbsChain::run(int sweeps) {
  for (int s = 0; s < sweeps; ++s) sweep();
}

void GibbsChain::sweep() {
  for (int k = 1; k <= model_.particles(); ++k)
    if (!clamped_[static_cast<size_t>(k) - 1]) x_[static_cast<size_t>(k) - 1] = sample_site(k);
}

double GibbsChain::sample_site(int k) {
  const bool upper = model_.particles() > 1 && model_.particle_is_upper(k);
  const int m = model_.particles();
  const bool has_left = k >= 2;
  const bool has_right = k <= m - 1;
  double left_val = has_left ? x_[static_cast<size_t>(k) - 2] : 0.0;
  double right_val = has_right ? x_[static_cast<size_t>(k)] : 0.0;

  double lo = 0.0, hi = 1.0;
  if (upper) {
    if (has_left) lo = std::max(lo, left_val);
    if (has_right) lo = std::max(lo, right_val);
  } else {
    if (has_left) hi = std::min(hi, left_val);
    if (has_right) hi = std::min(hi, right_val);
  }
  if (hi <= lo) return lo;

  auto left_kernel = has_left ? &model_.kernels[static_cast<size_t>(k) - 2] : nullptr;
  auto right_kernel = has_right ? &model_.kernels[static_cast<size_t>(k) - 1] : nullptr;
  std::function<double(double)> density = [&, upper](double w) {
    double d = 1.0;
    if (left_kernel) d *= (*left_kernel)(upper ? w - left_val : left_val - w);
    if (right_kernel) d *= (*right_kernel)(upper ? w - right_val : right_val - w);
    if (d < 0) throw std::domain_error("model density is negative");
    return d;
  };

  double fa = density(lo), fb = density(hi);
  double fm = density(0.5 * (lo + hi));
  double whole = simpson(lo, fa, fm, hi, fb);
  std::vector<Segment> segs;
  double eps = tol_ * std::max(std::abs(whole), 1e-12);
  subdivide(density, lo, fa, hi, fb, whole, eps, 28, segs);

  double total = 0;
  for (const auto& s : segs) total += s.mass;
  if (!(total > 0)) return 0.5 * (lo + hi);

  double target = rng_.uniform01() * total;
  double cum = 0;
  const Segment* chosen = &segs.back();
  for (const auto& s : segs) {
    if (cum + s.mass >= target) {
      chosen = &s;
      break;
    }
    cum += s.mass;
  }
  // bisect inside the chosen segment
  double want = target - cum;
  double a = chosen->a, b = chosen->b;
  double fa2 = density(a);
  for (int it = 0; it < 60 && b - a > 1e-15; ++it) {
    double mid = 0.5 * (a + b);
    double fmid = density(mid);
    double half = (mid - a) / 6.0 * (fa2 + 4.0 * density(0.5 * (a + mid)) + fmid);
    if (half < want) {
      want -= half;
      a = mid;
      fa2 = fmid;
    } else {
      b = mid;
    }
    if (half > 0 && std::abs(half - want) <= tol_ * total && b - a < 1e-6) break;
  }
  return 0.5 * (a + b);
}

}  // namespace descents
