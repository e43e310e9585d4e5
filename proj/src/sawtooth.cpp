#include "descents/sawtooth.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace descents {

bool SawtoothModel::particle_is_upper(int k) const {
  if (k < 1 || k > particles()) throw std::out_of_range("particle index");
  if (k == 1) {
    if (bonds.empty()) return false;
    return bonds[0] == Orientation::Descending;
  }
  return bonds[static_cast<size_t>(k) - 2] == Orientation::Ascending;
}

ModelType SawtoothModel::type() const {
  ModelType t;
  t.first_is_peak = particle_is_upper(1);
  t.last_is_peak = particle_is_upper(particles());
  return t;
}

std::string SawtoothModel::particle_label(int k) const {
  bool upper = particle_is_upper(k);
  int count = 0;
  for (int j = 1; j <= k; ++j)
    if (particle_is_upper(j) == upper) ++count;
  return (upper ? "Y_" : "X_") + std::to_string(count);
}

SawtoothModel SawtoothModel::reversed() const {
  SawtoothModel r;
  r.kernels.assign(kernels.rbegin(), kernels.rend());
  r.bonds.reserve(bonds.size());
  for (auto it = bonds.rbegin(); it != bonds.rend(); ++it)
    r.bonds.push_back(*it == Orientation::Ascending ? Orientation::Descending
                                                    : Orientation::Ascending);
  r.run_lengths.assign(run_lengths.rbegin(), run_lengths.rend());
  r.normalized = normalized;
  return r;
}

SawtoothModel SawtoothModel::normalized_copy() const {
  SawtoothModel r = *this;
  for (auto& k : r.kernels) {
    Rational mass = integral01(k);
    if (mass <= 0) throw std::invalid_argument("kernel with nonpositive mass");
    k = rat(BigInt(1), BigInt(1)) / mass * k;
  }
  r.normalized = true;
  return r;
}

SawtoothModel SawtoothModel::truncated_to(int k) const {
  if (k < 1 || k > particles()) throw std::out_of_range("truncation size");
  SawtoothModel r;
  r.kernels.assign(kernels.begin(), kernels.begin() + (k - 1));
  r.bonds.assign(bonds.begin(), bonds.begin() + (k - 1));
  r.normalized = normalized;
  if (!run_lengths.empty())
    r.run_lengths.assign(run_lengths.begin(), run_lengths.begin() + (k - 1));
  return r;
}

Poly gamma_kernel(int run_length) {
  if (run_length < 2) throw std::invalid_argument("run length must be >= 2");
  return Poly::monomial(run_length - 2,
                        rat(BigInt(1), factorial(static_cast<unsigned>(run_length - 2))));
}

Poly gamma_density(int run_length) {
  if (run_length < 2) throw std::invalid_argument("run length must be >= 2");
  return Poly::monomial(run_length - 2, Rational(run_length - 1));
}

SawtoothModel model_from_composition(const Composition& c) {
  SawtoothModel m;
  if (c.size() == 1) return m;  // single particle, no interaction
  for (const auto& r : runs(c)) {
    m.kernels.push_back(gamma_kernel(r.length()));
    m.bonds.push_back(r.orientation);
    m.run_lengths.push_back(r.length());
  }
  return m;
}

PiecewisePoly sweep(const SawtoothModel& m, int target, const std::vector<Pin>& pins,
                    bool from_left, const std::vector<std::optional<Rational>>& floors) {
  if (target < 1 || target > m.particles()) throw std::out_of_range("target particle");
  if (!from_left) {
    SawtoothModel rev = m.reversed();
    std::vector<Pin> rpins;
    for (const auto& p : pins) rpins.push_back({m.particles() + 1 - p.particle, p.value});
    std::vector<std::optional<Rational>> rfloors(floors.rbegin(), floors.rend());
    return sweep(rev, m.particles() + 1 - target, rpins, true, rfloors);
  }
  std::map<int, Rational> pin_at;
  for (const auto& p : pins) {
    if (p.value < 0 || p.value > 1) throw std::invalid_argument("pin value outside [0,1]");
    if (p.particle == target) throw std::invalid_argument("pin at target particle");
    if (p.particle >= 1 && p.particle < target) pin_at.emplace(p.particle, p.value);
  }
  auto floor_of = [&](int k) -> std::optional<Rational> {
    if (k < 1 || k > static_cast<int>(floors.size())) return std::nullopt;
    return floors[static_cast<size_t>(k) - 1];
  };

  PiecewisePoly cur = PiecewisePoly::one();  // function of w_1
  if (auto f = floor_of(1)) cur = cur.restrict_support(*f, Rational(1));
  for (int j = 1; j < target; ++j) {
    const Poly& kernel = m.kernels[static_cast<size_t>(j) - 1];
    const bool asc = m.bonds[static_cast<size_t>(j) - 1] == Orientation::Ascending;
    auto pin = pin_at.find(j);
    if (pin != pin_at.end()) {
      Rational scale = cur(pin->second);
      // w_{j+1} >= v under an ascending bond, <= v under a descending one
      cur = scale * PiecewisePoly::pinned_kernel(kernel, pin->second, /*support_below=*/!asc);
    } else {
      cur = asc ? transfer_up(cur, kernel) : transfer_down(cur, kernel);
    }
    if (auto f = floor_of(j + 1)) cur = cur.restrict_support(*f, Rational(1));
  }
  return cur;
}

Rational volume(const SawtoothModel& m) {
  return sweep(m, m.particles(), {}, true).integral01();
}

Rational pinned_mass(const SawtoothModel& m, const std::vector<Pin>& pins,
                     const std::vector<std::optional<Rational>>& floors) {
  int target = 0;
  for (int k = 1; k <= m.particles(); ++k) {
    bool pinned = false;
    for (const auto& p : pins) pinned = pinned || p.particle == k;
    if (!pinned) {
      target = k;
      break;
    }
  }
  if (target == 0) throw std::invalid_argument("all particles pinned");
  PiecewisePoly prod = sweep(m, target, pins, true, floors) * sweep(m, target, pins, false, floors);
  if (target <= static_cast<int>(floors.size()) && floors[static_cast<size_t>(target) - 1])
    prod = prod.restrict_support(*floors[static_cast<size_t>(target) - 1], Rational(1));
  return prod.integral01();
}

namespace {

DensityReport make_report(const SawtoothModel& m, int target, PiecewisePoly raw,
                          std::string conditioning) {
  Rational mass = raw.integral01();
  if (mass <= 0) throw std::domain_error("conditioning event has zero mass");
  DensityReport rep;
  rep.variable = m.particle_label(target);
  rep.conditioning = std::move(conditioning);
  rep.normalizer = mass;
  rep.density = rat(BigInt(1), BigInt(1)) / mass * raw;
  rep.cdf = rep.density.integrate_prefix();
  return rep;
}

}  // namespace

DensityReport marginal(const SawtoothModel& m, int particle) {
  PiecewisePoly raw = sweep(m, particle, {}, true) * sweep(m, particle, {}, false);
  return make_report(m, particle, std::move(raw), "");
}

DensityReport marginal_first(const SawtoothModel& m) { return marginal(m, 1); }

DensityReport marginal_last(const SawtoothModel& m) { return marginal(m, m.particles()); }

DensityReport conditional_density(const SawtoothModel& m, int target, std::vector<Pin> pins) {
  if (target < 1 || target > m.particles()) throw std::out_of_range("target particle");
  // Resolve pins whose kernel support degenerates: a lower particle pinned at 1
  // forces its neighbors to 1, an upper particle pinned at 0 forces them to 0.
  // The continuous limit of such conditioning is the same pin on the neighbor
  // on the target side.
  for (auto& p : pins) {
    if (p.value < 0 || p.value > 1) throw std::invalid_argument("pin value outside [0,1]");
    if (p.particle < 1 || p.particle > m.particles()) throw std::out_of_range("pinned particle");
    bool upper = m.particle_is_upper(p.particle);
    bool degenerate = (!upper && p.value == 1) || (upper && p.value == 0);
    if (degenerate) {
      if (p.particle == target) throw std::domain_error("degenerate pin at target");
      p.particle += target < p.particle ? -1 : 1;
    }
    if (p.particle == target)
      throw std::domain_error("conditioning collapses onto the target particle");
  }
  std::string cond;
  for (const auto& p : pins) {
    if (!cond.empty()) cond += ", ";
    cond += m.particle_label(p.particle) + "=" + ratio_string(p.value);
  }
  PiecewisePoly raw = sweep(m, target, pins, true) * sweep(m, target, pins, false);
  return make_report(m, target, std::move(raw), std::move(cond));
}

std::vector<std::vector<Rational>> joint_extremes_on_grid(const SawtoothModel& m,
                                                          const std::vector<Rational>& grid) {
  for (const auto& g : grid)
    if (g < 0 || g > 1) throw std::invalid_argument("grid point outside [0,1]");
  Rational vol = volume(m);
  std::vector<std::vector<Rational>> out;
  out.reserve(grid.size());
  const int last = m.particles();
  for (const auto& x : grid) {
    std::vector<Rational> row;
    row.reserve(grid.size());
    if (last == 1) {
      // single particle: "joint" degenerates to the uniform marginal
      for (size_t j = 0; j < grid.size(); ++j) row.push_back(grid[j] == x ? Rational(1) : Rational(0));
    } else {
      PiecewisePoly chain = sweep(m, last, {Pin{1, x}}, true);
      for (const auto& y : grid) row.push_back(chain(y) / vol);
    }
    out.push_back(std::move(row));
  }
  return out;
}

Poly gamma_plus(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("gamma transform of the zero function");
  Poly prim = f.integrate_prefix();
  Rational mass = prim(Rational(1));
  if (mass <= 0) throw std::invalid_argument("gamma transform of a non-integrable density");
  return rat(BigInt(1), BigInt(1)) / mass * prim;
}

Poly gamma_minus(const Poly& f) { return Poly::one() - gamma_plus(f).reflect(); }

EnvelopeBounds envelope_bounds(const SawtoothModel& m) {
  if (m.particles() < 2) throw std::invalid_argument("envelope needs at least one bond");
  auto first_pair = [](const SawtoothModel& model) {
    const Poly& f = model.kernels.front();
    EnvelopePair pair;
    if (model.particle_is_upper(1)) {
      pair.upper_cdf = gamma_plus(f);
      pair.lower_cdf = gamma_plus(gamma_plus(f));
    } else {
      pair.lower_cdf = gamma_minus(f);
      pair.upper_cdf = gamma_minus(gamma_plus(f));
    }
    return pair;
  };
  EnvelopeBounds out;
  out.first = first_pair(m);
  if (m.particles() >= 4) out.last = first_pair(m.reversed());
  return out;
}

}  // namespace descents
