#include "descents/polynomial.hpp"

#include <stdexcept>

namespace descents {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(c));
}

Poly Poly::integrate_prefix() const {
  if (is_zero()) return Poly();
  std::vector<Rational> c(coeffs_.size() + 1, Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k)
    c[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
  return Poly(std::move(c));
}

Poly Poly::reflect() const { return compose_linear(Rational(1), Rational(-1)); }

Poly Poly::compose_linear(const Rational& a, const Rational& b) const {
  // Horner over polynomial arithmetic in (a + b t).
  Poly lin(std::vector<Rational>{a, b});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * lin + Poly::constant(*it);
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s == 0) return Poly();
  std::vector<Rational> c(p.coeffs_.size());
  for (size_t k = 0; k < p.coeffs_.size(); ++k) c[k] = s * p.coeffs_[k];
  return Poly(std::move(c));
}

Rational definite_integral(const Poly& p, const Rational& a, const Rational& b) {
  Poly prim = p.integrate_prefix();
  return prim(b) - prim(a);
}

Rational integral01(const Poly& p) {
  Rational acc(0);
  const auto& c = p.coeffs();
  for (size_t k = 0; k < c.size(); ++k) acc += c[k] / Rational(static_cast<long>(k + 1));
  return acc;
}

Poly transfer_up(const Poly& d, const Poly& kernel) {
  if (d.is_zero() || kernel.is_zero()) return Poly();
  const auto& dc = d.coeffs();
  const auto& kc = kernel.coeffs();
  std::vector<Rational> out(dc.size() + kc.size(), Rational(0));
  for (size_t p = 0; p < dc.size(); ++p) {
    if (dc[p] == 0) continue;
    for (size_t q = 0; q < kc.size(); ++q) {
      if (kc[q] == 0) continue;
      Rational beta = rat(factorial(p) * factorial(q), factorial(static_cast<unsigned>(p + q + 1)));
      out[p + q + 1] += dc[p] * kc[q] * beta;
    }
  }
  return Poly(std::move(out));
}

Poly transfer_down(const Poly& d, const Poly& kernel) {
  return transfer_up(d.reflect(), kernel).reflect();
}

Poly segment_convolution(const Poly& p, const Poly& kernel, const Rational& a,
                         const Rational& b) {
  if (p.is_zero() || kernel.is_zero() || a == b) return Poly();
  const auto& pc = p.coeffs();
  const auto& kc = kernel.coeffs();
  // Moments m_r = int_a^b p(x) x^r dx for r up to deg(kernel).
  const size_t rmax = kc.size();  // need r in [0, deg kernel]
  std::vector<Rational> apow(pc.size() + rmax + 1), bpow(pc.size() + rmax + 1);
  apow[0] = 1;
  bpow[0] = 1;
  for (size_t k = 1; k < apow.size(); ++k) {
    apow[k] = apow[k - 1] * a;
    bpow[k] = bpow[k - 1] * b;
  }
  std::vector<Rational> moments(rmax, Rational(0));
  for (size_t r = 0; r < rmax; ++r) {
    Rational m(0);
    for (size_t i = 0; i < pc.size(); ++i) {
      if (pc[i] == 0) continue;
      size_t e = i + r + 1;
      m += pc[i] * (bpow[e] - apow[e]) / Rational(static_cast<long>(e));
    }
    moments[r] = m;
  }
  // (y - x)^q = sum_r C(q,r) (-x)^r y^(q-r)
  std::vector<Rational> out(kc.size(), Rational(0));
  for (size_t q = 0; q < kc.size(); ++q) {
    if (kc[q] == 0) continue;
    for (size_t r = 0; r <= q; ++r) {
      Rational term = kc[q] * Rational(binomial(static_cast<unsigned>(q), static_cast<unsigned>(r))) * moments[r];
      if (r % 2 == 1) term = -term;
      out[q - r] += term;
    }
  }
  return Poly(std::move(out));
}

std::vector<std::string> to_ratio_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(ratio_string(c));
  return out;
}

BiPoly::BiPoly(std::vector<std::vector<Rational>> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
  for (auto& row : coeffs_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

BiPoly BiPoly::constant(const Rational& c) {
  return BiPoly(std::vector<std::vector<Rational>>{{c}});
}

BiPoly BiPoly::from_x(const Poly& p) {
  std::vector<std::vector<Rational>> c;
  for (const auto& a : p.coeffs()) c.push_back({a});
  return BiPoly(std::move(c));
}

BiPoly BiPoly::from_y(const Poly& p) {
  return BiPoly(std::vector<std::vector<Rational>>{p.coeffs()});
}

int BiPoly::degree_y() const {
  size_t d = 0;
  for (const auto& row : coeffs_) d = std::max(d, row.size());
  return static_cast<int>(d) - 1;
}

Rational BiPoly::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  const auto& row = coeffs_[static_cast<size_t>(i)];
  if (j < 0 || j >= static_cast<int>(row.size())) return Rational(0);
  return row[static_cast<size_t>(j)];
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rational row(0);
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * y + *jt;
    acc = acc * x + row;
  }
  return acc;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<std::vector<Rational>> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    size_t w = 0;
    if (i < a.coeffs_.size()) w = std::max(w, a.coeffs_[i].size());
    if (i < b.coeffs_.size()) w = std::max(w, b.coeffs_[i].size());
    c[i].assign(w, Rational(0));
    if (i < a.coeffs_.size())
      for (size_t j = 0; j < a.coeffs_[i].size(); ++j) c[i][j] += a.coeffs_[i][j];
    if (i < b.coeffs_.size())
      for (size_t j = 0; j < b.coeffs_[i].size(); ++j) c[i][j] += b.coeffs_[i][j];
  }
  return BiPoly(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly nb = b;
  for (auto& row : nb.coeffs_)
    for (auto& v : row) v = -v;
  return a + nb;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<std::vector<Rational>> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  size_t wa = 0, wb = 0;
  for (const auto& r : a.coeffs_) wa = std::max(wa, r.size());
  for (const auto& r : b.coeffs_) wb = std::max(wb, r.size());
  for (auto& row : c) row.assign(wa + wb - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < a.coeffs_[i].size(); ++j) {
      if (a.coeffs_[i][j] == 0) continue;
      for (size_t k = 0; k < b.coeffs_.size(); ++k)
        for (size_t l = 0; l < b.coeffs_[k].size(); ++l)
          c[i + k][j + l] += a.coeffs_[i][j] * b.coeffs_[k][l];
    }
  return BiPoly(std::move(c));
}

}  // namespace descents
