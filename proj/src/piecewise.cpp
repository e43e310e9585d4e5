#include "descents/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace descents {

PiecewisePoly::PiecewisePoly() : pieces_{Poly::zero()} {}

PiecewisePoly::PiecewisePoly(std::vector<Rational> interior_cuts, std::vector<Poly> pieces)
    : cuts_(std::move(interior_cuts)), pieces_(std::move(pieces)) {
  if (pieces_.size() != cuts_.size() + 1)
    throw std::invalid_argument("piece/cut count mismatch");
  for (size_t i = 0; i < cuts_.size(); ++i) {
    if (cuts_[i] <= 0 || cuts_[i] >= 1) throw std::invalid_argument("cut outside (0,1)");
    if (i > 0 && cuts_[i] <= cuts_[i - 1]) throw std::invalid_argument("cuts not increasing");
  }
  merge_equal_pieces();
}

PiecewisePoly PiecewisePoly::from_poly(Poly p) {
  PiecewisePoly out;
  out.pieces_[0] = std::move(p);
  return out;
}

PiecewisePoly PiecewisePoly::pinned_kernel(const Poly& kernel, const Rational& v,
                                           bool support_below) {
  if (v < 0 || v > 1) throw std::invalid_argument("pin value outside [0,1]");
  if (support_below) {
    if (v == 0) return PiecewisePoly();  // zero-width support
    Poly on = kernel.compose_linear(v, Rational(-1));
    if (v == 1) return from_poly(std::move(on));
    return PiecewisePoly({v}, {std::move(on), Poly::zero()});
  }
  if (v == 1) return PiecewisePoly();
  Poly on = kernel.compose_linear(-v, Rational(1));
  if (v == 0) return from_poly(std::move(on));
  return PiecewisePoly({v}, {Poly::zero(), std::move(on)});
}

void PiecewisePoly::merge_equal_pieces() {
  for (size_t i = 0; i + 1 < pieces_.size();) {
    if (pieces_[i] == pieces_[i + 1]) {
      pieces_.erase(pieces_.begin() + static_cast<long>(i) + 1);
      cuts_.erase(cuts_.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
}

Rational PiecewisePoly::lo(int i) const {
  return i == 0 ? Rational(0) : cuts_[static_cast<size_t>(i) - 1];
}

Rational PiecewisePoly::hi(int i) const {
  return i == static_cast<int>(cuts_.size()) ? Rational(1) : cuts_[static_cast<size_t>(i)];
}

bool PiecewisePoly::is_zero() const {
  for (const auto& p : pieces_)
    if (!p.is_zero()) return false;
  return true;
}

const Poly& PiecewisePoly::as_poly() const {
  if (!single_piece()) throw std::logic_error("piecewise value is not a single polynomial");
  return pieces_[0];
}

Rational PiecewisePoly::operator()(const Rational& t) const {
  if (t < 0 || t > 1) throw std::invalid_argument("evaluation outside [0,1]");
  size_t i = 0;
  while (i < cuts_.size() && t > cuts_[i]) ++i;
  Rational left = pieces_[i](t);
  // Supports are closed: at a jump cut, the side carrying mass wins.
  if (i < cuts_.size() && t == cuts_[i]) {
    Rational right = pieces_[i + 1](t);
    if (left == 0 && right != 0) return right;
  }
  return left;
}

PiecewisePoly PiecewisePoly::derivative() const {
  std::vector<Poly> d;
  d.reserve(pieces_.size());
  for (const auto& p : pieces_) d.push_back(p.derivative());
  return PiecewisePoly(cuts_, std::move(d));
}

PiecewisePoly PiecewisePoly::integrate_prefix() const {
  std::vector<Poly> out;
  out.reserve(pieces_.size());
  Rational acc(0);
  for (size_t i = 0; i < pieces_.size(); ++i) {
    Poly prim = pieces_[i].integrate_prefix();
    Rational at_lo = prim(lo(static_cast<int>(i)));
    Poly adjusted = prim + Poly::constant(acc - at_lo);
    acc = adjusted(hi(static_cast<int>(i)));
    out.push_back(std::move(adjusted));
  }
  return PiecewisePoly(cuts_, std::move(out));
}

Rational PiecewisePoly::integral01() const {
  Rational acc(0);
  for (size_t i = 0; i < pieces_.size(); ++i)
    acc += definite_integral(pieces_[i], lo(static_cast<int>(i)), hi(static_cast<int>(i)));
  return acc;
}

PiecewisePoly PiecewisePoly::reflect() const {
  std::vector<Rational> cuts(cuts_.size());
  for (size_t i = 0; i < cuts_.size(); ++i) cuts[i] = Rational(1) - cuts_[cuts_.size() - 1 - i];
  std::vector<Poly> pieces(pieces_.size());
  for (size_t i = 0; i < pieces_.size(); ++i) pieces[i] = pieces_[pieces_.size() - 1 - i].reflect();
  return PiecewisePoly(std::move(cuts), std::move(pieces));
}

PiecewisePoly PiecewisePoly::restrict_support(const Rational& a, const Rational& b) const {
  if (a > b) throw std::invalid_argument("empty support");
  std::vector<Rational> cuts;
  if (a > 0 && a < 1) cuts.push_back(a);
  if (b > a && b > 0 && b < 1) cuts.push_back(b);
  std::vector<Poly> pieces(cuts.size() + 1, Poly::zero());
  for (size_t i = 0; i < pieces.size(); ++i) {
    Rational plo = i == 0 ? Rational(0) : cuts[i - 1];
    Rational phi = i == cuts.size() ? Rational(1) : cuts[i];
    if (plo >= a && phi <= b) pieces[i] = Poly::one();
  }
  PiecewisePoly mask;
  mask.cuts_ = std::move(cuts);
  mask.pieces_ = std::move(pieces);
  return *this * mask;
}

namespace {

std::vector<Rational> merged_cuts(const PiecewisePoly& a, const PiecewisePoly& b) {
  std::vector<Rational> out;
  std::merge(a.interior_cuts().begin(), a.interior_cuts().end(), b.interior_cuts().begin(),
             b.interior_cuts().end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const Poly& piece_at(const PiecewisePoly& p, const Rational& lo) {
  // the piece whose interval contains (lo, lo+eps)
  int i = 0;
  while (i < static_cast<int>(p.interior_cuts().size()) && p.interior_cuts()[static_cast<size_t>(i)] <= lo)
    ++i;
  return p.piece(i);
}

template <typename F>
PiecewisePoly combine(const PiecewisePoly& a, const PiecewisePoly& b, F&& f) {
  std::vector<Rational> cuts = merged_cuts(a, b);
  std::vector<Poly> pieces;
  pieces.reserve(cuts.size() + 1);
  for (size_t i = 0; i <= cuts.size(); ++i) {
    Rational lo = i == 0 ? Rational(0) : cuts[i - 1];
    pieces.push_back(f(piece_at(a, lo), piece_at(b, lo)));
  }
  return PiecewisePoly(std::move(cuts), std::move(pieces));
}

}  // namespace

PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b) {
  return combine(a, b, [](const Poly& x, const Poly& y) { return x + y; });
}

PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b) {
  return combine(a, b, [](const Poly& x, const Poly& y) { return x - y; });
}

PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b) {
  return combine(a, b, [](const Poly& x, const Poly& y) { return x * y; });
}

PiecewisePoly operator*(const Rational& s, const PiecewisePoly& p) {
  std::vector<Poly> pieces;
  pieces.reserve(p.pieces_.size());
  for (const auto& q : p.pieces_) pieces.push_back(s * q);
  return PiecewisePoly(p.cuts_, std::move(pieces));
}

PiecewisePoly operator*(const PiecewisePoly& p, const Poly& q) {
  std::vector<Poly> pieces;
  pieces.reserve(p.pieces_.size());
  for (const auto& r : p.pieces_) pieces.push_back(r * q);
  return PiecewisePoly(p.cuts_, std::move(pieces));
}

PiecewisePoly transfer_up(const PiecewisePoly& d, const Poly& kernel) {
  const int n = d.piece_count();
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(n));
  Poly full_prefix;  // sum of segment convolutions over completed pieces
  for (int i = 0; i < n; ++i) {
    const Poly& p = d.piece(i);
    Poly partial = transfer_up(p, kernel);  // int_0^y over the polynomial extension
    if (d.lo(i) != 0) partial = partial - segment_convolution(p, kernel, Rational(0), d.lo(i));
    out.push_back(full_prefix + partial);
    full_prefix = full_prefix + segment_convolution(p, kernel, d.lo(i), d.hi(i));
  }
  return PiecewisePoly(d.interior_cuts(), std::move(out));
}

PiecewisePoly transfer_down(const PiecewisePoly& d, const Poly& kernel) {
  return transfer_up(d.reflect(), kernel).reflect();
}

}  // namespace descents
