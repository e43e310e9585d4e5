#pragma once

#include <vector>

#include "descents/polynomial.hpp"

namespace descents {

// Piecewise polynomial on [0,1]. Conditioning a transfer chain on a particle
// value v truncates kernels at v, so pinned sweeps live here; a plain Poly is
// the single-piece case. Evaluation at an interior cut uses the left piece.
class PiecewisePoly {
 public:
  PiecewisePoly();  // zero on [0,1]
  PiecewisePoly(std::vector<Rational> interior_cuts, std::vector<Poly> pieces);

  static PiecewisePoly from_poly(Poly p);
  static PiecewisePoly one() { return from_poly(Poly::one()); }

  // Function of the neighbor w of a particle pinned at v:
  //   support_below: kernel(v - w) on [0, v], zero above
  //   otherwise:     kernel(w - v) on [v, 1], zero below
  static PiecewisePoly pinned_kernel(const Poly& kernel, const Rational& v,
                                     bool support_below);

  int piece_count() const { return static_cast<int>(pieces_.size()); }
  const Poly& piece(int i) const { return pieces_[static_cast<size_t>(i)]; }
  Rational lo(int i) const;
  Rational hi(int i) const;
  const std::vector<Rational>& interior_cuts() const { return cuts_; }
  bool is_zero() const;
  bool single_piece() const { return cuts_.empty(); }
  const Poly& as_poly() const;  // requires single_piece()

  Rational operator()(const Rational& t) const;

  PiecewisePoly derivative() const;
  PiecewisePoly integrate_prefix() const;  // continuous antiderivative, 0 at 0
  Rational integral01() const;
  PiecewisePoly reflect() const;
  // Multiply by the indicator of [lo, hi].
  PiecewisePoly restrict_support(const Rational& lo, const Rational& hi) const;

  friend PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b);
  friend PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b);
  friend PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b);
  friend PiecewisePoly operator*(const Rational& s, const PiecewisePoly& p);
  friend PiecewisePoly operator*(const PiecewisePoly& p, const Poly& q);

 private:
  void merge_equal_pieces();
  std::vector<Rational> cuts_;  // strictly increasing, inside (0,1)
  std::vector<Poly> pieces_;    // size cuts_.size() + 1
};

// Same integral transforms as for Poly, piece-aware.
PiecewisePoly transfer_up(const PiecewisePoly& d, const Poly& kernel);
PiecewisePoly transfer_down(const PiecewisePoly& d, const Poly& kernel);

}  // namespace descents
