#pragma once

#include <string>
#include <vector>

#include "descents/rational.hpp"

namespace descents {

// Dense univariate polynomial with exact rational coefficients. Values are
// immutable after construction; every operation returns a fresh polynomial.
class Poly {
 public:
  Poly() = default;  // zero polynomial
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(int degree, const Rational& coeff = Rational(1));
  static Poly zero() { return Poly(); }
  static Poly one() { return constant(Rational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  Rational operator()(const Rational& x) const;

  Poly derivative() const;
  // Antiderivative vanishing at 0.
  Poly integrate_prefix() const;
  // p(1 - t)
  Poly reflect() const;
  // p(a + b t)
  Poly compose_linear(const Rational& a, const Rational& b) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies t^k; no trailing zeros
};

Rational definite_integral(const Poly& p, const Rational& a, const Rational& b);
Rational integral01(const Poly& p);

// y -> int_0^y d(x) kernel(y - x) dx. Exact, via the moment identity
// int_0^y x^p (y-x)^q dx = y^(p+q+1) p! q! / (p+q+1)!.
Poly transfer_up(const Poly& d, const Poly& kernel);

// t -> int_t^1 d(y) kernel(y - t) dy.
Poly transfer_down(const Poly& d, const Poly& kernel);

// int_a^b p(x) kernel(y - x) dx as a polynomial in y, for constant bounds.
Poly segment_convolution(const Poly& p, const Poly& kernel, const Rational& a,
                         const Rational& b);

// Debug form: coefficients as "num/den" strings, index = degree.
std::vector<std::string> to_ratio_strings(const Poly& p);

// Dense bivariate polynomial, coeffs[i][j] multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<Rational>> coeffs);

  static BiPoly constant(const Rational& c);
  static BiPoly from_x(const Poly& p);
  static BiPoly from_y(const Poly& p);

  bool is_zero() const { return coeffs_.empty(); }
  int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree_y() const;
  Rational coeff(int i, int j) const;

  Rational operator()(const Rational& x, const Rational& y) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

 private:
  void trim();
  std::vector<std::vector<Rational>> coeffs_;
};

}  // namespace descents
