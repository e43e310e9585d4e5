#pragma once

#include <gmpxx.h>

#include <string>

namespace descents {

// All exact arithmetic in the library runs on GMP rationals / integers.
using Rational = mpq_class;
using BigInt = mpz_class;

// mpq_class(n, d) does not canonicalize on its own; always build through here.
Rational rat(long num, long den = 1);
Rational rat(const BigInt& num, const BigInt& den);

const BigInt& factorial(unsigned n);

// n! / (k! (n-k)!) as an exact integer.
BigInt binomial(unsigned n, unsigned k);

double to_double(const Rational& q);

// "num/den" (or plain "num" for integers).
std::string ratio_string(const Rational& q);

// Decimal rendering with the given number of significant digits, round half away
// from zero. Exact values that terminate earlier are printed in full.
std::string decimal_string(const Rational& q, int significant_digits = 12);

// Accepts "3/4", "-2", "0.25".
Rational parse_rational(const std::string& s);

}  // namespace descents
