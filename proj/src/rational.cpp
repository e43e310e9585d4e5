#include "descents/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace descents {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

const BigInt& factorial(unsigned n) {
  static std::vector<BigInt> table{1, 1};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    table.push_back(table.back() * BigInt(static_cast<unsigned long>(table.size())));
  }
  return table[n];
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

std::string ratio_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (q == 0) return "0";
  const bool negative = q < 0;
  BigInt num = abs(q.get_num());
  const BigInt den = q.get_den();

  // Find the decimal exponent e with 10^e <= num/den < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
  BigInt pow10;
  auto scaled_ge = [&](long k) {
    // num * 10^max(0,-k) >= den * 10^max(0,k)
    BigInt lhs = num, rhs = den;
    if (k >= 0) {
      mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(k));
      rhs *= pow10;
    } else {
      mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-k));
      lhs *= pow10;
    }
    return lhs >= rhs;
  };
  while (scaled_ge(e + 1)) ++e;
  while (!scaled_ge(e)) --e;
  // Now 10^e <= |q| < 10^(e+1): first significant digit sits at 10^e.

  // digits = round(|q| * 10^(significant_digits-1-e))
  const long shift = significant_digits - 1 - e;
  BigInt n2 = num, d2 = den;
  if (shift >= 0) {
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    n2 *= pow10;
  } else {
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    d2 *= pow10;
  }
  BigInt digits = (2 * n2 + d2) / (2 * d2);  // round half up
  std::string ds = digits.get_str();
  long point_exp = e;  // value = 0.d1d2... * 10^(e+1), digit string ds
  if (static_cast<long>(ds.size()) > significant_digits) {
    // rounding overflowed to an extra digit (e.g. 999.9 -> 1000)
    point_exp += 1;
    ds.pop_back();
  }

  std::string out;
  if (point_exp >= static_cast<long>(ds.size()) - 1 && point_exp <= 18) {
    // integer-like: pad with zeros
    out = ds;
    out.append(static_cast<size_t>(point_exp + 1 - static_cast<long>(ds.size())), '0');
  } else if (point_exp >= 0 && point_exp + 1 < static_cast<long>(ds.size())) {
    out = ds.substr(0, static_cast<size_t>(point_exp + 1)) + "." +
          ds.substr(static_cast<size_t>(point_exp + 1));
  } else if (point_exp < 0 && point_exp >= -4) {
    out = "0.";
    out.append(static_cast<size_t>(-point_exp - 1), '0');
    out += ds;
  } else {
    out = ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(point_exp);
  }
  // strip trailing zeros after a decimal point
  if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return rat(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string intpart = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty()) return rat(BigInt(intpart), BigInt(1));
    bool neg = !intpart.empty() && intpart[0] == '-';
    BigInt ip(intpart.empty() || intpart == "-" ? "0" : intpart);
    BigInt fp(frac);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q = rat(abs(ip) * den + fp, den);
    return neg ? Rational(-q) : q;
  }
  return rat(BigInt(s), BigInt(1));
}

}  // namespace descents
