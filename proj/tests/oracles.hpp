#pragma once

// Independent reference computations the tests compare the library against.
// Everything here is deliberately naive: exact rational arithmetic at a fixed
// reference approximation of pi, long division for decimal strings, brute
// force scans for parameter windows.

#include "fourfold/common.hpp"
#include "fourfold/exactnum.hpp"
#include "fourfold/families.hpp"
#include "pi_reference_digits.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fourfold_test {

using fourfold::BigInt;
using fourfold::Rational;

// Truncation of pi to `digits` fractional digits: ref <= pi < ref + 10^-digits.
inline Rational pi_approx(unsigned digits) {
  const std::string frac(kPiFracDigits);
  BigInt num = 3;
  BigInt den = 1;
  for (unsigned i = 0; i < digits; ++i) {
    num = num * 10 + (frac.at(i) - '0');
    den *= 10;
  }
  return Rational(num, den);
}

// Exact evaluation of a pi-polynomial at the 200 digit approximant. The
// result determines sign(value at pi) whenever it clears 10^-100: with
// coefficients below 10^7 and |degree| <= 8 the polynomial moves by less
// than 10^-180 between the approximant and pi itself.
inline Rational eval_at_pi_approx(const fourfold::exactnum::ExactReal& v, unsigned digits = 200) {
  const Rational p = pi_approx(digits);
  Rational acc = 0;
  for (const auto& [deg, coeff] : v.terms()) acc += coeff * fourfold::rat_pow(p, deg);
  return acc;
}

inline std::optional<fourfold::exactnum::Sign> oracle_sign(
    const fourfold::exactnum::ExactReal& v) {
  using fourfold::exactnum::Sign;
  if (v.terms().empty()) return Sign::zero;
  const Rational approx = eval_at_pi_approx(v);
  Rational bound = 1;
  for (int i = 0; i < 100; ++i) bound /= 10;
  const Rational mag = approx < 0 ? Rational(-approx) : approx;
  if (mag <= bound) return std::nullopt;  // too close to zero to certify
  return approx < 0 ? Sign::negative : Sign::positive;
}

// Decimal truncation toward zero of a rational, by long division.
struct OracleDecimal {
  std::string digits;
  bool exact;
};

inline OracleDecimal oracle_decimal(const Rational& q, unsigned frac_digits) {
  BigInt num = numerator(q);
  const BigInt den = denominator(q);
  const bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < frac_digits; ++i) scale *= 10;
  const BigInt scaled = num * scale / den;
  const bool exact = num * scale % den == 0;
  std::string s = scaled.str();
  if (s.size() <= frac_digits) s.insert(0, frac_digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - frac_digits);
  if (frac_digits > 0) out += "." + s.substr(s.size() - frac_digits);
  if (neg && scaled != 0) out.insert(0, 1, '-');
  return {out, exact};
}

// Brute force scan of the valid ell values in [1, scan_hi].
inline std::vector<BigInt> oracle_ell_values(fourfold::FamilyKind kind, const BigInt& m,
                                             const BigInt& n, const BigInt& g, const BigInt& h,
                                             const BigInt& scan_hi) {
  std::vector<BigInt> out;
  for (BigInt ell = 1; ell <= scan_hi; ++ell) {
    const auto params = fourfold::families::make_params(kind, m, n, g, h, ell);
    if (fourfold::families::check_params(params).valid) out.push_back(ell);
  }
  return out;
}

}  // namespace fourfold_test
