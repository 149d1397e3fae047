#include "fourfold/common.hpp"

#include <stdexcept>

namespace fourfold {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw std::invalid_argument("floor_div: denominator must be positive");
  BigInt q = num / den;                 // truncates toward zero
  if (num % den != 0 && num < 0) --q;
  return q;
}

BigInt floor_rat(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

BigInt ceil_rat(const Rational& q) {
  return -floor_rat(-q);
}

Rational rat_pow(const Rational& base, std::int64_t exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::invalid_argument("rat_pow: zero base with negative exponent");
  const unsigned e = static_cast<unsigned>(exp < 0 ? -exp : exp);
  BigInt num = boost::multiprecision::pow(numerator(base), e);
  BigInt den = boost::multiprecision::pow(denominator(base), e);
  if (exp < 0) {
    if (num < 0) { num = -num; den = -den; }  // keep sign in the numerator
    return Rational(den, num);
  }
  return Rational(num, den);
}

std::string rat_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string int_string(const BigInt& n) { return n.str(); }

}  // namespace fourfold
