#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fourfold {

using BigInt = boost::multiprecision::cpp_int;
// Canonical form is maintained by the backend: denominator > 0, gcd(num, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

enum class FamilyKind { spin, nonspin };

inline const char* family_kind_name(FamilyKind k) {
  return k == FamilyKind::spin ? "spin" : "nonspin";
}

// Floor division for any sign of num; den must be positive.
BigInt floor_div(const BigInt& num, const BigInt& den);

BigInt floor_rat(const Rational& q);
BigInt ceil_rat(const Rational& q);

// base^exp for integer exp; base must be nonzero when exp < 0.
Rational rat_pow(const Rational& base, std::int64_t exp);

// Always "num/den", e.g. "1024/1", "-5/2".
std::string rat_string(const Rational& q);
std::string int_string(const BigInt& n);

}  // namespace fourfold
