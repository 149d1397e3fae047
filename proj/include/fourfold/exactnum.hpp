#pragma once

#include "fourfold/common.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace fourfold::exactnum {

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Raised when the sign refinement loop hits the working-precision cap
// (4096 bits). Unreachable for the values this tool produces; reaching it
// means an input was crafted to agree with pi beyond ~1200 decimal digits.
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Q[pi, 1/pi]: finite sum of c_d * pi^d over integer degrees d.
// Canonical form: no zero coefficients are stored, so is_zero() is a map
// emptiness check (pi is transcendental, hence value zero iff empty).
class ExactReal {
 public:
  ExactReal() = default;

  static ExactReal from_rational(const Rational& c);
  static ExactReal from_int(const BigInt& n);
  // coeff * pi^degree
  static ExactReal pi_term(std::int64_t degree, const Rational& coeff);

  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // True when the value lies in Q (only a degree-0 term, or zero).
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& rhs);
  ExactReal& operator-=(const ExactReal& rhs);
  friend ExactReal operator+(ExactReal lhs, const ExactReal& rhs) { return lhs += rhs; }
  friend ExactReal operator-(ExactReal lhs, const ExactReal& rhs) { return lhs -= rhs; }
  friend ExactReal operator*(const ExactReal& lhs, const ExactReal& rhs);

  bool operator==(const ExactReal& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const ExactReal& rhs) const { return !(*this == rhs); }

 private:
  void set(std::int64_t degree, Rational coeff);
  std::map<std::int64_t, Rational> terms_;
};

struct RationalInterval {
  Rational lo, hi;
};

// Enclosure of pi with hi - lo <= 2^-bits, from a Machin-type arctangent
// series over scaled integers with explicit error accounting. The first
// call cross-checks the series against an embedded 1000-digit reference
// and throws std::logic_error if they disagree.
RationalInterval pi_enclosure(unsigned bits);

// Exact for values in Q; otherwise interval refinement over pi enclosures
// with working precision 64, 128, ..., 4096 bits, then PrecisionExhausted.
Sign sign(const ExactReal& a);
Sign compare(const ExactReal& a, const ExactReal& b);  // sign(a - b)
Sign sign_of(const Rational& q);

struct Decimal {
  std::string digits;  // truncated toward zero, e.g. "18.9629"
  bool exact;          // true iff nothing nonzero was dropped
  std::string annotated() const;  // digits, plus a trailing ellipsis when inexact
};

// Decimal expansion with `fractional_digits` digits after the point.
// Total: refinement always terminates because a value with any nonzero
// pi-degree term is irrational, and rational values are handled exactly.
Decimal to_decimal(const ExactReal& a, unsigned fractional_digits);

}  // namespace fourfold::exactnum
