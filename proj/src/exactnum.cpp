#include "fourfold/exactnum.hpp"

#include <array>
#include <mutex>
#include <optional>
#include <utility>

namespace fourfold::exactnum {

namespace {

// First 1000 decimal digits of pi after the point, truncated.
constexpr const char kPiFractionDigits[] =
    "14159265358979323846264338327950288419716939937510582097494459230781640628620899"
    "86280348253421170679821480865132823066470938446095505822317253594081284811174502"
    "84102701938521105559644622948954930381964428810975665933446128475648233786783165"
    "27120190914564856692346034861045432664821339360726024914127372458700660631558817"
    "48815209209628292540917153643678925903600113305305488204665213841469519415116094"
    "33057270365759591953092186117381932611793105118548074462379962749567351885752724"
    "89122793818301194912983367336244065664308602139494639522473719070217986094370277"
    "05392171762931767523846748184676694051320005681271452635608277857713427577896091"
    "73637178721468440901224953430146549585371050792279689258923542019956112129021960"
    "86403441815981362977477130996051870721134999999837297804995105973173281609631859"
    "50244594553469083026425223082533446850352619311881710100031378387528865875332083"
    "81420617177669147303598253490428755468731159562863882353787593751957781857780532"
    "1712268066130019278766111959092164201989";

// Scaled-integer enclosure of arctan(1/x): acc/2^scale with |error| <= slack/2^scale.
// Alternating series; every term is floor-divided (error < 1 ulp each) and the
// tail after the first zero quotient is below 1 ulp, so slack = terms + 2 covers
// both with margin.
struct ScaledBound {
  BigInt acc;
  BigInt slack;
};

ScaledBound atan_recip_scaled(unsigned x, unsigned scale) {
  const BigInt one = BigInt(1) << scale;
  const BigInt xsq = BigInt(x) * x;
  BigInt den = x;  // x^(2k+1)
  BigInt acc = 0;
  BigInt terms = 0;
  bool subtract = false;
  for (unsigned long k = 0;; ++k) {
    const BigInt q = one / (den * (2 * k + 1));
    if (q == 0) break;
    if (subtract) acc -= q; else acc += q;
    ++terms;
    den *= xsq;
    subtract = !subtract;
  }
  return {acc, terms + 2};
}

// pi = 16*arctan(1/5) - 4*arctan(1/239), enclosed at the given scale.
RationalInterval machin_pi(unsigned scale) {
  const ScaledBound a5 = atan_recip_scaled(5, scale);
  const ScaledBound a239 = atan_recip_scaled(239, scale);
  const BigInt mid = 16 * a5.acc - 4 * a239.acc;
  const BigInt slack = 16 * a5.slack + 4 * a239.slack;
  const BigInt den = BigInt(1) << scale;
  return {Rational(mid - slack, den), Rational(mid + slack, den)};
}

Rational pow10(unsigned e) { return Rational(boost::multiprecision::pow(BigInt(10), e)); }

// The embedded reference is pi truncated to 1000 fractional digits, so
// ref <= pi < ref + 10^-1000. A correct enclosure must overlap that window.
void validate_against_reference() {
  // 1020 decimal digits ~ 3389 bits; 3450 gives comfortable width margin.
  const RationalInterval enc = machin_pi(3450);
  BigInt ref_scaled(std::string("3") + kPiFractionDigits);
  const Rational ref = Rational(ref_scaled, boost::multiprecision::pow(BigInt(10), 1000));
  const Rational ulp = Rational(1, boost::multiprecision::pow(BigInt(10), 1000));
  const bool ok = enc.hi >= ref && enc.lo <= ref + ulp && enc.hi - enc.lo < ulp;
  if (!ok) throw std::logic_error("pi enclosure disagrees with embedded reference digits");
}

constexpr unsigned kMinBits = 64;
constexpr unsigned kMaxBits = 4096;

}  // namespace

RationalInterval pi_enclosure(unsigned bits) {
  static std::once_flag validated;
  std::call_once(validated, validate_against_reference);

  // Series slack stays below 2^15 ulps for every precision up to the cap,
  // so 16 guard bits keep the final width within 2^-bits.
  const unsigned scale = bits + 16;
  RationalInterval enc = machin_pi(scale);
  if (enc.hi - enc.lo > rat_pow(Rational(1, 2), bits))
    throw std::logic_error("pi enclosure wider than requested");

  return enc;
}

ExactReal ExactReal::from_rational(const Rational& c) {
  ExactReal r;
  r.set(0, c);
  return r;
}

ExactReal ExactReal::from_int(const BigInt& n) { return from_rational(Rational(n)); }

ExactReal ExactReal::pi_term(std::int64_t degree, const Rational& coeff) {
  ExactReal r;
  r.set(degree, coeff);
  return r;
}

bool ExactReal::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational ExactReal::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value on a value with pi terms");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void ExactReal::set(std::int64_t degree, Rational coeff) {
  if (coeff == 0) terms_.erase(degree);
  else terms_[degree] = std::move(coeff);
}

ExactReal ExactReal::operator-() const {
  ExactReal r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

ExactReal& ExactReal::operator+=(const ExactReal& rhs) {
  for (const auto& [d, c] : rhs.terms_) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& rhs) { return *this += -rhs; }

ExactReal operator*(const ExactReal& lhs, const ExactReal& rhs) {
  ExactReal r;
  for (const auto& [da, ca] : lhs.terms_)
    for (const auto& [db, cb] : rhs.terms_) {
      const std::int64_t d = da + db;
      auto it = r.terms_.find(d);
      if (it == r.terms_.end()) {
        r.terms_.emplace(d, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
  return r;
}

Sign sign_of(const Rational& q) {
  if (q == 0) return Sign::zero;
  return q > 0 ? Sign::positive : Sign::negative;
}

namespace {

// pi^d as an interval, exact rational endpoints. 3 < pi < 4 keeps every
// power positive and monotone, so endpoint powers are the bounds.
RationalInterval pi_power(const RationalInterval& pi, std::int64_t d) {
  if (d == 0) return {Rational(1), Rational(1)};
  if (d > 0) return {rat_pow(pi.lo, d), rat_pow(pi.hi, d)};
  return {rat_pow(pi.hi, d), rat_pow(pi.lo, d)};
}

RationalInterval evaluate_interval(const ExactReal& a, const RationalInterval& pi) {
  Rational lo = 0, hi = 0;
  for (const auto& [d, c] : a.terms()) {
    const RationalInterval p = pi_power(pi, d);
    if (c > 0) {
      lo += c * p.lo;
      hi += c * p.hi;
    } else {
      lo += c * p.hi;
      hi += c * p.lo;
    }
  }
  return {lo, hi};
}

}  // namespace

Sign sign(const ExactReal& a) {
  if (a.is_zero()) return Sign::zero;
  if (a.is_rational()) return sign_of(a.rational_value());
  for (unsigned bits = kMinBits; bits <= kMaxBits; bits <<= 1) {
    const RationalInterval v = evaluate_interval(a, pi_enclosure(bits));
    if (v.lo > 0) return Sign::positive;
    if (v.hi < 0) return Sign::negative;
  }
  throw PrecisionExhausted("sign not separated from zero at 4096-bit working precision");
}

Sign compare(const ExactReal& a, const ExactReal& b) { return sign(a - b); }

std::string Decimal::annotated() const { return exact ? digits : digits + "\xE2\x80\xA6"; }

namespace {

std::string format_scaled(const BigInt& t, unsigned fractional_digits, bool negative) {
  BigInt abs = t < 0 ? BigInt(-t) : t;
  std::string s = abs.str();
  if (s.size() <= fractional_digits) s.insert(0, fractional_digits + 1 - s.size(), '0');
  s.insert(s.size() - fractional_digits, fractional_digits ? "." : "");
  if (negative && abs != 0) s.insert(0, "-");
  return s;
}

}  // namespace

Decimal to_decimal(const ExactReal& a, unsigned fractional_digits) {
  const Rational scale = pow10(fractional_digits);

  if (a.is_rational()) {
    const Rational v = a.rational_value() * scale;
    const BigInt num = numerator(v), den = denominator(v);
    const BigInt t = num / den;  // truncation toward zero
    return {format_scaled(t, fractional_digits, v < 0), num % den == 0};
  }

  // Irrational, so v*10^digits is never an integer: shrink the enclosure
  // until one integer separates the endpoints. Doubling is unbounded here
  // (the sign cap does not apply; this loop is total for irrational values).
  const ExactReal scaled = a * ExactReal::from_rational(scale);
  for (unsigned bits = kMinBits;; bits <<= 1) {
    if (bits > (1u << 22)) throw std::logic_error("to_decimal failed to converge");
    const RationalInterval v = evaluate_interval(scaled, pi_enclosure(bits));
    const BigInt flo = floor_rat(v.lo), fhi = floor_rat(v.hi);
    if (flo != fhi) continue;
    // Value lies strictly inside (flo, flo+1); truncation toward zero.
    const BigInt t = flo >= 0 ? flo : flo + 1;
    return {format_scaled(t, fractional_digits, flo < 0), false};
  }
}

}  // namespace fourfold::exactnum
