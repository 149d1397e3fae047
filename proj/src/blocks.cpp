#include "fourfold/blocks.hpp"

#include <sstream>
#include <tuple>
#include <utility>

namespace fourfold::blocks {

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::negative_betti: return "NegativeBetti";
    case Violation::betti_inconsistency: return "BettiInconsistency";
    case Violation::signature_inconsistency: return "SignatureInconsistency";
    case Violation::simply_connected_b1: return "SimplyConnectedB1";
    case Violation::simply_connected_essential: return "SimplyConnectedEssential";
    case Violation::rokhlin_violation: return "RokhlinViolation";
  }
  return "?";
}

std::vector<Violation> validate(const InvariantVector& iv) {
  std::vector<Violation> out;
  if (iv.b1 < 0 || iv.b_plus < 0 || iv.b_minus < 0)
    out.push_back(Violation::negative_betti);
  if (iv.b_plus + iv.b_minus != iv.chi - 2 + 2 * iv.b1)
    out.push_back(Violation::betti_inconsistency);
  if (iv.tau != iv.b_plus - iv.b_minus)
    out.push_back(Violation::signature_inconsistency);
  if (iv.simply_connected && iv.b1 != 0)
    out.push_back(Violation::simply_connected_b1);
  if (iv.simply_connected && !iv.nonessential)
    out.push_back(Violation::simply_connected_essential);
  if (iv.spin && iv.simply_connected && iv.tau % 16 != 0)
    out.push_back(Violation::rokhlin_violation);
  return out;
}

InvariantViolation::InvariantViolation(std::vector<Violation> vs)
    : std::domain_error([&vs] {
        std::ostringstream os;
        os << "invariant violations:";
        for (Violation v : vs) os << ' ' << violation_name(v);
        return os.str();
      }()),
      violations(std::move(vs)) {}

BlockSpec::BlockSpec(BlockKind kind, BigInt p0, BigInt p1, std::string name, InvariantVector iv)
    : kind_(kind), p0_(std::move(p0)), p1_(std::move(p1)), name_(std::move(name)),
      iv_(std::move(iv)) {
  auto vs = validate(iv_);
  if (!vs.empty()) throw InvariantViolation(std::move(vs));
}

BlockSpec BlockSpec::gompf(const BigInt& m, const BigInt& n) {
  if (m < 2) throw InvalidParameter("X(m,n) requires m >= 2");
  if (n < 1) throw InvalidParameter("X(m,n) requires n >= 1");
  InvariantVector iv;
  iv.chi = 24 * m + 4 * n;
  iv.tau = -16 * m;
  iv.b1 = 0;
  iv.b_plus = 4 * m + 2 * n - 1;
  iv.b_minus = 20 * m + 2 * n - 1;
  iv.spin = iv.simply_connected = iv.symplectic = iv.nonessential = true;
  return BlockSpec(BlockKind::gompf, m, n, "", iv);
}

namespace {
InvariantVector k3_invariants() {
  InvariantVector iv;
  iv.chi = 24;
  iv.tau = -16;
  iv.b1 = 0;
  iv.b_plus = 3;
  iv.b_minus = 19;
  iv.spin = iv.simply_connected = iv.symplectic = iv.nonessential = true;
  return iv;
}
}  // namespace

BlockSpec BlockSpec::homotopy_k3(const BigInt& ell) {
  if (ell < 0) throw InvalidParameter("Y(ell) requires ell >= 0");
  return BlockSpec(BlockKind::homotopy_k3, ell, 0, "", k3_invariants());
}

BlockSpec BlockSpec::k3() { return BlockSpec(BlockKind::k3, 0, 0, "", k3_invariants()); }

BlockSpec BlockSpec::surface_product(const BigInt& g, const BigInt& h) {
  if (g < 1 || h < 1) throw InvalidParameter("Sigma(g)xSigma(h) requires g, h >= 1");
  InvariantVector iv;
  iv.chi = 4 * (g - 1) * (h - 1);
  iv.tau = 0;
  iv.b1 = 2 * g + 2 * h;
  iv.b_plus = 2 * g * h + 1;
  iv.b_minus = 2 * g * h + 1;
  iv.spin = true;
  iv.symplectic = true;
  iv.simply_connected = false;
  iv.nonessential = false;  // aspherical, essential for every g, h >= 1
  return BlockSpec(BlockKind::surface_product, g, h, "", iv);
}

BlockSpec BlockSpec::s1xs3() {
  InvariantVector iv;
  iv.chi = 0;
  iv.tau = 0;
  iv.b1 = 1;
  iv.b_plus = 0;
  iv.b_minus = 0;
  iv.spin = true;
  iv.nonessential = true;
  return BlockSpec(BlockKind::s1xs3, 0, 0, "", iv);
}

BlockSpec BlockSpec::cp2bar() {
  InvariantVector iv;
  iv.chi = 3;
  iv.tau = -1;
  iv.b1 = 0;
  iv.b_plus = 0;
  iv.b_minus = 1;
  iv.spin = false;
  iv.simply_connected = true;
  iv.symplectic = false;  // reversed orientation
  iv.nonessential = true;
  return BlockSpec(BlockKind::cp2bar, 0, 0, "", iv);
}

BlockSpec BlockSpec::custom(std::string name, const InvariantVector& iv,
                            std::optional<Rational> simplicial_volume) {
  if (simplicial_volume && *simplicial_volume < 0)
    throw InvalidParameter("declared simplicial volume must be nonnegative");
  BlockSpec b(BlockKind::custom, 0, 0, std::move(name), iv);
  b.declared_simplicial_volume_ = std::move(simplicial_volume);
  return b;
}

namespace {
int cmp_int(const BigInt& a, const BigInt& b) { return a < b ? -1 : (b < a ? 1 : 0); }
int cmp_bool(bool a, bool b) { return int(a) - int(b); }
}  // namespace

int BlockSpec::compare(const BlockSpec& rhs) const {
  if (kind_ != rhs.kind_) return static_cast<int>(kind_) < static_cast<int>(rhs.kind_) ? -1 : 1;
  if (int c = cmp_int(p0_, rhs.p0_)) return c;
  if (int c = cmp_int(p1_, rhs.p1_)) return c;
  if (kind_ != BlockKind::custom) return 0;
  if (int c = name_.compare(rhs.name_)) return c < 0 ? -1 : 1;
  const InvariantVector &a = iv_, &b = rhs.iv_;
  if (int c = cmp_int(a.chi, b.chi)) return c;
  if (int c = cmp_int(a.tau, b.tau)) return c;
  if (int c = cmp_int(a.b1, b.b1)) return c;
  if (int c = cmp_int(a.b_plus, b.b_plus)) return c;
  if (int c = cmp_bool(a.spin, b.spin)) return c;
  if (int c = cmp_bool(a.simply_connected, b.simply_connected)) return c;
  if (int c = cmp_bool(a.symplectic, b.symplectic)) return c;
  if (int c = cmp_bool(a.nonessential, b.nonessential)) return c;
  const bool ha = declared_simplicial_volume_.has_value();
  const bool hb = rhs.declared_simplicial_volume_.has_value();
  if (ha != hb) return ha ? 1 : -1;
  if (ha && *declared_simplicial_volume_ != *rhs.declared_simplicial_volume_)
    return *declared_simplicial_volume_ < *rhs.declared_simplicial_volume_ ? -1 : 1;
  return 0;
}

}  // namespace fourfold::blocks
