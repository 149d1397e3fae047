#pragma once

#include "fourfold/common.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fourfold::blocks {

// Classical invariants of a closed oriented smooth 4-manifold, plus the
// flags the downstream checks consume. b2 = b_plus + b_minus is derived.
struct InvariantVector {
  BigInt chi;
  BigInt tau;
  BigInt b1;
  BigInt b_plus;
  BigInt b_minus;
  bool spin = false;
  bool simply_connected = false;
  bool symplectic = false;
  bool nonessential = false;

  BigInt second_betti() const { return b_plus + b_minus; }
  bool operator==(const InvariantVector&) const = default;
};

enum class Violation {
  negative_betti,            // b1, b_plus or b_minus below zero
  betti_inconsistency,       // b_plus + b_minus != chi - 2 + 2*b1
  signature_inconsistency,   // tau != b_plus - b_minus
  simply_connected_b1,       // simply connected but b1 != 0
  simply_connected_essential,// simply connected but not flagged nonessential
  rokhlin_violation,         // spin and simply connected but tau % 16 != 0
};

const char* violation_name(Violation v);

std::vector<Violation> validate(const InvariantVector& iv);

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvariantViolation : std::domain_error {
  explicit InvariantViolation(std::vector<Violation> vs);
  std::vector<Violation> violations;
};

enum class BlockKind { gompf, homotopy_k3, k3, surface_product, s1xs3, cp2bar, custom };

// One summand type from the catalogue. Value type; the invariant vector is
// computed at construction and every constructed block passes validate().
class BlockSpec {
 public:
  // chi = 24m + 4n, tau = -16m, b+ = 4m + 2n - 1; spin, simply connected,
  // symplectic, nonessential. Requires m >= 2, n >= 1.
  static BlockSpec gompf(const BigInt& m, const BigInt& n);
  // Homotopy K3 stage ell >= 0; invariants independent of ell.
  static BlockSpec homotopy_k3(const BigInt& ell);
  static BlockSpec k3();
  // Sigma_g x Sigma_h, g, h >= 1; essential (even when g = h = 1).
  static BlockSpec surface_product(const BigInt& g, const BigInt& h);
  static BlockSpec s1xs3();
  static BlockSpec cp2bar();
  // Throws InvariantViolation when validate(iv) is nonempty. The optional
  // simplicial volume is the only way a custom block gets one (the
  // expression grammar cannot declare it).
  static BlockSpec custom(std::string name, const InvariantVector& iv,
                          std::optional<Rational> simplicial_volume = std::nullopt);

  BlockKind kind() const { return kind_; }
  const InvariantVector& invariants() const { return iv_; }
  const std::string& name() const { return name_; }  // custom only
  const std::optional<Rational>& declared_simplicial_volume() const {
    return declared_simplicial_volume_;
  }

  // Parameters by kind: gompf (m, n), homotopy_k3 (ell, unused),
  // surface_product (g, h); zero for the parameterless blocks.
  const BigInt& param0() const { return p0_; }
  const BigInt& param1() const { return p1_; }

  bool essential() const { return !iv_.nonessential; }

  // Canonical catalogue order: kind, then parameters, then (custom) name
  // and invariants. Total order; equal blocks merge in a connected sum.
  int compare(const BlockSpec& rhs) const;
  bool operator==(const BlockSpec& rhs) const { return compare(rhs) == 0; }
  bool operator!=(const BlockSpec& rhs) const { return compare(rhs) != 0; }
  bool operator<(const BlockSpec& rhs) const { return compare(rhs) < 0; }

 private:
  BlockSpec(BlockKind kind, BigInt p0, BigInt p1, std::string name, InvariantVector iv);

  BlockKind kind_;
  BigInt p0_;
  BigInt p1_;
  std::string name_;
  std::optional<Rational> declared_simplicial_volume_;
  InvariantVector iv_;
};

}  // namespace fourfold::blocks
