#pragma once

#include "fourfold/exactnum.hpp"
#include "fourfold/sums.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fourfold::entropy {

// Tags for the standard results a bound leans on; certificates carry them
// so the non-computed steps stay visible.
inline constexpr const char* kFactNonessentialSummand = "connected_sum_nonessential_entropy_invariance";
inline constexpr const char* kFactNonessentialZero = "nonessential_zero_minimal_entropy";
inline constexpr const char* kFactSurfaceEntropy = "hyperbolic_surface_entropy_value";
inline constexpr const char* kFactProductUpper = "product_entropy_upper_bound";
inline constexpr const char* kFactBcgLower = "bcg_entropy_simplicial_volume_bound";
inline constexpr const char* kFactBucherKarlsson = "surface_product_simplicial_volume";
inline constexpr const char* kFactGromovAdditivity = "gromov_connected_sum_additivity";

enum class Status { exact, interval_only, lower_only, unknown };

const char* status_name(Status s);

// Bounds on lambda(M)^4, the fourth power of the minimal volume entropy.
// lower is always a valid lower bound (0 when nothing is known); upper is
// absent for lower_only and unknown.
struct EntropyBounds {
  exactnum::ExactReal lower;
  std::optional<exactnum::ExactReal> upper;
  bool exact_zero = false;
  Status status = Status::unknown;
  std::vector<std::string> external_facts;

  bool operator==(const EntropyBounds&) const = default;
};

// lambda(Sigma_g)^2 = 4 pi (g - 1), g >= 1.
exactnum::ExactReal surface_entropy_sq(const BigInt& g);

// Product bound: lambda(X x Y)^4 <= 16 * lambda(X)^2 * lambda(Y)^2.
exactnum::ExactReal product_upper_bound(const exactnum::ExactReal& lx,
                                        const exactnum::ExactReal& ly);

// Simplicial volume: sum of 24(g-1)(h-1) over surface-product summands and
// declared custom volumes; other catalogue blocks contribute 0. nullopt
// (unknown) as soon as one custom block has no declared volume.
std::optional<Rational> simplicial_volume(const sums::ManifoldExpr& e);

EntropyBounds entropy_bounds(const sums::ManifoldExpr& e);

}  // namespace fourfold::entropy
