#pragma once

#include "fourfold/entropy.hpp"
#include "fourfold/sums.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fourfold::obstructions {

inline constexpr const char* kFactMonopoleObstruction = "stable_cohomotopy_monopole_obstruction";

enum class VerdictKind { proven, refuted, indeterminate, hypotheses_not_met };

const char* verdict_name(VerdictKind v);

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string detail;

  bool operator==(const Hypothesis&) const = default;
};

// One obstruction check with its audit trail. margin, when present, is the
// exact distance to the decision threshold and its sign matches the verdict
// (nonnegative for proven, nonpositive for refuted). reasons() lists the
// failed hypotheses behind a hypotheses_not_met verdict.
struct CheckOutcome {
  std::string check;
  VerdictKind verdict = VerdictKind::indeterminate;
  std::optional<exactnum::ExactReal> margin;
  bool equality = false;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> external_facts;

  std::vector<std::string> reasons() const;
};

// 2chi >= 3|tau|, necessary for an Einstein metric: proven (strictly or
// with the equality flag) when it holds, refuted when violated.
CheckOutcome hitchin_thorpe(const sums::ManifoldExpr& e);

// 2chi - 3|tau| - ||X|| / (81 pi^2): proven / refuted by sign, and
// indeterminate when the simplicial volume is unknown.
CheckOutcome ght_simplicial(const sums::ManifoldExpr& e);

// Strict entropy strengthening: proven when 2chi - 3|tau| exceeds
// upper/(54 pi^2), refuted when it is at most lower/(54 pi^2), otherwise
// indeterminate. One-directional in the indeterminate band.
CheckOutcome strict_ght_entropy(const sums::ManifoldExpr& e);

// Non-existence criterion for sums (# X_m) # k(Sigma_h x Sigma_g)
// # l1(S1 x S3) # l2 CP2bar with 1 <= n, 1 <= k, n + k <= 3, g and h odd,
// every X_m simply connected symplectic with b+ == 3 (mod 4), and one
// surface product shape across the k copies. Proven when
//   4(n + l1 + k) + l2 >= (1/3)(sum_m (2chi(X_m) + 3tau(X_m)) + 4k(1-h)(1-g));
// a failed inequality is only indeterminate, never an existence proof.
CheckOutcome einstein_obstruction(const sums::ManifoldExpr& e);

}  // namespace fourfold::obstructions
