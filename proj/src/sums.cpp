#include "fourfold/sums.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fourfold::sums {

ManifoldExpr::ManifoldExpr(std::vector<Summand> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw std::invalid_argument("connected sum needs at least one summand");
  for (const Summand& s : summands_)
    if (s.multiplicity < 1) throw std::invalid_argument("summand multiplicity must be >= 1");
  std::sort(summands_.begin(), summands_.end(),
            [](const Summand& a, const Summand& b) { return a.block < b.block; });
  std::vector<Summand> merged;
  for (Summand& s : summands_) {
    if (!merged.empty() && merged.back().block == s.block)
      merged.back().multiplicity += s.multiplicity;
    else
      merged.push_back(std::move(s));
  }
  summands_ = std::move(merged);
}

ManifoldExpr ManifoldExpr::single(const blocks::BlockSpec& b) {
  return ManifoldExpr({Summand{b, 1}});
}

BigInt ManifoldExpr::total_summands() const {
  BigInt t = 0;
  for (const Summand& s : summands_) t += s.multiplicity;
  return t;
}

ManifoldExpr ManifoldExpr::with_block(const blocks::BlockSpec& b, const BigInt& multiplicity) const {
  std::vector<Summand> ss = summands_;
  ss.push_back(Summand{b, multiplicity});
  return ManifoldExpr(std::move(ss));
}

SumInvariants invariants(const ManifoldExpr& e) {
  SumInvariants out;
  out.chi = 0;
  out.tau = 0;
  out.b1 = 0;
  out.b_plus = 0;
  out.b_minus = 0;
  out.spin = true;
  out.simply_connected = true;
  for (const Summand& s : e.summands()) {
    const blocks::InvariantVector& iv = s.block.invariants();
    out.chi += s.multiplicity * iv.chi;
    out.tau += s.multiplicity * iv.tau;
    out.b1 += s.multiplicity * iv.b1;
    out.b_plus += s.multiplicity * iv.b_plus;
    out.b_minus += s.multiplicity * iv.b_minus;
    out.spin = out.spin && iv.spin;
    out.simply_connected = out.simply_connected && iv.simply_connected;
  }
  out.t = e.total_summands();
  out.chi -= 2 * (out.t - 1);
  return out;
}

BigInt two_chi_plus_3tau(const ManifoldExpr& e) {
  const SumInvariants iv = invariants(e);
  return 2 * iv.chi + 3 * iv.tau;
}

BigInt two_chi_minus_3tau(const ManifoldExpr& e) {
  const SumInvariants iv = invariants(e);
  return 2 * iv.chi - 3 * iv.tau;
}

PaperEqValues paper_eq_mode(const BigInt& m, const BigInt& n, const BigInt& g,
                            const BigInt& h, const BigInt& ell, FamilyKind kind) {
  const BigInt d = (g - 1) * (h - 1);
  PaperEqValues v;
  if (kind == FamilyKind::spin) {
    v.plus = 8 * n + 4 * d - 4 * (3 + ell);
    v.minus = 8 * (12 * m + n) + 96 + 4 * d - 4 * (3 + ell);
  } else {
    v.plus = 8 * n + 4 * d - 12 - ell;
    v.minus = 8 * (12 * m + n) + 84 + 4 * d + 5 * ell;
  }
  return v;
}

EssentialSplit essential_decomposition(const ManifoldExpr& e) {
  EssentialSplit out;
  for (const Summand& s : e.summands())
    (s.block.essential() ? out.essential : out.nonessential).push_back(s);
  return out;
}

}  // namespace fourfold::sums
