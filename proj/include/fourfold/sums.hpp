#pragma once

#include "fourfold/blocks.hpp"

#include <vector>

namespace fourfold::sums {

struct Summand {
  blocks::BlockSpec block;
  BigInt multiplicity;  // >= 1

  bool operator==(const Summand& rhs) const {
    return multiplicity == rhs.multiplicity && block == rhs.block;
  }
};

// Connected sum as a nonempty multiset of blocks. Normal form: summands
// sorted in catalogue order with equal blocks merged, so structural
// equality is multiset equality and printing is canonical.
class ManifoldExpr {
 public:
  explicit ManifoldExpr(std::vector<Summand> summands);
  static ManifoldExpr single(const blocks::BlockSpec& b);

  const std::vector<Summand>& summands() const { return summands_; }
  BigInt total_summands() const;  // t = sum of multiplicities

  ManifoldExpr with_block(const blocks::BlockSpec& b, const BigInt& multiplicity = 1) const;

  bool operator==(const ManifoldExpr& rhs) const { return summands_ == rhs.summands_; }
  bool operator!=(const ManifoldExpr& rhs) const { return !(*this == rhs); }

 private:
  std::vector<Summand> summands_;
};

struct SumInvariants {
  BigInt chi;
  BigInt tau;
  BigInt b1;
  BigInt b_plus;
  BigInt b_minus;
  BigInt t;  // number of summands, with multiplicity
  bool spin = false;
  bool simply_connected = false;

  bool operator==(const SumInvariants&) const = default;
};

// chi = sum chi_i - 2(t - 1); tau, b1, b+, b- additive; spin and simple
// connectivity are ANDs over the summands.
SumInvariants invariants(const ManifoldExpr& e);

BigInt two_chi_plus_3tau(const ManifoldExpr& e);
BigInt two_chi_minus_3tau(const ManifoldExpr& e);

// The 2chi+3tau / 2chi-3tau values the family equations display for
// M(m,n,-,g,h,ell1) and N(m,n,-,g,h,ell2). These differ from the
// first-principles values of the corresponding expression by exactly
// 4(g-1)(h-1)+4 on both signs; both bookkeepings are kept on file.
struct PaperEqValues {
  BigInt plus;   // 2chi + 3tau
  BigInt minus;  // 2chi - 3tau
};
PaperEqValues paper_eq_mode(const BigInt& m, const BigInt& n, const BigInt& g,
                            const BigInt& h, const BigInt& ell, FamilyKind kind);

struct EssentialSplit {
  std::vector<Summand> essential;
  std::vector<Summand> nonessential;
};
EssentialSplit essential_decomposition(const ManifoldExpr& e);

}  // namespace fourfold::sums
