#include "fourfold/entropy.hpp"

namespace fourfold::entropy {

using exactnum::ExactReal;

const char* status_name(Status s) {
  switch (s) {
    case Status::exact: return "exact";
    case Status::interval_only: return "interval_only";
    case Status::lower_only: return "lower_only";
    case Status::unknown: return "unknown";
  }
  return "?";
}

ExactReal surface_entropy_sq(const BigInt& g) {
  if (g < 1) throw blocks::InvalidParameter("surface_entropy_sq requires g >= 1");
  return ExactReal::pi_term(1, Rational(4 * (g - 1)));
}

ExactReal product_upper_bound(const ExactReal& lx, const ExactReal& ly) {
  return ExactReal::from_int(16) * lx * ly;
}

std::optional<Rational> simplicial_volume(const sums::ManifoldExpr& e) {
  Rational total = 0;
  for (const sums::Summand& s : e.summands()) {
    switch (s.block.kind()) {
      case blocks::BlockKind::surface_product:
        total += Rational(s.multiplicity) * 24 * (s.block.param0() - 1) * (s.block.param1() - 1);
        break;
      case blocks::BlockKind::custom:
        if (!s.block.declared_simplicial_volume()) return std::nullopt;
        total += Rational(s.multiplicity) * *s.block.declared_simplicial_volume();
        break;
      default:
        break;  // the remaining catalogue blocks all have vanishing volume
    }
  }
  return total;
}

EntropyBounds entropy_bounds(const sums::ManifoldExpr& e) {
  const sums::EssentialSplit split = essential_decomposition(e);

  EntropyBounds out;

  BigInt essential_count = 0;
  bool essential_all_surface_products = true;
  for (const sums::Summand& s : split.essential) {
    essential_count += s.multiplicity;
    if (s.block.kind() != blocks::BlockKind::surface_product)
      essential_all_surface_products = false;
  }

  if (essential_count == 0) {
    // Peeling nonessential summands one at a time leaves a nonessential
    // block, and those have vanishing minimal entropy.
    out.lower = ExactReal();
    out.upper = ExactReal();
    out.exact_zero = true;
    out.status = Status::exact;
    out.external_facts = {kFactNonessentialSummand, kFactNonessentialZero};
    return out;
  }

  if (!essential_all_surface_products) {
    // An essential custom block: nothing is known about its entropy.
    out.lower = ExactReal();
    out.status = Status::unknown;
    return out;
  }

  if (essential_count == 1) {
    const sums::Summand& s = split.essential.front();
    const BigInt d = (s.block.param0() - 1) * (s.block.param1() - 1);
    if (d == 0) {
      // Torus-like factor: both bounds collapse to zero.
      out.lower = ExactReal();
      out.upper = ExactReal();
      out.exact_zero = true;
      out.status = Status::exact;
      out.external_facts = {kFactNonessentialSummand, kFactSurfaceEntropy, kFactProductUpper};
      return out;
    }
    out.lower = ExactReal::from_int(16 * d);
    out.upper = ExactReal::pi_term(2, Rational(256 * d));
    out.status = Status::interval_only;
    out.external_facts = {kFactNonessentialSummand, kFactSurfaceEntropy, kFactProductUpper,
                          kFactBcgLower, kFactBucherKarlsson};
    return out;
  }

  // Two or more essential surface-product summands: BCG in dimension 4
  // (4^2/4! = 2/3) against the additive simplicial volume of the cores;
  // no product structure survives the sum, so no upper bound.
  Rational core_volume = 0;
  for (const sums::Summand& s : split.essential)
    core_volume += Rational(s.multiplicity) * 24 * (s.block.param0() - 1) * (s.block.param1() - 1);
  out.lower = ExactReal::from_rational(Rational(2, 3) * core_volume);
  out.status = Status::lower_only;
  out.external_facts = {kFactBcgLower, kFactBucherKarlsson, kFactGromovAdditivity};
  return out;
}

}  // namespace fourfold::entropy
