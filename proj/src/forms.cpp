#include "fourfold/forms.hpp"

namespace fourfold::forms {

UnimodularFormClass UnimodularFormClass::make(const BigInt& rank, const BigInt& signature,
                                              Parity parity) {
  if (rank < 0) throw InvalidFormClass("form rank must be nonnegative");
  if (signature > rank || signature < -rank)
    throw InvalidFormClass("|signature| exceeds rank");
  if ((rank - signature) % 2 != 0)
    throw InvalidFormClass("rank and signature have different parity");
  if (parity == Parity::even && signature % 8 != 0)
    throw InvalidFormClass("even form with signature not divisible by 8");
  return {rank, signature, parity};
}

StandardDecomposition standard_decomposition(const UnimodularFormClass& c) {
  if (c.definite()) return Unclassified{"definite"};
  if (c.parity == Parity::odd) {
    // rank == 0 only happens here for the empty form, p = q = 0.
    return OddDiag{(c.rank + c.signature) / 2, (c.rank - c.signature) / 2};
  }
  const BigInt e8 = c.signature / 8;
  const BigInt e8_abs = e8 < 0 ? BigInt(-e8) : e8;
  return EvenSplit{e8, (c.rank - 8 * e8_abs) / 2};
}

UnimodularFormClass form_of(const sums::ManifoldExpr& e) {
  const sums::SumInvariants iv = sums::invariants(e);
  return UnimodularFormClass::make(iv.b_plus + iv.b_minus, iv.tau,
                                   iv.spin ? Parity::even : Parity::odd);
}

HomeoFingerprint fingerprint(const sums::ManifoldExpr& e) {
  const sums::SumInvariants iv = sums::invariants(e);
  HomeoFingerprint fp;
  fp.form = form_of(e);
  fp.b1 = iv.b1;
  fp.spin = iv.spin;
  fp.grade = iv.simply_connected ? Grade::exact : Grade::heuristic;
  return fp;
}

}  // namespace fourfold::forms
