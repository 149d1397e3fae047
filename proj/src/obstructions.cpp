#include "fourfold/obstructions.hpp"

#include <sstream>

namespace fourfold::obstructions {

using exactnum::ExactReal;
using exactnum::Sign;

const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::proven: return "proven";
    case VerdictKind::refuted: return "refuted";
    case VerdictKind::indeterminate: return "indeterminate";
    case VerdictKind::hypotheses_not_met: return "hypotheses_not_met";
  }
  return "?";
}

std::vector<std::string> CheckOutcome::reasons() const {
  std::vector<std::string> out;
  for (const Hypothesis& h : hypotheses)
    if (!h.holds) out.push_back(h.name);
  return out;
}

namespace {

BigInt two_chi_minus_3abs_tau(const sums::SumInvariants& iv) {
  const BigInt abs_tau = iv.tau < 0 ? BigInt(-iv.tau) : iv.tau;
  return 2 * iv.chi - 3 * abs_tau;
}

}  // namespace

CheckOutcome hitchin_thorpe(const sums::ManifoldExpr& e) {
  const BigInt margin = two_chi_minus_3abs_tau(sums::invariants(e));
  CheckOutcome out;
  out.check = "hitchin_thorpe";
  out.margin = ExactReal::from_int(margin);
  out.equality = margin == 0;
  out.verdict = margin >= 0 ? VerdictKind::proven : VerdictKind::refuted;
  return out;
}

CheckOutcome ght_simplicial(const sums::ManifoldExpr& e) {
  CheckOutcome out;
  out.check = "ght_simplicial";
  const std::optional<Rational> vol = entropy::simplicial_volume(e);
  if (!vol) {
    out.verdict = VerdictKind::indeterminate;
    out.hypotheses.push_back({"simplicial_volume_known", false, "custom block without declared volume"});
    return out;
  }
  out.hypotheses.push_back({"simplicial_volume_known", true, ""});
  out.external_facts = {entropy::kFactBucherKarlsson};
  const BigInt lhs = two_chi_minus_3abs_tau(sums::invariants(e));
  // margin = 2chi - 3|tau| - ||X||/(81 pi^2), an element of Q[pi,1/pi].
  const ExactReal margin =
      ExactReal::from_int(lhs) - ExactReal::pi_term(-2, *vol / 81);
  out.margin = margin;
  const Sign s = exactnum::sign(margin);
  out.equality = s == Sign::zero;
  out.verdict = s == Sign::negative ? VerdictKind::refuted : VerdictKind::proven;
  return out;
}

CheckOutcome strict_ght_entropy(const sums::ManifoldExpr& e) {
  CheckOutcome out;
  out.check = "strict_ght_entropy";
  const entropy::EntropyBounds bounds = entropy::entropy_bounds(e);
  out.external_facts = bounds.external_facts;
  const ExactReal lhs = ExactReal::from_int(two_chi_minus_3abs_tau(sums::invariants(e)));
  const ExactReal coeff = ExactReal::pi_term(-2, Rational(1, 54));

  if (bounds.upper) {
    const ExactReal margin = lhs - coeff * *bounds.upper;
    if (exactnum::sign(margin) == Sign::positive) {
      out.verdict = VerdictKind::proven;
      out.margin = margin;
      out.hypotheses.push_back({"entropy_upper_bound_known", true, ""});
      return out;
    }
  }

  // lower is a valid bound in every status (0 when nothing is known).
  const ExactReal refute_margin = lhs - coeff * bounds.lower;
  if (exactnum::sign(refute_margin) != Sign::positive) {
    out.verdict = VerdictKind::refuted;
    out.margin = refute_margin;
    out.hypotheses.push_back({"entropy_lower_bound_known", true, ""});
    return out;
  }

  out.verdict = VerdictKind::indeterminate;
  out.hypotheses.push_back({"entropy_bounds_decisive", false,
                            std::string("entropy status: ") + entropy::status_name(bounds.status)});
  return out;
}

namespace {

bool admissible_core(const blocks::InvariantVector& iv) {
  return iv.simply_connected && iv.symplectic && ((iv.b_plus - 3) % 4 == 0);
}

std::string block_brief(const sums::Summand& s) {
  std::ostringstream os;
  os << "kind " << static_cast<int>(s.block.kind()) << ", b+ " << s.block.invariants().b_plus.str();
  return os.str();
}

}  // namespace

CheckOutcome einstein_obstruction(const sums::ManifoldExpr& e) {
  CheckOutcome out;
  out.check = "einstein_obstruction";

  BigInt n = 0, k = 0, l1 = 0, l2 = 0;
  BigInt g = 0, h = 0;
  BigInt core_sum = 0;  // sum over the X_m of 2chi + 3tau
  bool cores_admissible = true;
  bool uniform_surfaces = true;
  std::string bad_core;

  for (const sums::Summand& s : e.summands()) {
    const blocks::InvariantVector& iv = s.block.invariants();
    switch (s.block.kind()) {
      case blocks::BlockKind::surface_product:
        if (k == 0) {
          g = s.block.param0();
          h = s.block.param1();
        } else if (g != s.block.param0() || h != s.block.param1()) {
          uniform_surfaces = false;
        }
        k += s.multiplicity;
        break;
      case blocks::BlockKind::s1xs3:
        l1 += s.multiplicity;
        break;
      case blocks::BlockKind::cp2bar:
        l2 += s.multiplicity;
        break;
      default:
        if (!admissible_core(iv)) {
          cores_admissible = false;
          if (bad_core.empty()) bad_core = block_brief(s);
        }
        n += s.multiplicity;
        core_sum += s.multiplicity * (2 * iv.chi + 3 * iv.tau);
        break;
    }
  }

  // Vacuously true without a surface product so k_ge_1 is the one reason.
  const bool g_odd = k == 0 || g % 2 != 0;
  const bool h_odd = k == 0 || h % 2 != 0;
  out.hypotheses = {
      {"cores_admissible", cores_admissible,
       cores_admissible ? "" : "not simply connected symplectic with b+ == 3 (mod 4): " + bad_core},
      {"n_ge_1", n >= 1, "n = " + n.str()},
      {"k_ge_1", k >= 1, "k = " + k.str()},
      {"n_plus_k_le_3", n + k <= 3, "n + k = " + BigInt(n + k).str()},
      {"g_odd", g_odd, k > 0 ? "g = " + g.str() : "no surface product"},
      {"h_odd", h_odd, k > 0 ? "h = " + h.str() : "no surface product"},
      {"uniform_surface_product", uniform_surfaces,
       uniform_surfaces ? "" : "distinct (g,h) among surface products"},
  };

  for (const Hypothesis& hy : out.hypotheses) {
    if (!hy.holds) {
      out.verdict = VerdictKind::hypotheses_not_met;
      return out;
    }
  }

  out.external_facts = {kFactMonopoleObstruction};
  const Rational lhs = Rational(4 * (n + l1 + k) + l2);
  const Rational rhs = Rational(core_sum + 4 * k * (1 - h) * (1 - g), 3);
  const Rational margin = lhs - rhs;
  out.margin = ExactReal::from_rational(margin);
  out.verdict = margin >= 0 ? VerdictKind::proven : VerdictKind::indeterminate;
  out.equality = margin == 0;
  return out;
}

}  // namespace fourfold::obstructions
