#include "fourfold/families.hpp"

#include "fourfold/exprlang.hpp"

#include <algorithm>

namespace fourfold::families {

using blocks::BlockSpec;
using obstructions::VerdictKind;

FamilyParams make_params(FamilyKind kind, const BigInt& m, const BigInt& n,
                         const BigInt& g, const BigInt& h, const BigInt& ell) {
  if (m < 2) throw InvalidParams("family requires m >= 2");
  if (n < 1) throw InvalidParams("family requires n >= 1");
  if (g < 3 || g % 2 == 0) throw InvalidParams("family requires odd g >= 3");
  if (h < 3 || h % 2 == 0) throw InvalidParams("family requires odd h >= 3");
  if (ell < 1)
    throw InvalidParams(kind == FamilyKind::spin ? "family requires ell1 >= 1"
                                                 : "family requires ell2 >= 1");
  return {m, n, g, h, ell, kind};
}

namespace {

struct WindowBounds {
  Rational lower_closed;   // ell >= this
  Rational lower_open;     // ell > this
  Rational upper_open;     // ell < this
};

// The defining inequalities, solved for ell. D = (g-1)(h-1).
WindowBounds window_bounds(const BigInt& m, const BigInt& n, const BigInt& g,
                           const BigInt& h, FamilyKind kind) {
  const Rational D((g - 1) * (h - 1));
  WindowBounds w;
  if (kind == FamilyKind::spin) {
    const Rational ein1 = 2 * Rational(n) - Rational(5, 27) * D - 3;
    const Rational ein2 = 2 * Rational(n + 12 * m) - Rational(5, 27) * D + 21;
    w.upper_open = std::min(ein1, ein2);
    w.lower_closed = Rational(2 * n + (g - 1) * (h - 1), 3) - 3;
    w.lower_open = Rational(-1);  // no open lower constraint
  } else {
    const Rational ein12 = 8 * Rational(n) - Rational(20, 27) * D - 12;
    w.upper_open = ein12;
    w.lower_closed = Rational(8 * n + 4 * (g - 1) * (h - 1), 3) - 12;
    // ein-in-22 rearranged: ell2 > -(8(n+12m) - (20/27)D + 84) / 5.
    w.lower_open = -(8 * Rational(n + 12 * m) - Rational(20, 27) * D + 84) / 5;
  }
  return w;
}

bool mod4_condition(const BigInt& m, const BigInt& n) {
  BigInt r = (4 * m + 2 * n - 1) % 4;
  if (r < 0) r += 4;
  return r == 3;
}

}  // namespace

ParamCheck check_params(const FamilyParams& p) {
  const Rational D((p.g - 1) * (p.h - 1));
  const Rational ell(p.ell);
  ParamCheck out;
  out.mod4_ok = mod4_condition(p.m, p.n);
  const bool spin = p.kind == FamilyKind::spin;

  auto add = [&out](std::string name, Rational margin, bool strict) {
    const bool holds = strict ? margin > 0 : margin >= 0;
    out.margins.push_back({std::move(name), std::move(margin), strict, holds});
  };

  if (spin) {
    add("ein_in_1", 2 * Rational(p.n) - Rational(5, 27) * D - 3 - ell, true);
    add("ein_in_2", 2 * Rational(p.n + 12 * p.m) - Rational(5, 27) * D + 21 - ell, true);
    add("ein_in_3", ell - (Rational(2 * p.n) + D) / 3 + 3, false);
  } else {
    add("ein_in_12", 8 * Rational(p.n) - Rational(20, 27) * D - 12 - ell, true);
    add("ein_in_22", 8 * Rational(p.n + 12 * p.m) - Rational(20, 27) * D + 84 + 5 * ell, true);
    add("ein_in_32", ell - (8 * Rational(p.n) + 4 * D) / 3 + 12, false);
  }

  out.valid = out.mod4_ok;
  for (const InequalityMargin& im : out.margins) out.valid = out.valid && im.holds;
  return out;
}

EllWindow ell_window(const BigInt& m, const BigInt& n, const BigInt& g, const BigInt& h,
                     FamilyKind kind) {
  EllWindow w;
  if (m < 2 || n < 1 || g < 3 || g % 2 == 0 || h < 3 || h % 2 == 0) return w;
  if (!mod4_condition(m, n)) return w;

  const WindowBounds b = window_bounds(m, n, g, h, kind);
  BigInt lo = ceil_rat(b.lower_closed);
  lo = std::max(lo, floor_rat(b.lower_open) + 1);
  lo = std::max(lo, BigInt(1));
  const BigInt last = ceil_rat(b.upper_open) - 1;  // largest integer < upper
  if (lo > last) return w;

  w.empty = false;
  w.lo = lo;
  w.hi = b.upper_open;
  w.first = lo;
  w.last = last;
  return w;
}

std::vector<EnumeratedTuple> enumerate(FamilyKind kind, const EnumBounds& bounds,
                                       std::optional<std::size_t> limit) {
  std::vector<EnumeratedTuple> out;
  if (limit && *limit == 0) return out;
  BigInt g0 = std::max(bounds.g_min, BigInt(3));
  if (g0 % 2 == 0) ++g0;
  BigInt h0 = std::max(bounds.h_min, BigInt(3));
  if (h0 % 2 == 0) ++h0;
  const BigInt m0 = std::max(bounds.m_min, BigInt(2));
  const BigInt n0 = std::max(bounds.n_min, BigInt(1));

  for (BigInt g = g0; g <= bounds.g_max; g += 2)
    for (BigInt h = h0; h <= bounds.h_max; h += 2)
      for (BigInt m = m0; m <= bounds.m_max; ++m)
        for (BigInt n = n0; n <= bounds.n_max; ++n) {
          const EllWindow w = ell_window(m, n, g, h, kind);
          if (w.empty) continue;
          for (BigInt ell = *w.first; ell <= *w.last; ++ell) {
            EnumeratedTuple t{make_params(kind, m, n, g, h, ell), {}};
            t.check = check_params(t.params);
            out.push_back(std::move(t));
            if (limit && out.size() == *limit) return out;
          }
        }
  return out;
}

sums::ManifoldExpr family_expression(const FamilyParams& p, const BigInt& ell) {
  if (ell < 0) throw InvalidParams("Y stage ell must be >= 0");
  std::vector<sums::Summand> ss;
  ss.push_back({BlockSpec::gompf(p.m, p.n), 1});
  ss.push_back({BlockSpec::homotopy_k3(ell), 1});
  ss.push_back({BlockSpec::surface_product(p.g, p.h), 1});
  ss.push_back({p.kind == FamilyKind::spin ? BlockSpec::s1xs3() : BlockSpec::cp2bar(), p.ell});
  return sums::ManifoldExpr(std::move(ss));
}

FamilyCertificate certify_family(const FamilyParams& p, const BigInt& ell_from,
                                 const BigInt& ell_to) {
  if (ell_from < 0 || ell_to < ell_from)
    throw InvalidParams("ell range must satisfy 0 <= from <= to");
  make_params(p.kind, p.m, p.n, p.g, p.h, p.ell);  // range check
  FamilyCertificate cert;
  cert.params = p;
  cert.param_check = check_params(p);
  if (!cert.param_check.valid) throw InvalidParams("family parameters fail check_params");
  cert.ell_from = ell_from;
  cert.ell_to = ell_to;

  const forms::HomeoFingerprint k3_fp =
      forms::fingerprint(sums::ManifoldExpr::single(BlockSpec::k3()));
  const Rational threshold = Rational(128, 27) * (p.g - 1) * (p.h - 1);

  cert.fingerprint_stability = true;
  bool all_valid = true;
  std::vector<std::string> facts = {kFactBandwidth};

  for (BigInt ell = ell_from; ell <= ell_to; ++ell) {
    PerEllRecord rec;
    rec.ell = ell;
    const sums::ManifoldExpr expr = family_expression(p, ell);
    rec.expression = exprlang::pretty(expr);
    rec.invariants = sums::invariants(expr);
    rec.entropy = entropy::entropy_bounds(expr);

    rec.entropy_lower_positive.check = "entropy_lower_positive";
    rec.entropy_lower_positive.margin = rec.entropy.lower;
    rec.entropy_lower_positive.verdict =
        exactnum::sign(rec.entropy.lower) == exactnum::Sign::positive ? VerdictKind::proven
                                                                      : VerdictKind::refuted;
    rec.entropy_lower_positive.external_facts = rec.entropy.external_facts;

    rec.strict_ght = obstructions::strict_ght_entropy(expr);
    rec.einstein = obstructions::einstein_obstruction(expr);

    rec.paper_values = sums::paper_eq_mode(p.m, p.n, p.g, p.h, p.ell, p.kind);
    rec.paper_ght_plus_margin = Rational(rec.paper_values.plus) - threshold;
    rec.paper_ght_minus_margin = Rational(rec.paper_values.minus) - threshold;
    rec.paper_ght_proven =
        rec.paper_ght_plus_margin > 0 && rec.paper_ght_minus_margin > 0;

    rec.fingerprint_core =
        forms::fingerprint(sums::ManifoldExpr::single(BlockSpec::homotopy_k3(ell)));
    rec.fingerprint_matches_k3 = rec.fingerprint_core == k3_fp;
    cert.fingerprint_stability = cert.fingerprint_stability && rec.fingerprint_matches_k3;

    rec.all_proven = rec.entropy_lower_positive.verdict == VerdictKind::proven &&
                     rec.strict_ght.verdict == VerdictKind::proven &&
                     rec.einstein.verdict == VerdictKind::proven;
    all_valid = all_valid && rec.all_proven && rec.fingerprint_matches_k3;

    for (const auto* oc : {&rec.entropy_lower_positive, &rec.strict_ght, &rec.einstein})
      for (const std::string& f : oc->external_facts) facts.push_back(f);

    cert.per_ell.push_back(std::move(rec));
  }

  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
  cert.external_facts = std::move(facts);
  cert.valid = all_valid;
  cert.infinite_diffeotypes_citation = kInfiniteDiffeotypesCitation;
  return cert;
}

}  // namespace fourfold::families
