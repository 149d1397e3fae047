#include "fourfold/json_io.hpp"

#include "fourfold/version.hpp"

#include <algorithm>

namespace fourfold::jsonio {

ojson exact_real_json(const exactnum::ExactReal& v) {
  ojson out = ojson::object();
  for (const auto& [d, c] : v.terms()) out[std::to_string(d)] = rat_string(c);
  return out;
}

ojson invariants_json(const sums::SumInvariants& iv, const BigInt& two_plus,
                      const BigInt& two_minus) {
  ojson out;
  out["chi"] = iv.chi.str();
  out["tau"] = iv.tau.str();
  out["b1"] = iv.b1.str();
  out["b_plus"] = iv.b_plus.str();
  out["b_minus"] = iv.b_minus.str();
  out["spin"] = iv.spin;
  out["simply_connected"] = iv.simply_connected;
  out["summands"] = iv.t.str();
  out["two_chi_plus_3tau"] = two_plus.str();
  out["two_chi_minus_3tau"] = two_minus.str();
  return out;
}

ojson entropy_json(const entropy::EntropyBounds& b) {
  ojson out;
  out["status"] = entropy::status_name(b.status);
  out["exact_zero"] = b.exact_zero;
  out["lower"] = exact_real_json(b.lower);
  out["upper"] = b.upper ? exact_real_json(*b.upper) : ojson(nullptr);
  out["external_facts"] = b.external_facts;
  return out;
}

ojson check_json(const obstructions::CheckOutcome& oc) {
  ojson out;
  out["check"] = oc.check;
  out["verdict"] = obstructions::verdict_name(oc.verdict);
  out["equality"] = oc.equality;
  out["margin"] = oc.margin ? exact_real_json(*oc.margin) : ojson(nullptr);
  ojson hyps = ojson::array();
  for (const obstructions::Hypothesis& h : oc.hypotheses) {
    ojson j;
    j["name"] = h.name;
    j["holds"] = h.holds;
    j["detail"] = h.detail;
    hyps.push_back(std::move(j));
  }
  out["hypotheses"] = std::move(hyps);
  out["external_facts"] = oc.external_facts;
  return out;
}

ojson form_class_json(const forms::UnimodularFormClass& c) {
  ojson out;
  out["rank"] = c.rank.str();
  out["signature"] = c.signature.str();
  out["parity"] = c.parity == forms::Parity::even ? "even" : "odd";
  return out;
}

ojson decomposition_json(const forms::StandardDecomposition& d) {
  ojson out;
  if (const auto* odd = std::get_if<forms::OddDiag>(&d)) {
    out["shape"] = "odd_diag";
    out["p"] = odd->p.str();
    out["q"] = odd->q.str();
  } else if (const auto* even = std::get_if<forms::EvenSplit>(&d)) {
    out["shape"] = "even_split";
    out["e8_count"] = even->e8_count.str();
    out["hyperbolic_count"] = even->hyperbolic_count.str();
  } else {
    out["shape"] = "unclassified";
    out["reason"] = std::get<forms::Unclassified>(d).reason;
  }
  return out;
}

ojson fingerprint_json(const forms::HomeoFingerprint& fp) {
  ojson out;
  out["rank"] = fp.form.rank.str();
  out["signature"] = fp.form.signature.str();
  out["parity"] = fp.form.parity == forms::Parity::even ? "even" : "odd";
  out["b1"] = fp.b1.str();
  out["spin"] = fp.spin;
  out["grade"] = fp.grade == forms::Grade::exact ? "exact" : "heuristic";
  return out;
}

ojson family_params_json(const families::FamilyParams& p) {
  ojson out;
  out["kind"] = family_kind_name(p.kind);
  out["m"] = p.m.str();
  out["n"] = p.n.str();
  out["g"] = p.g.str();
  out["h"] = p.h.str();
  out[p.kind == FamilyKind::spin ? "ell1" : "ell2"] = p.ell.str();
  return out;
}

ojson param_check_json(const families::ParamCheck& pc) {
  ojson out;
  out["valid"] = pc.valid;
  out["mod4_ok"] = pc.mod4_ok;
  ojson margins = ojson::array();
  for (const families::InequalityMargin& im : pc.margins) {
    ojson j;
    j["name"] = im.name;
    j["margin"] = rat_string(im.margin);
    j["strict"] = im.strict;
    j["holds"] = im.holds;
    margins.push_back(std::move(j));
  }
  out["margins"] = std::move(margins);
  return out;
}

ojson expression_certificate_json(const std::string& expression, const sums::SumInvariants& iv,
                                  const entropy::EntropyBounds& bounds,
                                  const std::vector<obstructions::CheckOutcome>& checks) {
  ojson out;
  out["schema_version"] = kSchemaVersion;
  out["tool_version"] = kToolVersion;
  out["expression"] = expression;
  out["invariants"] = invariants_json(iv, 2 * iv.chi + 3 * iv.tau, 2 * iv.chi - 3 * iv.tau);
  out["entropy"] = entropy_json(bounds);
  ojson cs = ojson::array();
  std::vector<std::string> facts;
  for (const obstructions::CheckOutcome& oc : checks) {
    cs.push_back(check_json(oc));
    facts.insert(facts.end(), oc.external_facts.begin(), oc.external_facts.end());
  }
  facts.insert(facts.end(), bounds.external_facts.begin(), bounds.external_facts.end());
  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
  out["checks"] = std::move(cs);
  out["external_facts"] = facts;
  return out;
}

ojson family_certificate_json(const families::FamilyCertificate& cert) {
  ojson out;
  out["schema_version"] = kSchemaVersion;
  out["tool_version"] = kToolVersion;
  out["params"] = family_params_json(cert.params);
  out["param_check"] = param_check_json(cert.param_check);
  out["ell_range"] = {{"from", cert.ell_from.str()}, {"to", cert.ell_to.str()}};
  ojson rows = ojson::array();
  for (const families::PerEllRecord& rec : cert.per_ell) {
    ojson j;
    j["ell"] = rec.ell.str();
    j["expression"] = rec.expression;
    j["invariants"] = invariants_json(rec.invariants, 2 * rec.invariants.chi + 3 * rec.invariants.tau,
                                      2 * rec.invariants.chi - 3 * rec.invariants.tau);
    j["entropy"] = entropy_json(rec.entropy);
    j["checks"] = {check_json(rec.entropy_lower_positive), check_json(rec.strict_ght),
                   check_json(rec.einstein)};
    ojson displayed;
    displayed["two_chi_plus_3tau"] = rec.paper_values.plus.str();
    displayed["two_chi_minus_3tau"] = rec.paper_values.minus.str();
    displayed["ght_plus_margin"] = rat_string(rec.paper_ght_plus_margin);
    displayed["ght_minus_margin"] = rat_string(rec.paper_ght_minus_margin);
    displayed["ght_proven"] = rec.paper_ght_proven;
    j["displayed_bookkeeping"] = std::move(displayed);
    j["fingerprint_core"] = fingerprint_json(rec.fingerprint_core);
    j["fingerprint_matches_k3"] = rec.fingerprint_matches_k3;
    j["all_proven"] = rec.all_proven;
    rows.push_back(std::move(j));
  }
  out["per_ell"] = std::move(rows);
  out["fingerprint_stability"] = cert.fingerprint_stability;
  out["valid"] = cert.valid;
  out["external_facts"] = cert.external_facts;
  out["infinite_diffeotypes_citation"] = cert.infinite_diffeotypes_citation;
  return out;
}

ojson enumerate_json(FamilyKind kind, const std::vector<families::EnumeratedTuple>& tuples) {
  ojson out;
  out["schema_version"] = kSchemaVersion;
  out["tool_version"] = kToolVersion;
  out["kind"] = family_kind_name(kind);
  ojson rows = ojson::array();
  for (const families::EnumeratedTuple& t : tuples) {
    ojson j;
    j["params"] = family_params_json(t.params);
    j["check"] = param_check_json(t.check);
    rows.push_back(std::move(j));
  }
  out["tuples"] = std::move(rows);
  return out;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

}  // namespace fourfold::jsonio
