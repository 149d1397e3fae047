#pragma once

#include "fourfold/entropy.hpp"
#include "fourfold/exactnum.hpp"
#include "fourfold/families.hpp"
#include "fourfold/forms.hpp"
#include "fourfold/obstructions.hpp"
#include "fourfold/sums.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fourfold::jsonio {

// ordered_json keeps insertion order, so every document has a fixed field
// layout and identical runs serialize byte-identically. Exact values are
// strings ("num/den", decimal integers) or degree->coefficient maps; floats
// never appear.
using ojson = nlohmann::ordered_json;

ojson exact_real_json(const exactnum::ExactReal& v);
ojson invariants_json(const sums::SumInvariants& iv, const BigInt& two_plus,
                      const BigInt& two_minus);
ojson entropy_json(const entropy::EntropyBounds& b);
ojson check_json(const obstructions::CheckOutcome& oc);
ojson form_class_json(const forms::UnimodularFormClass& c);
ojson decomposition_json(const forms::StandardDecomposition& d);
ojson fingerprint_json(const forms::HomeoFingerprint& fp);
ojson param_check_json(const families::ParamCheck& pc);
ojson family_params_json(const families::FamilyParams& p);

// Document for `invariants` and `check`: the expression certificate.
ojson expression_certificate_json(const std::string& expression, const sums::SumInvariants& iv,
                                  const entropy::EntropyBounds& bounds,
                                  const std::vector<obstructions::CheckOutcome>& checks);

// Document for `certify`.
ojson family_certificate_json(const families::FamilyCertificate& cert);

// Document for `enumerate`.
ojson enumerate_json(FamilyKind kind, const std::vector<families::EnumeratedTuple>& tuples);

// dump(2) plus trailing newline.
std::string dump(const ojson& doc);

}  // namespace fourfold::jsonio
