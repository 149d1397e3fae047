#pragma once

#include "fourfold/forms.hpp"
#include "fourfold/obstructions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fourfold::families {

inline constexpr const char* kFactBandwidth = "bandwidth_argument_infinitely_many_diffeotypes";

// The infinite-diffeotype claim rides along as a citation; nothing here
// computes it.
inline constexpr const char* kInfiniteDiffeotypesCitation =
    "Along the ell sequence the summands realize infinitely many distinct "
    "diffeomorphism types; cited external fact (bandwidth argument, "
    "finiteness of monopole classes), not computed by this tool.";

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Candidate family parameters. ell is ell1 (S1 x S3 copies, spin) or ell2
// (CP2bar copies, nonspin). Declared ranges are enforced at construction;
// the defining inequalities are a check_params verdict, not a type error.
struct FamilyParams {
  BigInt m, n, g, h, ell;
  FamilyKind kind = FamilyKind::spin;

  bool operator==(const FamilyParams&) const = default;
};

FamilyParams make_params(FamilyKind kind, const BigInt& m, const BigInt& n,
                         const BigInt& g, const BigInt& h, const BigInt& ell);

struct InequalityMargin {
  std::string name;
  Rational margin;
  bool strict = false;  // holds iff margin > 0 (strict) or >= 0 (non-strict)
  bool holds = false;

  bool operator==(const InequalityMargin&) const = default;
};

struct ParamCheck {
  bool valid = false;
  bool mod4_ok = false;  // 4m + 2n - 1 == 3 (mod 4), i.e. n even
  std::vector<InequalityMargin> margins;
};

ParamCheck check_params(const FamilyParams& p);

// Admissible ell values for fixed (m, n, g, h): the integers in
// [max(1, ceil(lower bound)), strict rational upper). Empty whenever the
// mod-4 condition fails, so the window always matches a brute-force scan
// of check_params.
struct EllWindow {
  bool empty = true;
  BigInt lo;      // inclusive integer lower edge (when nonempty)
  Rational hi;    // exclusive rational upper edge
  std::optional<BigInt> first, last;

  bool contains(const BigInt& ell) const {
    return !empty && ell >= *first && ell <= *last;
  }
};

EllWindow ell_window(const BigInt& m, const BigInt& n, const BigInt& g, const BigInt& h,
                     FamilyKind kind);

struct EnumBounds {
  BigInt g_min, g_max;
  BigInt h_min, h_max;
  BigInt m_min = 2, m_max;
  BigInt n_min = 1, n_max;
};

struct EnumeratedTuple {
  FamilyParams params;
  ParamCheck check;
};

// Valid tuples in lexicographic (g, h, m, n, ell) order; even g or h and
// out-of-range values are skipped, empty ranges yield an empty stream.
std::vector<EnumeratedTuple> enumerate(FamilyKind kind, const EnumBounds& bounds,
                                       std::optional<std::size_t> limit = std::nullopt);

// X(m,n) # Y(ell) # Sigma(g)xSigma(h) # ell1 * S1xS3   (spin)
// X(m,n) # Y(ell) # Sigma(g)xSigma(h) # ell2 * CP2bar  (nonspin)
sums::ManifoldExpr family_expression(const FamilyParams& p, const BigInt& ell);

// Everything recorded for one member of the family. The displayed-value
// margins compare the displayed 2chi+-3tau against the same strict-GHT
// threshold 128/27 (g-1)(h-1), keeping both bookkeepings on file.
struct PerEllRecord {
  BigInt ell;
  std::string expression;
  sums::SumInvariants invariants;
  entropy::EntropyBounds entropy;
  obstructions::CheckOutcome entropy_lower_positive;
  obstructions::CheckOutcome strict_ght;
  obstructions::CheckOutcome einstein;
  sums::PaperEqValues paper_values;
  Rational paper_ght_plus_margin;
  Rational paper_ght_minus_margin;
  bool paper_ght_proven = false;
  forms::HomeoFingerprint fingerprint_core;  // of Y(ell)
  bool fingerprint_matches_k3 = false;
  bool all_proven = false;
};

struct FamilyCertificate {
  FamilyParams params;
  ParamCheck param_check;
  BigInt ell_from, ell_to;
  std::vector<PerEllRecord> per_ell;
  bool fingerprint_stability = false;
  bool valid = false;
  std::vector<std::string> external_facts;
  std::string infinite_diffeotypes_citation;
};

// Pre: check_params(p).valid, else InvalidParams. Certifies every ell in
// [ell_from, ell_to]; valid iff all per-ell verdicts are proven and the
// core fingerprint never moves.
FamilyCertificate certify_family(const FamilyParams& p, const BigInt& ell_from,
                                 const BigInt& ell_to);

}  // namespace fourfold::families
