#pragma once

#include "fourfold/sums.hpp"

#include <string>
#include <variant>

namespace fourfold::forms {

enum class Parity { even, odd };

struct InvalidFormClass : std::domain_error {
  using std::domain_error::domain_error;
};

// Stable class of a unimodular symmetric bilinear form over Z.
// Invariants: |signature| <= rank, rank == signature (mod 2), and even
// parity forces signature == 0 (mod 8); make() rejects anything else.
struct UnimodularFormClass {
  BigInt rank;
  BigInt signature;
  Parity parity = Parity::odd;

  static UnimodularFormClass make(const BigInt& rank, const BigInt& signature, Parity parity);
  bool definite() const { return rank != 0 && (signature == rank || signature == -rank); }
  bool operator==(const UnimodularFormClass&) const = default;
};

// p copies of <+1> and q of <-1>.
struct OddDiag {
  BigInt p, q;
  bool operator==(const OddDiag&) const = default;
};
// e8_count copies of E8 (sign gives orientation) and hyperbolic_count of H.
struct EvenSplit {
  BigInt e8_count;
  BigInt hyperbolic_count;
  bool operator==(const EvenSplit&) const = default;
};
struct Unclassified {
  std::string reason;
  bool operator==(const Unclassified&) const = default;
};

using StandardDecomposition = std::variant<OddDiag, EvenSplit, Unclassified>;

// Indefinite (or rank-0) classes split by Serre's classification; nonzero
// definite classes are reported unclassified rather than guessed at.
StandardDecomposition standard_decomposition(const UnimodularFormClass& c);

// rank = b+ + b-, signature = tau, parity even iff the sum is spin.
UnimodularFormClass form_of(const sums::ManifoldExpr& e);

enum class Grade { exact, heuristic };

// Homeomorphism-type fingerprint. Grade is exact only for simply connected
// sums, where form + b1 + spin decide the type with Kirby-Siebenmann taken
// to vanish; otherwise it is a heuristic comparison key.
struct HomeoFingerprint {
  UnimodularFormClass form;
  BigInt b1;
  bool spin = false;
  Grade grade = Grade::heuristic;

  bool operator==(const HomeoFingerprint&) const = default;
};

HomeoFingerprint fingerprint(const sums::ManifoldExpr& e);

}  // namespace fourfold::forms
