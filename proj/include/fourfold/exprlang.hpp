#pragma once

#include "fourfold/sums.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fourfold::exprlang {

// Wire format for connected sums:
//   expr  := term { "#" term }
//   term  := [count "*"] block
//   block := "X(" int "," int ")" | "Y(" int ")" | "K3" | "S1xS3" | "CP2bar"
//          | "Sigma(" int ")xSigma(" int ")" | "Block{" key "=" value , ... "}"
// Whitespace between tokens is insignificant. Integers are arbitrary
// precision; counts and catalogue parameters must be nonnegative (counts
// positive), Block chi/tau may be negative.

struct ParseError : std::runtime_error {
  enum class Kind {
    syntax,
    empty_expression,
    unknown_block,
    unknown_key,
    duplicate_key,
    missing_key,
    negative_parameter,
    invalid_count,
    invalid_parameter,   // delegated block-level rejection
    invariant_violation, // delegated block-level rejection
  };

  ParseError(Kind kind, std::size_t offset, const std::string& message);

  Kind kind;
  std::size_t offset;  // byte offset into the input
};

// Span-annotated parse result; lowering to the multiset happens in to_expr.
struct TermNode {
  std::size_t begin = 0, end = 0;  // byte span of the term
  BigInt count;
  blocks::BlockSpec block;
};

struct SourceExpr {
  std::string raw;
  std::vector<TermNode> terms;

  sums::ManifoldExpr to_expr() const;
};

SourceExpr parse_source(std::string_view input);
sums::ManifoldExpr parse(std::string_view input);

// Canonical form: catalogue order, "k*" for multiplicities above 1, one
// space around "#". parse(pretty(e)) == e.
std::string pretty(const sums::ManifoldExpr& e);
std::string pretty_block(const blocks::BlockSpec& b);

}  // namespace fourfold::exprlang
