#include "fourfold/exprlang.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

using namespace fourfold;
using namespace fourfold::exprlang;
using blocks::BlockSpec;

namespace {

ParseError capture(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  REQUIRE_MESSAGE(false, ("expected a parse error for: " + text).c_str());
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("exprlang") {

TEST_CASE("catalogue terms parse to their blocks") {
  const auto e = parse(" X(2,4) # Y(0) # K3#S1xS3 #CP2bar# Sigma(3)xSigma(5) ");
  CHECK(e.total_summands() == 6);
  CHECK(pretty(e) == "X(2,4) # Y(0) # K3 # Sigma(3)xSigma(5) # S1xS3 # CP2bar");
}

TEST_CASE("counts expand into multiplicities") {
  const auto e = parse("3*S1xS3#K3#2*K3");
  CHECK(e.total_summands() == 6);
  CHECK(pretty(e) == "3*K3 # 3*S1xS3");
  CHECK(parse("1*K3") == parse("K3"));
}

TEST_CASE("pretty output is stable under reparsing") {
  const char* samples[] = {
      "K3",
      "2*K3",
      "X(2,1)#X(2,1)#X(3,4)",
      "Sigma(1)xSigma(1)#Sigma(1)xSigma(1)",
      "X(10,40)#Y(12)#7*S1xS3#3*CP2bar#2*Sigma(3)xSigma(9)",
      "Block{chi=4, tau=0, b1=1, bplus=2}",
      "Block{chi=6, tau=-4, b1=0, bplus=0, sc=true, nonessential=true}",
  };
  for (const char* s : samples) {
    const auto once = parse(s);
    CHECK(parse(pretty(once)) == once);
    CHECK(pretty(parse(pretty(once))) == pretty(once));
  }
}

TEST_CASE("term order and count splitting never change the value") {
  CHECK(parse("K3#X(2,1)#K3") == parse("2*K3#X(2,1)"));
  CHECK(parse("S1xS3#CP2bar#S1xS3") == parse("2*S1xS3#CP2bar"));
  CHECK(parse("Sigma(3)xSigma(5)#K3") == parse("K3#Sigma(3)xSigma(5)"));
}

TEST_CASE("custom blocks fill in the missing betti number") {
  const auto e = parse("Block{chi=4, tau=0, b1=1, bplus=2}");
  const auto& s = e.summands();
  REQUIRE(s.size() == 1);
  const auto& iv = s[0].block.invariants();
  CHECK(iv.b_minus == 2);  // chi - 2 + 2 b1 - bplus
  CHECK_FALSE(iv.spin);
  CHECK_FALSE(iv.simply_connected);
  CHECK_FALSE(iv.symplectic);
  CHECK_FALSE(iv.nonessential);
  CHECK(pretty(e) ==
        "Block{chi=4, tau=0, b1=1, bplus=2, spin=false, sc=false, "
        "symplectic=false, nonessential=false}");
}

TEST_CASE("custom blocks accept flags in any order") {
  const auto a = parse("Block{chi=6, tau=-4, b1=0, bplus=0, sc=true, nonessential=true}");
  const auto b = parse("Block{nonessential=true, bplus=0, sc=true, b1=0, tau=-4, chi=6}");
  CHECK(a == b);
}

TEST_CASE("every rejection carries its kind and byte offset") {
  using K = ParseError::Kind;

  CHECK(capture("").kind == K::empty_expression);
  CHECK(capture("  \t ").kind == K::empty_expression);

  const auto amp = capture("K3 &");
  CHECK(amp.kind == K::syntax);
  CHECK(amp.offset == 3);
  CHECK(std::string(amp.what()) == "offset 3: expected '#'");

  const auto unk = capture("X(2,4)#Quux");
  CHECK(unk.kind == K::unknown_block);
  CHECK(unk.offset == 7);

  const auto trailing = capture("K3#");
  CHECK(trailing.kind == K::syntax);

  const auto neg = capture("X(-2,4)");
  CHECK(neg.kind == K::negative_parameter);

  const auto negs = capture("Sigma(3)xSigma(-5)");
  CHECK(negs.kind == K::negative_parameter);

  const auto cnt = capture("0*K3");
  CHECK(cnt.kind == K::invalid_count);
  CHECK(cnt.offset == 0);

  const auto cnt2 = capture("K3#0*K3");
  CHECK(cnt2.kind == K::invalid_count);
  CHECK(cnt2.offset == 3);

  const auto par = capture("X(1,1)");
  CHECK(par.kind == K::invalid_parameter);
  CHECK(par.offset == 0);

  const auto key = capture("Block{chi=4, tau=0, b1=0, bplus=1, frob=1}");
  CHECK(key.kind == K::unknown_key);
  CHECK(key.offset == 35);

  const auto dup = capture("Block{chi=4, chi=4, tau=0, b1=0, bplus=1}");
  CHECK(dup.kind == K::duplicate_key);
  CHECK(dup.offset == 13);

  const auto missing = capture("Block{chi=4, tau=0, b1=0}");
  CHECK(missing.kind == K::missing_key);

  const auto derived = capture("Block{chi=1, tau=1, b1=0, bplus=0}");
  CHECK(derived.kind == K::invalid_parameter);

  const auto viol = capture("Block{chi=6, tau=2, b1=0, bplus=2}");
  CHECK(viol.kind == K::invariant_violation);

  const auto flag = capture("Block{chi=4, tau=0, b1=1, bplus=2, spin=maybe}");
  CHECK(flag.kind == K::syntax);
}

TEST_CASE("source spans point back into the raw input") {
  const auto src = parse_source("K3 # 2*X(2,4)");
  REQUIRE(src.terms.size() == 2);
  CHECK(src.raw.substr(src.terms[0].begin, src.terms[0].end - src.terms[0].begin) == "K3");
  CHECK(src.raw.substr(src.terms[1].begin, src.terms[1].end - src.terms[1].begin) == "2*X(2,4)");
  CHECK(src.terms[1].count == 2);
}

TEST_CASE("random well-formed expressions round-trip") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<long> small(1, 9);
  std::uniform_int_distribution<long> count(1, 4);
  std::uniform_int_distribution<int> nterms(1, 6);
  for (int round = 0; round < 500; ++round) {
    std::string text;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
      if (i) text += "#";
      const long c = count(rng);
      if (c > 1) text += std::to_string(c) + "*";
      switch (pick(rng)) {
        case 0: text += "K3"; break;
        case 1: text += "S1xS3"; break;
        case 2: text += "CP2bar"; break;
        case 3: text += "X(" + std::to_string(small(rng) + 1) + "," +
                        std::to_string(small(rng)) + ")"; break;
        case 4: text += "Y(" + std::to_string(small(rng) - 1) + ")"; break;
        case 5: text += "Sigma(" + std::to_string(small(rng)) + ")xSigma(" +
                        std::to_string(small(rng)) + ")"; break;
        default: text += "Block{chi=4, tau=0, b1=1, bplus=2}"; break;
      }
    }
    const auto e = parse(text);
    CHECK(parse(pretty(e)) == e);
  }
}

TEST_CASE("hostile inputs throw parse errors and nothing else") {
  std::mt19937_64 rng(666);
  const std::string alphabet = "XYKS13#*(),{}=-abcx  \t";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<std::size_t> len(0, 64);
  int parsed = 0;
  for (int round = 0; round < 3000; ++round) {
    std::string text;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) text += alphabet[pick(rng)];
    try {
      (void)parse(text);
      ++parsed;
    } catch (const ParseError&) {
      // expected for almost every draw
    }
  }
  CHECK(parsed >= 0);  // reaching here means no crash and no foreign exception
}

TEST_CASE("a long expression near the size cap parses") {
  std::string text = "K3";
  while (text.size() < 64 * 1024 - 8) text += "#S1xS3";
  const auto e = parse(text);
  CHECK(e.total_summands() > 10000);
}

}  // TEST_SUITE
