#include "fourfold/exprlang.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace fourfold::exprlang {

using blocks::BlockSpec;

ParseError::ParseError(Kind kind_, std::size_t offset_, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset_) + ": " + message),
      kind(kind_),
      offset(offset_) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  SourceExpr run() {
    skip_ws();
    if (eof()) throw ParseError(ParseError::Kind::empty_expression, pos_, "empty expression");
    SourceExpr out;
    out.raw = std::string(in_);
    out.terms.push_back(term());
    skip_ws();
    while (!eof()) {
      expect('#');
      out.terms.push_back(term());
      skip_ws();
    }
    return out;
  }

 private:
  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c)
      throw ParseError(ParseError::Kind::syntax, pos_,
                       std::string("expected '") + c + "'");
    ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (eof() || peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())))) ++pos_;
    if (pos_ == start)
      throw ParseError(ParseError::Kind::syntax, pos_, "expected a name");
    return std::string(in_.substr(start, pos_ - start));
  }

  // Digits only; the sign, where legal, is handled by the caller.
  BigInt digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start)
      throw ParseError(ParseError::Kind::syntax, pos_, "expected an integer");
    return BigInt(std::string(in_.substr(start, pos_ - start)));
  }

  BigInt catalogue_param(const char* block_name) {
    skip_ws();
    if (!eof() && peek() == '-')
      throw ParseError(ParseError::Kind::negative_parameter, pos_,
                       std::string("negative parameter not allowed in ") + block_name);
    return digits();
  }

  BigInt signed_int() {
    skip_ws();
    if (try_consume('-')) return -digits();
    return digits();
  }

  TermNode term() {
    skip_ws();
    const std::size_t begin = pos_;
    BigInt count = 1;

    // Lookahead: digits followed by '*' form a multiplicity.
    if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t count_at = pos_;
      count = digits();
      expect('*');
      if (count < 1)
        throw ParseError(ParseError::Kind::invalid_count, count_at,
                         "multiplicity must be at least 1");
    }

    skip_ws();
    const std::size_t name_at = pos_;
    BlockSpec b = block(name_at);
    return TermNode{begin, pos_, std::move(count), std::move(b)};
  }

  BlockSpec block(std::size_t name_at) {
    const std::string name = ident();
    try {
      if (name == "X") {
        expect('(');
        const BigInt m = catalogue_param("X(m,n)");
        expect(',');
        const BigInt n = catalogue_param("X(m,n)");
        expect(')');
        return BlockSpec::gompf(m, n);
      }
      if (name == "Y") {
        expect('(');
        const BigInt ell = catalogue_param("Y(ell)");
        expect(')');
        return BlockSpec::homotopy_k3(ell);
      }
      if (name == "K3") return BlockSpec::k3();
      if (name == "S1xS3") return BlockSpec::s1xs3();
      if (name == "CP2bar") return BlockSpec::cp2bar();
      if (name == "Sigma") {
        expect('(');
        const BigInt g = catalogue_param("Sigma(g)xSigma(h)");
        expect(')');
        const std::size_t infix_at = pos_;
        if (ident() != "xSigma")
          throw ParseError(ParseError::Kind::syntax, infix_at, "expected 'xSigma'");
        expect('(');
        const BigInt h = catalogue_param("Sigma(g)xSigma(h)");
        expect(')');
        return BlockSpec::surface_product(g, h);
      }
      if (name == "Block") return custom_block(name_at);
    } catch (const blocks::InvalidParameter& e) {
      throw ParseError(ParseError::Kind::invalid_parameter, name_at, e.what());
    } catch (const blocks::InvariantViolation& e) {
      throw ParseError(ParseError::Kind::invariant_violation, name_at, e.what());
    }
    throw ParseError(ParseError::Kind::unknown_block, name_at, "unknown block '" + name + "'");
  }

  BlockSpec custom_block(std::size_t name_at) {
    expect('{');
    std::map<std::string, BigInt> ints;
    std::map<std::string, bool> flags;
    for (;;) {
      skip_ws();
      const std::size_t key_at = pos_;
      const std::string key = ident();
      expect('=');
      if (key == "chi" || key == "tau" || key == "b1" || key == "bplus") {
        if (ints.count(key))
          throw ParseError(ParseError::Kind::duplicate_key, key_at, "duplicate key '" + key + "'");
        // chi and tau may be negative; b1/bplus signs are caught by validation.
        ints[key] = signed_int();
      } else if (key == "spin" || key == "sc" || key == "symplectic" || key == "nonessential") {
        if (flags.count(key))
          throw ParseError(ParseError::Kind::duplicate_key, key_at, "duplicate key '" + key + "'");
        const std::size_t value_at = pos_;
        const std::string v = ident();
        if (v != "true" && v != "false")
          throw ParseError(ParseError::Kind::syntax, value_at, "expected 'true' or 'false'");
        flags[key] = v == "true";
      } else {
        throw ParseError(ParseError::Kind::unknown_key, key_at, "unknown key '" + key + "'");
      }
      if (try_consume(',')) continue;
      expect('}');
      break;
    }
    for (const char* req : {"chi", "tau", "b1", "bplus"})
      if (!ints.count(req))
        throw ParseError(ParseError::Kind::missing_key, name_at,
                         std::string("missing key '") + req + "'");

    blocks::InvariantVector iv;
    iv.chi = ints["chi"];
    iv.tau = ints["tau"];
    iv.b1 = ints["b1"];
    iv.b_plus = ints["bplus"];
    iv.b_minus = iv.chi - 2 + 2 * iv.b1 - iv.b_plus;  // Betti identity
    iv.spin = flags.count("spin") && flags["spin"];
    iv.simply_connected = flags.count("sc") && flags["sc"];
    iv.symplectic = flags.count("symplectic") && flags["symplectic"];
    iv.nonessential = flags.count("nonessential") && flags["nonessential"];
    if (iv.b_minus < 0)
      throw ParseError(ParseError::Kind::invalid_parameter, name_at,
                       "derived bminus is negative");
    return BlockSpec::custom("", iv);
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

sums::ManifoldExpr SourceExpr::to_expr() const {
  std::vector<sums::Summand> ss;
  ss.reserve(terms.size());
  for (const TermNode& t : terms) ss.push_back({t.block, t.count});
  return sums::ManifoldExpr(std::move(ss));
}

SourceExpr parse_source(std::string_view input) { return Parser(input).run(); }

sums::ManifoldExpr parse(std::string_view input) { return parse_source(input).to_expr(); }

std::string pretty_block(const BlockSpec& b) {
  std::ostringstream os;
  switch (b.kind()) {
    case blocks::BlockKind::gompf:
      os << "X(" << b.param0().str() << "," << b.param1().str() << ")";
      break;
    case blocks::BlockKind::homotopy_k3:
      os << "Y(" << b.param0().str() << ")";
      break;
    case blocks::BlockKind::k3:
      os << "K3";
      break;
    case blocks::BlockKind::surface_product:
      os << "Sigma(" << b.param0().str() << ")xSigma(" << b.param1().str() << ")";
      break;
    case blocks::BlockKind::s1xs3:
      os << "S1xS3";
      break;
    case blocks::BlockKind::cp2bar:
      os << "CP2bar";
      break;
    case blocks::BlockKind::custom: {
      const blocks::InvariantVector& iv = b.invariants();
      os << "Block{chi=" << iv.chi.str() << ", tau=" << iv.tau.str()
         << ", b1=" << iv.b1.str() << ", bplus=" << iv.b_plus.str()
         << ", spin=" << (iv.spin ? "true" : "false")
         << ", sc=" << (iv.simply_connected ? "true" : "false")
         << ", symplectic=" << (iv.symplectic ? "true" : "false")
         << ", nonessential=" << (iv.nonessential ? "true" : "false") << "}";
      break;
    }
  }
  return os.str();
}

std::string pretty(const sums::ManifoldExpr& e) {
  std::ostringstream os;
  bool first = true;
  for (const sums::Summand& s : e.summands()) {
    if (!first) os << " # ";
    first = false;
    if (s.multiplicity > 1) os << s.multiplicity.str() << "*";
    os << pretty_block(s.block);
  }
  return os.str();
}

}  // namespace fourfold::exprlang
