// Command line front end: parse connected-sum expressions, print invariants,
// run obstruction checks, enumerate family parameters, emit certificates.
// Exit codes: 0 success, 2 input error, 3 certification failure, 4 I/O error.

#include "fourfold/exprlang.hpp"
#include "fourfold/json_io.hpp"
#include "fourfold/version.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace ffd = fourfold;
using ffd::BigInt;
using ffd::Rational;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCertification = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "892/27 ~ 33.037037" for exact values; integers print plain.
std::string show_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  const auto dec = ffd::exactnum::to_decimal(ffd::exactnum::ExactReal::from_rational(q), 6);
  return ffd::rat_string(q) + " \xE2\x89\x88 " + dec.annotated();
}

std::string show_exact(const ffd::exactnum::ExactReal& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : v.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = c < 0 ? Rational(-c) : c;
    if (denominator(a) == 1) os << numerator(a).str();
    else os << ffd::rat_string(a);
    if (d != 0) os << "*pi^" << d;
  }
  if (!v.is_rational())
    os << " \xE2\x89\x88 " << ffd::exactnum::to_decimal(v, 6).annotated();
  else if (denominator(v.rational_value()) != 1)
    os << " \xE2\x89\x88 " << ffd::exactnum::to_decimal(v, 6).annotated();
  return os.str();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_invariants_table(std::ostream& out, const ffd::sums::SumInvariants& iv) {
  out << "chi:               " << iv.chi.str() << "\n";
  out << "tau:               " << iv.tau.str() << "\n";
  out << "b1:                " << iv.b1.str() << "\n";
  out << "b+:                " << iv.b_plus.str() << "\n";
  out << "b-:                " << iv.b_minus.str() << "\n";
  out << "spin:              " << yesno(iv.spin) << "\n";
  out << "simply connected:  " << yesno(iv.simply_connected) << "\n";
  out << "summands:          " << iv.t.str() << "\n";
  out << "2chi+3tau:         " << BigInt(2 * iv.chi + 3 * iv.tau).str() << "\n";
  out << "2chi-3tau:         " << BigInt(2 * iv.chi - 3 * iv.tau).str() << "\n";
}

void print_entropy(std::ostream& out, const ffd::entropy::EntropyBounds& b) {
  out << "entropy status:    " << ffd::entropy::status_name(b.status) << "\n";
  out << "lambda^4 lower:    " << show_exact(b.lower) << "\n";
  out << "lambda^4 upper:    " << (b.upper ? show_exact(*b.upper) : std::string("none")) << "\n";
}

void print_check(std::ostream& out, const ffd::obstructions::CheckOutcome& oc) {
  out << oc.check << ": " << ffd::obstructions::verdict_name(oc.verdict);
  if (oc.equality) out << " (equality)";
  if (oc.margin) out << "  margin: " << show_exact(*oc.margin);
  const auto reasons = oc.reasons();
  if (!reasons.empty()) {
    out << "  reasons:";
    for (const std::string& r : reasons) out << " " << r;
  }
  out << "\n";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw IoError("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << content;
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

std::string basename_of(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

// Manifest lines follow the sha256sum layout: "<hex digest>  <file name>",
// sorted by file name, one entry per certificate.
void update_manifest(const std::string& manifest_path, const std::string& cert_name,
                     const std::string& digest) {
  std::map<std::string, std::string> entries;
  {
    std::ifstream f(manifest_path);
    std::string line;
    while (f && std::getline(f, line)) {
      const std::size_t sep = line.find("  ");
      if (sep == std::string::npos || sep == 0) continue;
      entries[line.substr(sep + 2)] = line.substr(0, sep);
    }
  }
  entries[cert_name] = digest;
  std::ostringstream os;
  for (const auto& [name, hash] : entries) os << hash << "  " << name << "\n";
  write_file(manifest_path, os.str());
}

BigInt parse_cli_int(const std::string& s, const char* what) {
  if (s.empty() || (!isdigit(static_cast<unsigned char>(s[0])) && s[0] != '-'))
    throw CLI::ValidationError(std::string(what) + ": expected an integer, got '" + s + "'");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i])))
      throw CLI::ValidationError(std::string(what) + ": expected an integer, got '" + s + "'");
  return BigInt(s);
}

struct EllRange {
  BigInt from, to;
};

EllRange parse_ell_range(const std::string& s) {
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--ell-range: expected the form a..b, got '" + s + "'");
  return {parse_cli_int(s.substr(0, dots), "--ell-range"),
          parse_cli_int(s.substr(dots + 2), "--ell-range")};
}

ffd::FamilyKind parse_kind(const std::string& s) {
  if (s == "spin") return ffd::FamilyKind::spin;
  if (s == "nonspin") return ffd::FamilyKind::nonspin;
  throw CLI::ValidationError("--kind must be spin or nonspin, got '" + s + "'");
}

std::vector<ffd::obstructions::CheckOutcome> run_checks(const ffd::sums::ManifoldExpr& expr,
                                                        const std::vector<std::string>& names) {
  std::vector<ffd::obstructions::CheckOutcome> out;
  for (const std::string& name : names) {
    if (name == "ht") out.push_back(ffd::obstructions::hitchin_thorpe(expr));
    else if (name == "ght") out.push_back(ffd::obstructions::ght_simplicial(expr));
    else if (name == "ght-entropy") out.push_back(ffd::obstructions::strict_ght_entropy(expr));
    else if (name == "einstein") out.push_back(ffd::obstructions::einstein_obstruction(expr));
    else throw CLI::ValidationError("unknown check '" + name + "'");
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_invariants(const std::string& expr_text, bool json) {
  const ffd::sums::ManifoldExpr expr = ffd::exprlang::parse(expr_text);
  const ffd::sums::SumInvariants iv = ffd::sums::invariants(expr);
  const ffd::entropy::EntropyBounds bounds = ffd::entropy::entropy_bounds(expr);
  const std::string canonical = ffd::exprlang::pretty(expr);
  if (json) {
    std::cout << ffd::jsonio::dump(
        ffd::jsonio::expression_certificate_json(canonical, iv, bounds, {}));
    return kExitOk;
  }
  std::cout << "expression:        " << canonical << "\n";
  print_invariants_table(std::cout, iv);
  print_entropy(std::cout, bounds);
  return kExitOk;
}

int cmd_check(const std::string& expr_text, const std::string& checks_csv, bool json) {
  const ffd::sums::ManifoldExpr expr = ffd::exprlang::parse(expr_text);
  const auto names = split_commas(checks_csv);
  if (names.empty()) throw CLI::ValidationError("--checks: no checks named");
  const auto outcomes = run_checks(expr, names);
  const ffd::sums::SumInvariants iv = ffd::sums::invariants(expr);
  const ffd::entropy::EntropyBounds bounds = ffd::entropy::entropy_bounds(expr);
  const std::string canonical = ffd::exprlang::pretty(expr);
  if (json) {
    std::cout << ffd::jsonio::dump(
        ffd::jsonio::expression_certificate_json(canonical, iv, bounds, outcomes));
    return kExitOk;
  }
  std::cout << "expression:        " << canonical << "\n";
  for (const auto& oc : outcomes) print_check(std::cout, oc);
  return kExitOk;
}

int cmd_enumerate(const std::string& kind_name, const std::string& g, const std::string& h,
                  const std::string& m_max, const std::string& n_max, std::size_t limit,
                  bool json) {
  const ffd::FamilyKind kind = parse_kind(kind_name);
  ffd::families::EnumBounds bounds;
  bounds.g_min = bounds.g_max = parse_cli_int(g, "--g");
  bounds.h_min = bounds.h_max = parse_cli_int(h, "--h");
  bounds.m_max = parse_cli_int(m_max, "--m-max");
  bounds.n_max = parse_cli_int(n_max, "--n-max");
  if (bounds.g_min < 3 || bounds.g_min % 2 == 0)
    throw CLI::ValidationError("--g must be odd and at least 3");
  if (bounds.h_min < 3 || bounds.h_min % 2 == 0)
    throw CLI::ValidationError("--h must be odd and at least 3");

  const auto tuples = ffd::families::enumerate(kind, bounds, limit);
  if (json) {
    std::cout << ffd::jsonio::dump(ffd::jsonio::enumerate_json(kind, tuples));
    return kExitOk;
  }
  std::cout << "kind: " << ffd::family_kind_name(kind) << "  tuples: " << tuples.size() << "\n";
  for (const auto& t : tuples) {
    std::cout << "g=" << t.params.g.str() << " h=" << t.params.h.str()
              << " m=" << t.params.m.str() << " n=" << t.params.n.str()
              << " ell=" << t.params.ell.str();
    for (const auto& im : t.check.margins)
      std::cout << "  " << im.name << "=" << show_rational(im.margin);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_certify(const std::string& kind_name, const std::string& m, const std::string& n,
                const std::string& g, const std::string& h, const std::string& ell1,
                const std::string& ell2, const std::string& ell_range,
                const std::string& out_path, const std::string& manifest_path, bool json) {
  const ffd::FamilyKind kind = parse_kind(kind_name);
  const std::string& ell_text = kind == ffd::FamilyKind::spin ? ell1 : ell2;
  const char* ell_flag = kind == ffd::FamilyKind::spin ? "--ell1" : "--ell2";
  if (ell_text.empty())
    throw CLI::ValidationError(std::string(ell_flag) + " is required for kind " + kind_name);
  if (kind == ffd::FamilyKind::spin && !ell2.empty())
    throw CLI::ValidationError("--ell2 does not apply to the spin family");
  if (kind == ffd::FamilyKind::nonspin && !ell1.empty())
    throw CLI::ValidationError("--ell1 does not apply to the nonspin family");
  if (!manifest_path.empty() && out_path.empty())
    throw CLI::ValidationError("--manifest requires --out");

  const ffd::families::FamilyParams params = ffd::families::make_params(
      kind, parse_cli_int(m, "--m"), parse_cli_int(n, "--n"), parse_cli_int(g, "--g"),
      parse_cli_int(h, "--h"), parse_cli_int(ell_text, ell_flag));
  const EllRange range = parse_ell_range(ell_range);
  const ffd::families::FamilyCertificate cert =
      ffd::families::certify_family(params, range.from, range.to);

  const std::string doc = ffd::jsonio::dump(ffd::jsonio::family_certificate_json(cert));
  if (!out_path.empty()) {
    write_file(out_path, doc);
    if (!manifest_path.empty())
      update_manifest(manifest_path, basename_of(out_path), sha256_hex(doc));
  }
  if (json) {
    std::cout << doc;
  } else {
    std::cout << "family:            " << ffd::family_kind_name(kind) << "\n";
    std::cout << "params:            m=" << params.m.str() << " n=" << params.n.str()
              << " g=" << params.g.str() << " h=" << params.h.str() << " "
              << (kind == ffd::FamilyKind::spin ? "ell1=" : "ell2=") << params.ell.str() << "\n";
    std::cout << "ell range:         " << range.from.str() << ".." << range.to.str() << "\n";
    for (const auto& im : cert.param_check.margins)
      std::cout << "  " << im.name << ": margin " << show_rational(im.margin)
                << (im.holds ? " (holds)" : " (fails)") << "\n";
    BigInt proven = 0;
    for (const auto& rec : cert.per_ell)
      if (rec.all_proven && rec.fingerprint_matches_k3) ++proven;
    std::cout << "certified members: " << proven.str() << "/" << cert.per_ell.size() << "\n";
    std::cout << "fingerprint stable: " << yesno(cert.fingerprint_stability) << "\n";
    std::cout << "certificate:       " << (cert.valid ? "VALID" : "INVALID") << "\n";
    if (!out_path.empty()) std::cout << "wrote:             " << out_path << "\n";
  }
  return cert.valid ? kExitOk : kExitCertification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant, entropy and Einstein-obstruction workbench for connected sums "
               "of smooth 4-manifolds"};
  app.set_version_flag("--version", ffd::kToolVersion);
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  std::string expr_text;
  std::string checks_csv = "ht,ght,ght-entropy,einstein";
  std::string kind_name, g_text, h_text;
  std::string m_text, n_text, ell1_text, ell2_text, ell_range_text;
  std::string m_max_text = "10", n_max_text = "40";
  std::string out_path, manifest_path;
  std::size_t limit = SIZE_MAX;
  bool json_invariants = false, json_check = false, json_enum = false, json_cert = false;

  CLI::App* inv = app.add_subcommand("invariants", "invariant table for an expression");
  inv->set_help_flag("--help", "print this help and exit");
  inv->add_option("expression", expr_text, "connected-sum expression")->required();
  inv->add_flag("--json", json_invariants, "emit a JSON document");

  CLI::App* chk = app.add_subcommand("check", "run obstruction checks on an expression");
  chk->set_help_flag("--help", "print this help and exit");
  chk->add_option("expression", expr_text, "connected-sum expression")->required();
  chk->add_option("--checks", checks_csv, "comma list from: ht, ght, ght-entropy, einstein");
  chk->add_flag("--json", json_check, "emit a JSON document");

  CLI::App* enm = app.add_subcommand("enumerate", "list valid family parameter tuples");
  enm->set_help_flag("--help", "print this help and exit");
  enm->add_option("--kind", kind_name, "spin or nonspin")->required();
  enm->add_option("--g", g_text, "genus g (odd, >= 3)")->required();
  enm->add_option("--h", h_text, "genus h (odd, >= 3)")->required();
  enm->add_option("--m-max", m_max_text, "largest m (default 10)");
  enm->add_option("--n-max", n_max_text, "largest n (default 40)");
  enm->add_option("--limit", limit, "cap on the number of tuples");
  enm->add_flag("--json", json_enum, "emit a JSON document");

  CLI::App* cert = app.add_subcommand("certify", "certify a family over a Y-stage range");
  cert->set_help_flag("--help", "print this help and exit");
  cert->add_option("--kind", kind_name, "spin or nonspin")->required();
  cert->add_option("--m", m_text)->required();
  cert->add_option("--n", n_text)->required();
  cert->add_option("--g", g_text)->required();
  cert->add_option("--h", h_text)->required();
  cert->add_option("--ell1", ell1_text, "S1xS3 copies (spin family)");
  cert->add_option("--ell2", ell2_text, "CP2bar copies (nonspin family)");
  cert->add_option("--ell-range", ell_range_text, "Y stages to certify, a..b")->required();
  cert->add_option("--out", out_path, "write the certificate JSON here");
  cert->add_option("--manifest", manifest_path, "update this digest manifest (needs --out)");
  cert->add_flag("--json", json_cert, "emit the certificate on stdout");

  try {
    app.parse(argc, argv);
    if (inv->parsed()) return cmd_invariants(expr_text, json_invariants);
    if (chk->parsed()) return cmd_check(expr_text, checks_csv, json_check);
    if (enm->parsed())
      return cmd_enumerate(kind_name, g_text, h_text, m_max_text, n_max_text, limit, json_enum);
    if (cert->parsed())
      return cmd_certify(kind_name, m_text, n_text, g_text, h_text, ell1_text, ell2_text,
                         ell_range_text, out_path, manifest_path, json_cert);
    return kExitInput;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ffd::exprlang::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ffd::blocks::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ffd::blocks::InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ffd::families::InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
