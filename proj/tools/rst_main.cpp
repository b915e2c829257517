// rst: build finite real spectral triples, compose them, and verify the
// gamma-algebra, KO-table, spectrum and orientation claims from matrices.
//
// Exit codes: 0 success, 1 a well-formed mathematical check failed,
// 2 usage or input error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rst/clifford.hpp"
#include "rst/examples.hpp"
#include "rst/hochschild.hpp"
#include "rst/product.hpp"
#include "rst/serialize.hpp"

using nlohmann::json;
using namespace rst;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Output {
  bool as_json = false;
  json doc;
  std::ostringstream text;

  void put(const std::string& key, const json& value) { doc[key] = value; }
  template <typename T>
  Output& operator<<(const T& v) {
    text << v;
    return *this;
  }
  void flush(int exit_code) {
    if (as_json) {
      doc["exit_code"] = exit_code;
      std::cout << doc.dump(1) << "\n";
    } else {
      std::cout << text.str();
    }
  }
};

std::string fmt_complex(const Complex& z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() >= 0)
    os << "+" << z.imag() << "i";
  else
    os << "-" << -z.imag() << "i";
  return os.str();
}

std::string fmt_matrix(const ComplexMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << fmt_complex(m(i, j));
    }
    os << "]\n";
  }
  return os.str();
}

std::string spectrum_table(const SpectrumReport& rep) {
  std::ostringstream os;
  os << "  eigenvalue      multiplicity\n";
  for (const auto& line : rep.lines)
    os << "  " << line.value << "  x" << line.multiplicity << "\n";
  return os.str();
}

json spectrum_json(const SpectrumReport& rep) {
  json out = json::array();
  for (const auto& line : rep.lines)
    out.push_back({{"value", line.value}, {"mult", line.multiplicity}});
  return out;
}

std::optional<int> parse_sign_flag(const std::string& s) {
  if (s == "+" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  return std::nullopt;
}

ProductVariant parse_variant(const std::string& s) {
  if (s == "D") return ProductVariant::D;
  if (s == "Dt") return ProductVariant::Dt;
  if (s == "oo+") return ProductVariant::OOPlus;
  if (s == "oo-") return ProductVariant::OOMinus;
  throw CLI::ValidationError("--variant must be one of D, Dt, oo+, oo-");
}

std::string signature_str(const KOSignature& sig) {
  std::string s = "(";
  s += sig.eps == 1 ? "+" : "-";
  s += ", ";
  s += sig.eps_prime == 1 ? "+" : "-";
  if (sig.eps_dblprime) {
    s += ", ";
    s += *sig.eps_dblprime == 1 ? "+" : "-";
  }
  s += ")";
  if (sig.degenerate_prime) s += " [eps' degenerate]";
  if (sig.degenerate_dblprime) s += " [eps'' degenerate]";
  return s;
}

int cmd_gamma(int n, const std::string& sign_str, Output& out) {
  std::optional<int> sign;
  if (!sign_str.empty()) {
    sign = parse_sign_flag(sign_str);
    if (!sign) {
      std::cerr << "gamma: bad --sign value\n";
      return kUsage;
    }
  }
  GammaRep rep;
  Chirality chi;
  try {
    rep = build_gamma_rep(n, sign);
    chi = chirality_of(n, sign);
  } catch (const BadSignError& e) {
    std::cerr << "gamma: " << e.what() << "\n";
    return kUsage;
  }
  const double viol = clifford_violation(rep.matrices);
  out.put("n", n);
  out.put("clifford_violation", viol);
  out.put("alpha", json::array({chi.alpha.real(), chi.alpha.imag()}));
  if (out.as_json) {
    json gs = json::array();
    for (const auto& g : rep.matrices) gs.push_back(matrix_to_json(g));
    out.put("gammas", gs);
    out.put("chi", matrix_to_json(chi.matrix));
  }
  for (std::size_t mu = 0; mu < rep.matrices.size(); ++mu) {
    out << "gamma^" << (mu + 1) << " =\n" << fmt_matrix(rep.matrices[mu]);
  }
  out << "chi =\n" << fmt_matrix(chi.matrix);
  out << "alpha_n = " << fmt_complex(chi.alpha) << "\n";
  out << "max Clifford violation (anticommutation, anti-hermiticity, "
         "square = -1): "
      << viol << "\n";
  return viol <= kTolAlg ? kOk : kCheckFailed;
}

int cmd_build(CLI::App* sub, const std::string& kind, int n, int K,
              const std::string& variant_str, const std::string& odd_str,
              const std::string& mode_str, int axes, int degree, double mass,
              const std::string& out_path, Output& out) {
  RealSpectralTriple t;
  try {
    if (kind == "torus") {
      TorusSpec spec;
      spec.n = n;
      spec.K = K;
      spec.mode = mode_str == "cyclic" ? TruncationMode::Cyclic
                                       : TruncationMode::Hard;
      if (sub->count("--variant")) spec.j_variant = parse_sign_flag(variant_str);
      if (sub->count("--odd-sign")) spec.odd_sign = parse_sign_flag(odd_str);
      if (axes > 0) spec.active_axes = axes;
      spec.generator_degree = degree;
      t = torus_triple(spec);
    } else if (kind == "two-point") {
      const auto v = parse_sign_flag(variant_str.empty() ? "+" : variant_str);
      if (!v) {
        std::cerr << "build: bad --variant\n";
        return kUsage;
      }
      t = two_point_triple(mass, *v);
    } else {
      std::cerr << "build: kind must be torus or two-point\n";
      return kUsage;
    }
  } catch (const Error& e) {
    std::cerr << "build: " << e.what() << "\n";
    return kUsage;
  }
  save_triple(t, out_path);
  out.put("file", out_path);
  out.put("hilbert_dim", t.hilbert_dim);
  out.put("claimed_label", t.claimed_label ? t.claimed_label->str() : "");
  out << "wrote " << out_path << " (hilbert_dim " << t.hilbert_dim
      << ", claimed KO label "
      << (t.claimed_label ? t.claimed_label->str() : "none") << ")\n";
  return kOk;
}

int cmd_product(const std::string& f1, const std::string& f2,
                const std::string& variant_str, bool force,
                const std::string& out_path, Output& out) {
  const RealSpectralTriple t1 = load_triple(f1);
  const RealSpectralTriple t2 = load_triple(f2);
  ProductRecipe recipe;
  recipe.variant = parse_variant(variant_str);
  recipe.force = force;

  std::optional<KOLabel> predicted;
  if (t1.claimed_label && t2.claimed_label)
    predicted = predicted_ko(*t1.claimed_label, *t2.claimed_label,
                             recipe.variant);

  RealSpectralTriple prod;
  try {
    prod = product_triple(t1, t2, recipe);
  } catch (const NoTableEntryError& e) {
    out.put("error", "no-table-entry");
    out << "no consistent real structure: " << e.what() << "\n";
    out.flush(kCheckFailed);
    return -1;  // already flushed
  }

  KOSignature sig = signature_of(prod.J, prod.D,
                                 prod.chi ? &*prod.chi : nullptr);
  const KOLabel recomputed = ko_label(sig);
  out.put("predicted_label", predicted ? predicted->str() : "");
  out.put("recomputed_label", recomputed.str());
  out.put("signature", signature_str(sig));
  out << "predicted KO label:  "
      << (predicted ? predicted->str() : std::string("(recomputed)")) << "\n";
  out << "recomputed signature: " << signature_str(sig) << " -> "
      << recomputed.str() << "\n";
  if (!out_path.empty()) {
    save_triple(prod, out_path);
    out.put("file", out_path);
    out << "wrote " << out_path << "\n";
  }
  if (predicted && !(*predicted == recomputed)) {
    out << "MISMATCH between predicted and recomputed labels\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_check(const std::string& file, const std::string& checks_csv,
              const std::string& factor1, const std::string& factor2,
              Output& out) {
  const RealSpectralTriple t = load_triple(file);
  std::vector<std::string> checks;
  {
    std::stringstream ss(checks_csv);
    std::string item;
    while (std::getline(ss, item, ',')) checks.push_back(item);
  }
  bool all_passed = true;
  json results = json::array();
  auto report = [&](const std::string& name, const CheckReport& rep,
                    const std::string& extra = "") {
    all_passed = all_passed && rep.passed;
    results.push_back({{"check", name},
                       {"passed", rep.passed},
                       {"max_violation", rep.max_violation}});
    out << (rep.passed ? "PASS" : "FAIL") << "  " << name
        << "  max violation " << rep.max_violation << extra << "\n";
  };

  for (const std::string& c : checks) {
    if (c == "reality") {
      auto [rep, sig] = check_reality(t);
      report("reality", rep,
             sig ? "  signature " + signature_str(*sig) : "");
    } else if (c == "zero") {
      report("zero-order", check_zero_order(t));
    } else if (c == "first") {
      CheckReport rep = check_first_order(t);
      std::string extra;
      if (!rep.passed && t.probe_subspace &&
          max_abs(ComplexMatrix(*t.probe_subspace -
                                identity(t.hilbert_dim))) > kTolAlg)
        extra = "  (note: exact only away from the truncation boundary)";
      report("first-order", rep, extra);
    } else if (c == "dimension") {
      if (factor1.empty() || factor2.empty()) {
        std::cerr << "check: dimension needs --factors f1,f2\n";
        return kUsage;
      }
      const RealSpectralTriple t1 = load_triple(factor1);
      const RealSpectralTriple t2 = load_triple(factor2);
      report("dimension", check_dimension_spectrum_additivity(t1, t2, t));
    } else if (c == "orientation") {
      HochschildChain cyc;
      try {
        cyc = t.metric_dim && *t.metric_dim == 1 ? circle_cycle(t)
                                                 : torus2_cycle(t);
      } catch (const Error& e) {
        std::cerr << "check: orientation: " << e.what() << "\n";
        return kUsage;
      }
      const OrientationReport rep = check_orientation(t, cyc);
      const bool ok = rep.is_cycle && rep.proportional && !rep.degenerate;
      all_passed = all_passed && ok;
      results.push_back({{"check", "orientation"},
                         {"passed", ok},
                         {"scalar", fmt_complex(rep.scalar)},
                         {"residual", rep.residual}});
      out << (ok ? "PASS" : "FAIL") << "  orientation  pi_D(c) = ("
          << fmt_complex(rep.scalar) << ") * chi, residual " << rep.residual
          << (rep.is_cycle ? "" : "  NOT A CYCLE") << "\n";
    } else {
      std::cerr << "check: unknown check '" << c << "'\n";
      return kUsage;
    }
  }
  out.put("results", results);
  return all_passed ? kOk : kCheckFailed;
}

int cmd_spectrum(const std::string& f1, const std::string& f2, bool predict,
                 const std::string& variant_str, const std::string& verify,
                 Output& out) {
  const RealSpectralTriple t1 = load_triple(f1);
  if (f2.empty()) {
    const SpectrumReport rep = eigh(t1.D).spectrum;
    out.put("spectrum", spectrum_json(rep));
    out << "spectrum of D:\n" << spectrum_table(rep);
    return kOk;
  }
  const RealSpectralTriple t2 = load_triple(f2);
  if (!predict) {
    std::cerr << "spectrum: two files need --predict\n";
    return kUsage;
  }
  const ProductVariant v = parse_variant(variant_str);
  const SpectrumReport predicted = predicted_product_spectrum(
      t1.D, t1.chi ? &*t1.chi : nullptr, t2.D, t2.chi ? &*t2.chi : nullptr,
      v);
  out.put("predicted", spectrum_json(predicted));
  out << "predicted product spectrum (" << variant_name(v) << "):\n"
      << spectrum_table(predicted);
  if (!verify.empty()) {
    const RealSpectralTriple prod = load_triple(verify);
    const SpectrumReport got = eigh(prod.D).spectrum;
    const bool match = same_spectrum(predicted, got);
    out.put("verified", match);
    out << (match ? "PASS" : "FAIL")
        << "  built product spectrum matches prediction\n";
    if (!match) return kCheckFailed;
  }
  return kOk;
}

int cmd_tables(int which, bool verify, Output& out);

}  // namespace

// Tables live in their own translation block for readability.
namespace {

const char* kEvenCols[] = {"0+", "2+", "4+", "6+", "0-", "2-", "4-", "6-"};
const char* kOddCols[] = {"1-", "3+", "5-", "7+"};

std::string pad(const std::string& s, std::size_t w) {
  std::string out = s;
  while (out.size() < w) out += ' ';
  return out;
}

void print_product_table(Output& out, ProductVariant v, bool rows_even,
                         bool cols_even) {
  const char** rows = rows_even ? kEvenCols : kOddCols;
  const char** cols = cols_even ? kEvenCols : kOddCols;
  const int nr = rows_even ? 8 : 4;
  const int nc = cols_even ? 8 : 4;
  out << pad("1\\2", 5);
  for (int c = 0; c < nc; ++c) out << pad(cols[c], 4);
  out << "\n";
  for (int r = 0; r < nr; ++r) {
    out << pad(rows[r], 5);
    for (int c = 0; c < nc; ++c) {
      const auto res =
          predicted_ko(parse_ko_label(rows[r]), parse_ko_label(cols[c]), v);
      out << pad(res ? res->str() : ".", 4);
    }
    out << "\n";
  }
}

// builds the cheapest example triple carrying a KO label
RealSpectralTriple label_example(const KOLabel& l) {
  if (l.is_even() && l.n_mod8 == 0)
    return two_point_triple(1.0, l.variant);
  TorusSpec spec;
  spec.n = l.n_mod8 == 0 ? 8 : l.n_mod8;
  spec.K = 1;
  spec.active_axes = 1;
  if (spec.n % 2 == 1)
    spec.odd_sign = 1;
  else
    spec.j_variant = l.variant;
  return torus_triple(spec);
}

int verify_table1(Output& out) {
  int confirmed = 0;
  for (const auto& [label, stored] : ko_table()) {
    const RealSpectralTriple t = label_example(label);
    const KOSignature got =
        signature_of(t.J, t.D, t.chi ? &*t.chi : nullptr);
    const bool ok = got == stored;
    confirmed += ok ? 1 : 0;
    out << (ok ? "PASS" : "FAIL") << "  column " << label.str() << "  "
        << signature_str(got)
        << (connes_selected(label) ? "  [selected]" : "") << "\n";
  }
  bool negation = true;
  for (int n : {0, 2, 4, 6}) negation = negation && signature_negation_check(n);
  out << (negation ? "PASS" : "FAIL")
      << "  eps_-(n) = -eps_+(n+2) for n in {0,2,4,6}\n";
  out << confirmed << "/12 columns confirmed\n";
  out.put("confirmed", confirmed);
  return confirmed == 12 && negation ? kOk : kCheckFailed;
}

int verify_product_table(Output& out, ProductVariant v, bool rows_even,
                         bool cols_even) {
  const char** rows = rows_even ? kEvenCols : kOddCols;
  const char** cols = cols_even ? kEvenCols : kOddCols;
  const int nr = rows_even ? 8 : 4;
  const int nc = cols_even ? 8 : 4;
  int confirmed = 0, blanks_confirmed = 0, total = 0, blanks = 0;
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < nc; ++c) {
      const KOLabel l1 = parse_ko_label(rows[r]);
      const KOLabel l2 = parse_ko_label(cols[c]);
      const auto want = predicted_ko(l1, l2, v);
      const RealSpectralTriple t1 = label_example(l1);
      const RealSpectralTriple t2 = label_example(l2);
      ProductRecipe recipe;
      recipe.variant = v;
      recipe.force = true;
      const RealSpectralTriple prod = product_triple(t1, t2, recipe);
      if (want) {
        ++total;
        try {
          const KOLabel got = ko_label(
              signature_of(prod.J, prod.D, prod.chi ? &*prod.chi : nullptr));
          if (got == *want) {
            ++confirmed;
          } else {
            out << "FAIL  (" << l1.str() << ", " << l2.str() << ") got "
                << got.str() << " want " << want->str() << "\n";
          }
        } catch (const NotASignatureError&) {
          out << "FAIL  (" << l1.str() << ", " << l2.str()
              << ") unexpectedly inconsistent\n";
        }
      } else {
        ++blanks;
        try {
          signature_of(prod.J, prod.D, prod.chi ? &*prod.chi : nullptr);
          out << "FAIL  blank (" << l1.str() << ", " << l2.str()
              << ") unexpectedly consistent\n";
        } catch (const NotASignatureError&) {
          ++blanks_confirmed;
        }
      }
    }
  }
  out << confirmed << "/" << total << " filled cells recomputed, "
      << blanks_confirmed << "/" << blanks << " blanks confirmed\n";
  out.put("confirmed", confirmed);
  out.put("blanks_confirmed", blanks_confirmed);
  return confirmed == total && blanks_confirmed == blanks ? kOk : kCheckFailed;
}

int verify_table6(Output& out) {
  int confirmed = 0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int n1 = 2 * r + 1, n2 = 2 * c + 1;  // metric dims 1,3,5,7
      const KOSignature s1 = table1_signature(parse_ko_label(kOddCols[r]));
      const KOSignature s2 = table1_signature(parse_ko_label(kOddCols[c]));
      auto [mp, mm] = solve_m_matrices(s1, s2, {1, 2, 3});
      const bool ok = max_abs(ComplexMatrix(m_matrix(n1, n2, 1) - mp)) <=
                          kTolAlg &&
                      max_abs(ComplexMatrix(m_matrix(n1, n2, -1) - mm)) <=
                          kTolAlg;
      confirmed += ok ? 1 : 0;
      if (!ok)
        out << "FAIL  (" << kOddCols[r] << ", " << kOddCols[c]
            << ") formula vs table mismatch\n";
    }
  }
  out << confirmed << "/16 cells, formula vs table agreement\n";
  out.put("confirmed", confirmed);
  return confirmed == 16 ? kOk : kCheckFailed;
}

int cmd_tables(int which, bool verify, Output& out) {
  switch (which) {
    case 1: {
      out << "KO signatures (eps, eps', eps''), twelve columns:\n";
      for (const auto& [label, sig] : ko_table())
        out << "  " << label.str() << "  " << signature_str(sig)
            << (connes_selected(label) ? "  [selected]" : "") << "\n";
      if (verify) return verify_table1(out);
      return kOk;
    }
    case 2:
      out << "even-even, Dirac D:\n";
      print_product_table(out, ProductVariant::D, true, true);
      if (verify) return verify_product_table(out, ProductVariant::D, true, true);
      return kOk;
    case 3:
      out << "even-even, Dirac Dt:\n";
      print_product_table(out, ProductVariant::Dt, true, true);
      if (verify)
        return verify_product_table(out, ProductVariant::Dt, true, true);
      return kOk;
    case 4:
      out << "even-odd, Dirac D:\n";
      print_product_table(out, ProductVariant::D, true, false);
      if (verify)
        return verify_product_table(out, ProductVariant::D, true, false);
      return kOk;
    case 5:
      out << "odd-even, Dirac Dt:\n";
      print_product_table(out, ProductVariant::Dt, false, true);
      if (verify)
        return verify_product_table(out, ProductVariant::Dt, false, true);
      return kOk;
    case 6: {
      out << "odd-odd M+, M- pairs:\n" << pad("1\\2", 5);
      for (int c = 0; c < 4; ++c) out << pad(kOddCols[c], 8);
      out << "\n";
      for (int r = 0; r < 4; ++r) {
        out << pad(kOddCols[r], 5);
        for (int c = 0; c < 4; ++c) {
          const int n1 = 2 * r + 1, n2 = 2 * c + 1;
          auto name = [](const ComplexMatrix& m) -> std::string {
            for (int i = 0; i < 4; ++i)
              if (max_abs(ComplexMatrix(m - pauli(i))) <= kTolAlg)
                return "s" + std::to_string(i);
            return "??";
          };
          out << pad(name(m_matrix(n1, n2, 1)) + "," +
                         name(m_matrix(n1, n2, -1)),
                     8);
        }
        out << "\n";
      }
      if (verify) return verify_table6(out);
      return kOk;
    }
    default:
      std::cerr << "tables: --which must be 1..6\n";
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite real spectral triples: gamma algebras, KO tables, "
               "products, spectra, orientation"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json appear after the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // gamma
  auto* gamma = app.add_subcommand("gamma", "print a gamma representation");
  int g_n = 2;
  std::string g_sign;
  gamma->add_option("n", g_n, "Euclidean dimension")->required();
  gamma->add_option("--sign", g_sign, "irrep label, + or - (odd n)");

  // build
  auto* build = app.add_subcommand("build", "build an example triple");
  std::string b_kind, b_variant, b_odd, b_mode = "hard", b_out = "triple.json";
  int b_n = 2, b_K = 1, b_axes = -1, b_degree = 1;
  double b_mass = 1.0;
  build->add_option("kind", b_kind, "torus | two-point")->required();
  build->add_option("-n", b_n, "torus dimension");
  build->add_option("-K", b_K, "momentum cutoff");
  build->add_option("--variant", b_variant, "J variant, + or -");
  build->add_option("--odd-sign", b_odd, "odd gamma irrep label");
  build->add_option("--mode", b_mode, "hard | cyclic");
  build->add_option("--axes", b_axes, "active momentum axes (default all)");
  build->add_option("--degree", b_degree, "generator Fourier degree");
  build->add_option("-m,--mass", b_mass, "two-point mass");
  build->add_option("-o,--out", b_out, "output file");

  // product
  auto* product = app.add_subcommand("product", "tensor product of triples");
  std::string p_f1, p_f2, p_variant = "D", p_out;
  bool p_force = false;
  product->add_option("file1", p_f1)->required();
  product->add_option("file2", p_f2)->required();
  product->add_option("--variant", p_variant, "D | Dt | oo+ | oo-");
  product->add_flag("--force", p_force, "build blank-cell combinations");
  product->add_option("-o,--out", p_out, "output file");

  // check
  auto* check = app.add_subcommand("check", "run axiom checks on a triple");
  std::string c_file, c_checks = "reality,zero,first", c_f1, c_f2;
  check->add_option("file", c_file)->required();
  check->add_option("--checks", c_checks,
                    "comma list: reality,zero,first,dimension,orientation");
  check->add_option("--factor1", c_f1, "factor file (dimension check)");
  check->add_option("--factor2", c_f2, "factor file (dimension check)");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "spectra and predictions");
  std::string s_f1, s_f2, s_variant = "D", s_verify;
  bool s_predict = false;
  spectrum->add_option("file", s_f1)->required();
  spectrum->add_option("file2", s_f2);
  spectrum->add_flag("--predict", s_predict, "predict the product spectrum");
  spectrum->add_option("--variant", s_variant, "D | Dt | oo+ | oo-");
  spectrum->add_option("--verify", s_verify, "built product file to compare");

  // tables
  auto* tables = app.add_subcommand("tables", "print/verify the stored tables");
  int t_which = 1;
  bool t_verify = false;
  tables->add_option("--which", t_which, "1..6")->required();
  tables->add_flag("--verify", t_verify, "recompute every cell from matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  Output out;
  out.as_json = as_json;
  int rc = kUsage;
  try {
    if (*gamma)
      rc = cmd_gamma(g_n, g_sign, out);
    else if (*build)
      rc = cmd_build(build, b_kind, b_n, b_K, b_variant, b_odd, b_mode,
                     b_axes, b_degree, b_mass, b_out, out);
    else if (*product)
      rc = cmd_product(p_f1, p_f2, p_variant, p_force, p_out, out);
    else if (*check)
      rc = cmd_check(c_file, c_checks, c_f1, c_f2, out);
    else if (*spectrum)
      rc = cmd_spectrum(s_f1, s_f2, s_predict, s_variant, s_verify, out);
    else if (*tables)
      rc = cmd_tables(t_which, t_verify, out);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (rc < 0) return kCheckFailed;  // already flushed
  out.flush(rc);
  return rc;
}
