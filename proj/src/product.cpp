#include "rst/product.hpp"

#include <algorithm>
#include <cmath>

namespace rst {

namespace {

const Complex kI(0.0, 1.0);

// index into the stored tables: even rows 0+,2+,4+,6+,0-,2-,4-,6-,
// odd rows 1-,3+,5-,7+
int even_index(const KOLabel& l) {
  return l.n_mod8 / 2 + (l.variant == 1 ? 0 : 4);
}
int odd_index(const KOLabel& l) { return (l.n_mod8 - 1) / 2; }

std::optional<KOLabel> cell(const char* s) {
  if (s[0] == '\0') return std::nullopt;
  return parse_ko_label(s);
}

// Table "D" for two even factors
const char* kTableEvenEvenD[8][8] = {
    {"0+", "2+", "4+", "6+", "", "", "", ""},
    {"", "", "", "", "2+", "4+", "6+", "0+"},
    {"4+", "6+", "0+", "2+", "", "", "", ""},
    {"", "", "", "", "6+", "0+", "2+", "4+"},
    {"", "", "", "", "0-", "2-", "4-", "6-"},
    {"2-", "4-", "6-", "0-", "", "", "", ""},
    {"", "", "", "", "4-", "6-", "0-", "2-"},
    {"6-", "0-", "2-", "4-", "", "", "", ""},
};

// Table "Dt" for two even factors
const char* kTableEvenEvenDt[8][8] = {
    {"0+", "", "4+", "", "", "2-", "", "6-"},
    {"2+", "", "6+", "", "", "4-", "", "0-"},
    {"4+", "", "0+", "", "", "6-", "", "2-"},
    {"6+", "", "2+", "", "", "0-", "", "4-"},
    {"", "2+", "", "6+", "0-", "", "4-", ""},
    {"", "4+", "", "0+", "2-", "", "6-", ""},
    {"", "6+", "", "2+", "4-", "", "0-", ""},
    {"", "0+", "", "4+", "6-", "", "2-", ""},
};

// Table "D" for even x odd
const char* kTableEvenOddD[8][4] = {
    {"", "3+", "", "7+"}, {"3+", "", "7+", ""}, {"", "7+", "", "3+"},
    {"7+", "", "3+", ""}, {"1-", "", "5-", ""}, {"", "5-", "", "1-"},
    {"5-", "", "1-", ""}, {"", "1-", "", "5-"},
};

// Table "Dt" for odd x even
const char* kTableOddEvenDt[4][8] = {
    {"", "3+", "", "7+", "1-", "", "5-", ""},
    {"3+", "", "7+", "", "", "5-", "", "1-"},
    {"", "7+", "", "3+", "5-", "", "1-", ""},
    {"7+", "", "3+", "", "", "1-", "", "5-"},
};

// M^+, M^- of the odd-odd table, rows/cols 1-,3+,5-,7+
const int kTableOddOddMPlus[4][4] = {
    {2, 3, 2, 3}, {0, 1, 0, 1}, {2, 3, 2, 3}, {0, 1, 0, 1}};
const int kTableOddOddMMinus[4][4] = {
    {1, 0, 1, 0}, {3, 2, 3, 2}, {1, 0, 1, 0}, {3, 2, 3, 2}};

// sign c with M conj(sigma_k) M^dagger = c sigma_k, for M = sigma_m
int conj_sign(int m, int k) {
  const ComplexMatrix mm = pauli(m);
  const ComplexMatrix sk = pauli(k);
  const ComplexMatrix lhs = mm * sk.conjugate() * mm.adjoint();
  if (max_abs(ComplexMatrix(lhs - sk)) <= kTolAlg) return 1;
  if (max_abs(ComplexMatrix(lhs + sk)) <= kTolAlg) return -1;
  throw Error("conj_sign: sigma conjugate is not +-sigma");
}

KernelSplit kernel_split(const ComplexMatrix& D, const ComplexMatrix& chi,
                         const EighResult& ed) {
  // chi restricted to ker D has eigenvalues +-1; count them
  std::vector<Eigen::Index> ker;
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i)
    if (std::abs(ed.eigenvalues[i]) <= kTolSpec) ker.push_back(i);
  KernelSplit split;
  if (ker.empty()) return split;
  ComplexMatrix basis(D.rows(), static_cast<Eigen::Index>(ker.size()));
  for (std::size_t j = 0; j < ker.size(); ++j)
    basis.col(static_cast<Eigen::Index>(j)) = ed.eigenvectors.col(ker[j]);
  const ComplexMatrix restricted = basis.adjoint() * chi * basis;
  const EighResult er = eigh(restricted, kTolNum);
  for (Eigen::Index i = 0; i < er.eigenvalues.size(); ++i) {
    if (std::abs(er.eigenvalues[i] - 1.0) <= kTolNum)
      ++split.k_plus;
    else if (std::abs(er.eigenvalues[i] + 1.0) <= kTolNum)
      ++split.k_minus;
    else
      throw MissingKernelSplitError(
          "kernel_split: chi restricted to ker D is not a +-1 grading");
  }
  return split;
}

// chi-adapted kernel basis: columns are chi eigenvectors, +1 block first
std::pair<ComplexMatrix, KernelSplit> chi_adapted_kernel(
    const ComplexMatrix& chi, const EighResult& ed) {
  std::vector<Eigen::Index> ker;
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i)
    if (std::abs(ed.eigenvalues[i]) <= kTolSpec) ker.push_back(i);
  KernelSplit split;
  if (ker.empty()) return {ComplexMatrix(ed.eigenvectors.rows(), 0), split};
  ComplexMatrix basis(ed.eigenvectors.rows(),
                      static_cast<Eigen::Index>(ker.size()));
  for (std::size_t j = 0; j < ker.size(); ++j)
    basis.col(static_cast<Eigen::Index>(j)) = ed.eigenvectors.col(ker[j]);
  const EighResult er = eigh(ComplexMatrix(basis.adjoint() * chi * basis),
                             kTolNum);
  ComplexMatrix rotated = basis * er.eigenvectors;  // ascending: -1 then +1
  ComplexMatrix ordered(rotated.rows(), rotated.cols());
  Eigen::Index pos = 0;
  for (Eigen::Index i = 0; i < er.eigenvalues.size(); ++i) {
    if (std::abs(er.eigenvalues[i] - 1.0) <= kTolNum) {
      ordered.col(pos++) = rotated.col(i);
      ++split.k_plus;
    } else if (std::abs(er.eigenvalues[i] + 1.0) > kTolNum) {
      throw MissingKernelSplitError(
          "product_eigenbasis: ker D1 basis is not chi1-diagonal");
    }
  }
  for (Eigen::Index i = 0; i < er.eigenvalues.size(); ++i) {
    if (std::abs(er.eigenvalues[i] + 1.0) <= kTolNum) {
      ordered.col(pos++) = rotated.col(i);
      ++split.k_minus;
    }
  }
  return {ordered, split};
}

}  // namespace

std::string variant_name(ProductVariant v) {
  switch (v) {
    case ProductVariant::D:
      return "D";
    case ProductVariant::Dt:
      return "Dt";
    case ProductVariant::OOPlus:
      return "oo+";
    case ProductVariant::OOMinus:
      return "oo-";
  }
  return "?";
}

ComplexMatrix m_matrix(int n1, int n2, int which) {
  if (n1 % 2 == 0 || n2 % 2 == 0)
    throw Error("m_matrix: n1, n2 must be odd");
  if (which != 1 && which != -1)
    throw Error("m_matrix: which must be +1 or -1");
  const int m1 = (n1 - 1) / 2;
  const int m2 = (n2 - 1) / 2;
  int idx;
  if (which == 1) {
    const int sgn = (m2 + 1) % 2 == 0 ? 1 : -1;  // (-1)^{m2+1}
    idx = ((5 + sgn) / 2 + 2 * m1) % 4;
  } else {
    const int sgn = m2 % 2 == 0 ? 1 : -1;  // (-1)^{m2}
    idx = ((1 + sgn) / 2 + 2 * m1) % 4;
  }
  return pauli(idx);
}

std::pair<ComplexMatrix, ComplexMatrix> solve_m_matrices(
    const KOSignature& s1, const KOSignature& s2,
    const std::array<int, 3>& assignment) {
  std::array<int, 3> sorted = assignment;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3})
    throw Error("solve_m_matrices: assignment must be a permutation of 1,2,3");
  std::optional<int> plus, minus;
  for (int m = 0; m < 4; ++m) {
    const int c1 = conj_sign(m, assignment[0]);
    const int c2 = conj_sign(m, assignment[1]);
    if (s1.eps_prime * c1 != s2.eps_prime * c2) continue;
    const int eps_prime = s1.eps_prime * c1;
    (eps_prime == 1 ? plus : minus) = m;
  }
  if (!plus || !minus)
    throw Error("solve_m_matrices: no consistent M pair found");
  return {pauli(*plus), pauli(*minus)};
}

std::optional<KOLabel> predicted_ko(const KOLabel& l1, const KOLabel& l2,
                                    ProductVariant v) {
  const bool e1 = l1.is_even(), e2 = l2.is_even();
  switch (v) {
    case ProductVariant::D:
      if (e1 && e2) return cell(kTableEvenEvenD[even_index(l1)][even_index(l2)]);
      if (e1 && !e2) return cell(kTableEvenOddD[even_index(l1)][odd_index(l2)]);
      throw ParityMismatchError("predicted_ko: variant D needs an even first "
                                "factor");
    case ProductVariant::Dt:
      if (e1 && e2)
        return cell(kTableEvenEvenDt[even_index(l1)][even_index(l2)]);
      if (!e1 && e2) return cell(kTableOddEvenDt[odd_index(l1)][even_index(l2)]);
      throw ParityMismatchError("predicted_ko: variant Dt needs an even "
                                "second factor");
    case ProductVariant::OOPlus:
    case ProductVariant::OOMinus: {
      if (e1 || e2)
        throw ParityMismatchError("predicted_ko: oo variants need two odd "
                                  "factors");
      // no stored table here; the label follows from the sign algebra of
      // J1 x J2 x M K against the doubled D and chi = 1 x 1 x s3
      const int which = v == ProductVariant::OOPlus ? 1 : -1;
      const KOSignature s1 = table1_signature(l1);
      const KOSignature s2 = table1_signature(l2);
      const int mp = kTableOddOddMPlus[odd_index(l1)][odd_index(l2)];
      const int mm = kTableOddOddMMinus[odd_index(l1)][odd_index(l2)];
      const int m = which == 1 ? mp : mm;
      const int s_eps = m == 2 ? -1 : 1;  // M conj(M) = +-1
      const int eps = s1.eps * s2.eps * s_eps;
      const int eps_prime = s1.eps_prime * conj_sign(m, 1);
      const int eps_dbl = conj_sign(m, 3);
      return ko_label(KOSignature{eps, eps_prime, eps_dbl});
    }
  }
  return std::nullopt;
}

ComplexMatrix intertwiner_U(const ComplexMatrix& chi1,
                            const ComplexMatrix& chi2) {
  const ComplexMatrix id1 = identity(static_cast<int>(chi1.rows()));
  const ComplexMatrix id2 = identity(static_cast<int>(chi2.rows()));
  return 0.5 * (kron(id1, id2) + kron(chi1, id2) + kron(id1, chi2) -
                kron(chi1, chi2));
}

ComplexMatrix intertwiner_U(const RealSpectralTriple& t1,
                            const RealSpectralTriple& t2) {
  if (!t1.is_even() || !t2.is_even())
    throw ParityMismatchError("intertwiner_U: both triples must be even");
  return intertwiner_U(*t1.chi, *t2.chi);
}

SpectrumReport predicted_spectrum(const SpectrumReport& s1,
                                  const KernelSplit& split1,
                                  const SpectrumReport& s2, double tol) {
  if (!s1.is_symmetric(tol))
    throw AsymmetricSpectrumError(
        "predicted_spectrum: spec(D1) must be symmetric");
  if (split1.k_plus + split1.k_minus != s1.kernel_multiplicity(tol))
    throw MissingKernelSplitError(
        "predicted_spectrum: kernel split does not sum to the kernel "
        "multiplicity");
  std::vector<double> values;
  for (const auto& l1 : s1.lines) {
    if (l1.value <= tol) continue;  // lambda > 0 only; kernel handled below
    for (const auto& l2 : s2.lines) {
      const double r = std::hypot(l1.value, l2.value);
      const int mult = l1.multiplicity * l2.multiplicity;
      for (int k = 0; k < mult; ++k) {
        values.push_back(r);
        values.push_back(-r);
      }
    }
  }
  for (const auto& l2 : s2.lines) {
    for (int k = 0; k < split1.k_plus * l2.multiplicity; ++k)
      values.push_back(l2.value);
    for (int k = 0; k < split1.k_minus * l2.multiplicity; ++k)
      values.push_back(-l2.value);
  }
  return SpectrumReport::from_eigenvalues(std::move(values), tol);
}

SpectrumReport predicted_spectrum_oo(const SpectrumReport& s1,
                                     const SpectrumReport& s2, double tol) {
  std::vector<double> values;
  for (const auto& l1 : s1.lines) {
    for (const auto& l2 : s2.lines) {
      const double r = std::hypot(l1.value, l2.value);
      const int mult = l1.multiplicity * l2.multiplicity;
      for (int k = 0; k < mult; ++k) {
        values.push_back(r);
        values.push_back(-r);
      }
    }
  }
  return SpectrumReport::from_eigenvalues(std::move(values), tol);
}

SpectrumReport predicted_product_spectrum(const ComplexMatrix& D1,
                                          const ComplexMatrix* chi1,
                                          const ComplexMatrix& D2,
                                          const ComplexMatrix* chi2,
                                          ProductVariant v) {
  const EighResult e1 = eigh(D1);
  const EighResult e2 = eigh(D2);
  switch (v) {
    case ProductVariant::D: {
      if (!chi1) throw ParityMismatchError("variant D needs chi1");
      return predicted_spectrum(e1.spectrum, kernel_split(D1, *chi1, e1),
                                e2.spectrum);
    }
    case ProductVariant::Dt: {
      if (!chi2) throw ParityMismatchError("variant Dt needs chi2");
      return predicted_spectrum(e2.spectrum, kernel_split(D2, *chi2, e2),
                                e1.spectrum);
    }
    case ProductVariant::OOPlus:
    case ProductVariant::OOMinus:
      return predicted_spectrum_oo(e1.spectrum, e2.spectrum);
  }
  throw Error("predicted_product_spectrum: unreachable");
}

ComplexMatrix product_dirac(const ComplexMatrix& D1, const ComplexMatrix* chi1,
                            const ComplexMatrix& D2, const ComplexMatrix* chi2,
                            const ProductRecipe& recipe) {
  const ComplexMatrix id1 = identity(static_cast<int>(D1.rows()));
  const ComplexMatrix id2 = identity(static_cast<int>(D2.rows()));
  switch (recipe.variant) {
    case ProductVariant::D:
      if (!chi1) throw ParityMismatchError("product_dirac: D needs chi1");
      return kron(D1, id2) + kron(*chi1, D2);
    case ProductVariant::Dt:
      if (!chi2) throw ParityMismatchError("product_dirac: Dt needs chi2");
      return kron(D1, *chi2) + kron(id1, D2);
    case ProductVariant::OOPlus:
    case ProductVariant::OOMinus:
      return kron(D1, id2, pauli(recipe.pauli_assignment[0])) +
             kron(id1, D2, pauli(recipe.pauli_assignment[1]));
  }
  throw Error("product_dirac: unreachable");
}

std::vector<EigenPair> product_eigenbasis(const ComplexMatrix& D1,
                                          const ComplexMatrix* chi1,
                                          const ComplexMatrix& D2,
                                          const ComplexMatrix* chi2,
                                          const ProductRecipe& recipe) {
  std::vector<EigenPair> out;
  const ProductVariant v = recipe.variant;

  auto tag = [](const char* kind, double l, double m) {
    return std::string(kind) + "(" + std::to_string(l) + "," +
           std::to_string(m) + ")";
  };

  if (v == ProductVariant::D || v == ProductVariant::Dt) {
    // Dt is the mirrored construction: the graded factor supplies the
    // positive/kernel split and the ungraded one is a passenger.
    const bool mirrored = v == ProductVariant::Dt;
    const ComplexMatrix& Ds = mirrored ? D2 : D1;   // split factor
    const ComplexMatrix& Dp = mirrored ? D1 : D2;   // passenger factor
    const ComplexMatrix* chis = mirrored ? chi2 : chi1;
    if (!chis)
      throw ParityMismatchError("product_eigenbasis: missing grading");
    const EighResult es = eigh(Ds);
    const EighResult ep = eigh(Dp);
    auto [ker, split] = chi_adapted_kernel(*chis, es);

    auto place = [&](const ComplexVector& a, const ComplexVector& b) {
      // mirrored: passenger x split, else split x passenger
      return mirrored ? kron(ComplexMatrix(b), ComplexMatrix(a))
                      : kron(ComplexMatrix(a), ComplexMatrix(b));
    };

    for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i) {
      const double lambda = es.eigenvalues[i];
      if (lambda <= kTolSpec) continue;  // negatives are chi-partners
      const ComplexVector vpos = es.eigenvectors.col(i);
      const ComplexVector vneg = (*chis) * vpos;
      for (Eigen::Index j = 0; j < ep.eigenvalues.size(); ++j) {
        const double mu = ep.eigenvalues[j];
        const ComplexVector w = ep.eigenvectors.col(j);
        const double theta = 0.5 * std::atan(mu / lambda);
        const double r = std::hypot(lambda, mu);
        EigenPair up;
        up.value = r;
        up.vector = std::cos(theta) * place(vpos, w).col(0) +
                    std::sin(theta) * place(vneg, w).col(0);
        up.tag = tag("u+", lambda, mu);
        EigenPair um;
        um.value = -r;
        um.vector = -std::sin(theta) * place(vpos, w).col(0) +
                    std::cos(theta) * place(vneg, w).col(0);
        um.tag = tag("u-", lambda, mu);
        out.push_back(std::move(up));
        out.push_back(std::move(um));
      }
    }
    for (Eigen::Index k = 0; k < ker.cols(); ++k) {
      const int chi_sign = k < split.k_plus ? 1 : -1;
      const ComplexVector vk = ker.col(k);
      for (Eigen::Index j = 0; j < ep.eigenvalues.size(); ++j) {
        const double mu = ep.eigenvalues[j];
        EigenPair u;
        u.value = chi_sign * mu;
        u.vector = place(vk, ep.eigenvectors.col(j)).col(0);
        u.tag = tag(chi_sign > 0 ? "ker+" : "ker-", 0.0, mu);
        out.push_back(std::move(u));
      }
    }
    return out;
  }

  // odd-odd: the (1,1)/(-i,i) slots on the C^2 factor
  if (recipe.pauli_assignment != std::array<int, 3>{1, 2, 3})
    throw Error(
        "product_eigenbasis: closed form requires the default Pauli "
        "assignment");
  const EighResult e1 = eigh(D1);
  const EighResult e2 = eigh(D2);
  ComplexVector eplus(2), eminus(2);
  eplus << Complex(1, 0) / std::sqrt(2.0), Complex(1, 0) / std::sqrt(2.0);
  eminus << Complex(0, -1) / std::sqrt(2.0), Complex(0, 1) / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < e1.eigenvalues.size(); ++i) {
    const double lambda = e1.eigenvalues[i];
    for (Eigen::Index j = 0; j < e2.eigenvalues.size(); ++j) {
      const double mu = e2.eigenvalues[j];
      const ComplexMatrix vw = kron(ComplexMatrix(e1.eigenvectors.col(i)),
                                    ComplexMatrix(e2.eigenvectors.col(j)));
      double theta;
      if (std::abs(lambda) <= kTolSpec)
        theta = 0.25 * M_PI * (mu >= 0 ? 1.0 : -1.0);
      else
        theta = 0.5 * std::atan(mu / lambda);
      // the cos-branch eigenvalue is sign(lambda) * r (and +mu at lambda=0)
      const double cos_value =
          lambda * std::cos(2 * theta) + mu * std::sin(2 * theta);
      EigenPair a;
      a.value = cos_value;
      a.vector = std::cos(theta) * kron(vw, ComplexMatrix(eplus)).col(0) +
                 std::sin(theta) * kron(vw, ComplexMatrix(eminus)).col(0);
      a.tag = tag(cos_value >= 0 ? "u+" : "u-", lambda, mu);
      EigenPair b;
      b.value = std::abs(cos_value) <= kTolSpec ? 0.0 : -cos_value;
      b.vector = -std::sin(theta) * kron(vw, ComplexMatrix(eplus)).col(0) +
                 std::cos(theta) * kron(vw, ComplexMatrix(eminus)).col(0);
      b.tag = tag(-cos_value >= 0 ? "u+" : "u-", lambda, mu);
      out.push_back(std::move(a));
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<EigenPair> product_eigenbasis(const RealSpectralTriple& t1,
                                          const RealSpectralTriple& t2,
                                          const ProductRecipe& recipe) {
  return product_eigenbasis(t1.D, t1.chi ? &*t1.chi : nullptr, t2.D,
                            t2.chi ? &*t2.chi : nullptr, recipe);
}

RealSpectralTriple product_triple(const RealSpectralTriple& t1,
                                  const RealSpectralTriple& t2,
                                  const ProductRecipe& recipe) {
  const bool e1 = t1.is_even(), e2 = t2.is_even();
  const ProductVariant v = recipe.variant;

  const bool oo = v == ProductVariant::OOPlus || v == ProductVariant::OOMinus;
  if (oo && (e1 || e2))
    throw ParityRecipeMismatchError("product_triple: oo needs two odd factors");
  if (!oo) {
    if (v == ProductVariant::D && !e1)
      throw ParityRecipeMismatchError(
          "product_triple: variant D needs an even first factor");
    if (v == ProductVariant::Dt && !e2)
      throw ParityRecipeMismatchError(
          "product_triple: variant Dt needs an even second factor");
    if (!e1 && !e2)
      throw ParityRecipeMismatchError(
          "product_triple: two odd factors need an oo variant");
  }

  // predicted label (ee/eo/oe); blank cells refuse to build unless forced
  std::optional<KOLabel> predicted;
  if (t1.claimed_label && t2.claimed_label) {
    predicted = predicted_ko(*t1.claimed_label, *t2.claimed_label, v);
    if (!predicted && !recipe.force)
      throw NoTableEntryError("product_triple: (" + t1.claimed_label->str() +
                              ", " + t2.claimed_label->str() + ", " +
                              variant_name(v) +
                              ") is a blank cell; no consistent real "
                              "structure exists");
  }

  const int n1 = static_cast<int>(t1.D.rows());
  const int n2 = static_cast<int>(t2.D.rows());
  const ComplexMatrix id2x2 = identity(2);

  RealSpectralTriple out;
  out.hilbert_dim = n1 * n2 * (oo ? 2 : 1);

  for (const auto& a : t1.algebra) {
    for (const auto& b : t2.algebra) {
      ComplexMatrix rep = kron(a.rep, b.rep);
      if (oo) rep = kron(rep, id2x2);
      out.algebra.push_back({a.label + "(x)" + b.label, std::move(rep)});
    }
  }

  out.D = product_dirac(t1.D, t1.chi ? &*t1.chi : nullptr, t2.D,
                        t2.chi ? &*t2.chi : nullptr, recipe);

  if (e1 && e2)
    out.chi = kron(*t1.chi, *t2.chi);
  else if (oo)
    out.chi = kron(identity(n1), identity(n2),
                   pauli(recipe.pauli_assignment[2]));

  if (oo) {
    const KOSignature s1 =
        signature_of(t1.J, t1.D, t1.chi ? &*t1.chi : nullptr);
    const KOSignature s2 =
        signature_of(t2.J, t2.D, t2.chi ? &*t2.chi : nullptr);
    auto [mp, mm] = solve_m_matrices(s1, s2, recipe.pauli_assignment);
    const ComplexMatrix& m = v == ProductVariant::OOPlus ? mp : mm;
    out.J = AntiUnitaryOp(
        kron(kron(t1.J.linear_part, t2.J.linear_part), m));
  } else {
    out.J = kron(t1.J, t2.J);
  }

  if (t1.probe_subspace || t2.probe_subspace) {
    ComplexMatrix p = kron(
        t1.probe_subspace ? *t1.probe_subspace : identity(n1),
        t2.probe_subspace ? *t2.probe_subspace : identity(n2));
    if (oo) p = kron(p, id2x2);
    out.probe_subspace = std::move(p);
  }

  if (t1.metric_dim && t2.metric_dim)
    out.metric_dim = *t1.metric_dim + *t2.metric_dim;

  if (oo) {
    // no stored label table for oo; the label follows from the sign algebra
    // for the default slot assignment, and is recomputed from the built
    // operators otherwise
    if (t1.claimed_label && t2.claimed_label &&
        recipe.pauli_assignment == std::array<int, 3>{1, 2, 3}) {
      out.claimed_label =
          predicted_ko(*t1.claimed_label, *t2.claimed_label, v);
    } else {
      out.claimed_label = ko_label(signature_of(out.J, out.D, &*out.chi));
    }
  } else {
    out.claimed_label = predicted;
  }

  out.meta["kind"] = "product";
  out.meta["variant"] = variant_name(v);
  if (oo)
    out.meta["pauli_assignment"] =
        std::to_string(recipe.pauli_assignment[0]) +
        std::to_string(recipe.pauli_assignment[1]) +
        std::to_string(recipe.pauli_assignment[2]);
  auto kind_of = [](const RealSpectralTriple& t) {
    auto it = t.meta.find("kind");
    return it == t.meta.end() ? std::string("?") : it->second;
  };
  out.meta["factor1"] = kind_of(t1);
  out.meta["factor2"] = kind_of(t2);
  return out;
}

}  // namespace rst
