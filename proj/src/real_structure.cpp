#include "rst/real_structure.hpp"

#include <cmath>

namespace rst {

namespace {

// Best sign s for X = s * Y; returns {s, violation}. A degenerate relation
// (Y ~ 0 ~ X) reports +1 with degenerate = true.
struct SignFit {
  int sign;
  double violation;
  bool degenerate;
};

SignFit fit_sign(const ComplexMatrix& x, const ComplexMatrix& y, double tol) {
  const double scale = std::max({1.0, max_abs(x), max_abs(y)});
  if (max_abs(x) <= tol * scale && max_abs(y) <= tol * scale)
    return {1, 0.0, true};
  const double plus = max_abs(ComplexMatrix(x - y));
  const double minus = max_abs(ComplexMatrix(x + y));
  if (plus <= minus) return {1, plus / scale, false};
  return {-1, minus / scale, false};
}

}  // namespace

std::string KOLabel::str() const {
  return std::to_string(n_mod8) + (variant > 0 ? "+" : "-");
}

KOLabel parse_ko_label(const std::string& s) {
  if (s.size() != 2 || s[0] < '0' || s[0] > '7' ||
      (s[1] != '+' && s[1] != '-'))
    throw ParseError("parse_ko_label: expected like \"2+\", got \"" + s +
                     "\"");
  return KOLabel{s[0] - '0', s[1] == '+' ? 1 : -1};
}

const std::vector<std::pair<KOLabel, KOSignature>>& ko_table() {
  static const std::vector<std::pair<KOLabel, KOSignature>> table = {
      {{0, 1}, {1, 1, 1}},    {{2, 1}, {-1, 1, -1}},
      {{4, 1}, {-1, 1, 1}},   {{6, 1}, {1, 1, -1}},
      {{0, -1}, {1, -1, 1}},  {{2, -1}, {1, -1, -1}},
      {{4, -1}, {-1, -1, 1}}, {{6, -1}, {-1, -1, -1}},
      {{1, -1}, {1, -1, std::nullopt}},
      {{3, 1}, {-1, 1, std::nullopt}},
      {{5, -1}, {-1, -1, std::nullopt}},
      {{7, 1}, {1, 1, std::nullopt}},
  };
  return table;
}

KOSignature table1_signature(const KOLabel& label) {
  for (const auto& [l, sig] : ko_table())
    if (l == label) return sig;
  throw NotASignatureError("table1_signature: no column labeled " +
                           label.str());
}

bool connes_selected(const KOLabel& label) {
  // the bullet row: the J_+ block for even n and all odd columns
  return label.is_even() ? label.variant == 1 : true;
}

AntiUnitaryOp build_charge_conjugation(int n, int variant,
                                       std::optional<int> odd_sign) {
  if (variant != 1 && variant != -1)
    throw BadSignError("build_charge_conjugation: variant must be +1 or -1");
  const bool odd = n % 2 == 1;
  if (odd && !odd_sign)
    throw BadSignError("build_charge_conjugation: odd n needs odd_sign");
  if (!odd && odd_sign)
    throw BadSignError("build_charge_conjugation: even n admits no odd_sign");

  const GammaRep rep = build_gamma_rep(n, odd_sign);
  const int m = n / 2;
  const int dim = rep.spinor_dim();

  // C_+ ~ gamma^1..gamma^m (m even) or gamma^{m+1}..gamma^{2m} (m odd);
  // the other way for C_-.
  const bool first_half = (m % 2 == 0) == (variant == 1);
  ComplexMatrix c = identity(dim);
  for (int j = 0; j < m; ++j)
    c = c * rep.matrices[first_half ? j : m + j];

  // phase fixing: first nonzero entry (row-major scan) positive real
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    bool done = false;
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (std::abs(c(i, j)) > 0.5 / dim) {
        c *= std::abs(c(i, j)) / c(i, j);
        done = true;
        break;
      }
    }
    if (done) break;
  }

  // C conj(gamma^mu) = variant * gamma^mu C must hold for every mu; in odd
  // dimension only one variant survives the gamma^n constraint.
  double worst = 0.0;
  for (const auto& g : rep.matrices) {
    worst = std::max(
        worst, max_abs(ComplexMatrix(c * g.conjugate() -
                                     static_cast<double>(variant) * g * c)));
  }
  if (worst > kTolAlg)
    throw NoSuchJError("build_charge_conjugation: no J_" +
                       std::string(variant == 1 ? "+" : "-") +
                       " in dimension " + std::to_string(n));
  return AntiUnitaryOp(c);
}

KOSignature signature_of(const AntiUnitaryOp& J, const ComplexMatrix& D,
                         const ComplexMatrix* chi, double tol) {
  const int dim = J.dim();
  if (D.rows() != dim || D.cols() != dim)
    throw DimensionMismatchError("signature_of: D dimension mismatch");

  KOSignature sig;

  // J^2 = eps
  const ComplexMatrix jj = J.squared();
  const SignFit eps_fit = fit_sign(jj, identity(dim), tol);
  if (eps_fit.violation > tol)
    throw NotASignatureError("signature_of: J^2 is not +-1 (violation " +
                             std::to_string(eps_fit.violation) + ")");
  sig.eps = eps_fit.sign;

  // J D = eps' D J, i.e. C conj(D) = eps' D C
  const ComplexMatrix jd = J.linear_part * D.conjugate();
  const ComplexMatrix dj = D * J.linear_part;
  const SignFit prime_fit = fit_sign(jd, dj, tol);
  if (prime_fit.violation > tol)
    throw NotASignatureError(
        "signature_of: JD = eps' DJ holds with no consistent sign "
        "(violation " +
        std::to_string(prime_fit.violation) + ")");
  sig.eps_prime = prime_fit.sign;
  sig.degenerate_prime = prime_fit.degenerate;

  if (chi) {
    if (chi->rows() != dim || chi->cols() != dim)
      throw DimensionMismatchError("signature_of: chi dimension mismatch");
    const ComplexMatrix jc = J.linear_part * chi->conjugate();
    const ComplexMatrix cj = (*chi) * J.linear_part;
    const SignFit dbl_fit = fit_sign(jc, cj, tol);
    if (dbl_fit.violation > tol)
      throw NotASignatureError(
          "signature_of: J chi = eps'' chi J holds with no consistent sign "
          "(violation " +
          std::to_string(dbl_fit.violation) + ")");
    sig.eps_dblprime = dbl_fit.sign;
    sig.degenerate_dblprime = dbl_fit.degenerate;
  }
  return sig;
}

KOLabel ko_label(const KOSignature& sig) {
  for (const auto& [label, col] : ko_table())
    if (col == sig) return label;
  throw NotASignatureError("ko_label: signature matches no column of the "
                           "twelve-case table");
}

bool signature_negation_check(int n_even) {
  if (n_even % 2 != 0) throw Error("signature_negation_check: n must be even");
  const int n = ((n_even % 8) + 8) % 8;
  const KOSignature minus = table1_signature({n, -1});
  const KOSignature plus = table1_signature({(n + 2) % 8, 1});
  return minus.eps == -plus.eps && minus.eps_prime == -plus.eps_prime &&
         minus.eps_dblprime && plus.eps_dblprime &&
         *minus.eps_dblprime == -*plus.eps_dblprime;
}

}  // namespace rst
