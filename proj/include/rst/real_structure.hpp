#ifndef RST_REAL_STRUCTURE_HPP
#define RST_REAL_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rst/clifford.hpp"
#include "rst/matrix.hpp"

namespace rst {

/// (epsilon, epsilon', epsilon'') with epsilon'' absent in the odd case.
/// Degenerate flags mark signs reported as + by convention because the
/// corresponding relation holds with both signs (D = 0, chi absent).
struct KOSignature {
  int eps = 1;
  int eps_prime = 1;
  std::optional<int> eps_dblprime;
  bool degenerate_prime = false;
  bool degenerate_dblprime = false;

  bool operator==(const KOSignature& o) const {
    return eps == o.eps && eps_prime == o.eps_prime &&
           eps_dblprime == o.eps_dblprime;
  }
};

/// KO-dimension n in Z_8 with the +- variant (equal to epsilon' throughout;
/// redundant but kept for odd n, following the labeling convention).
struct KOLabel {
  int n_mod8 = 0;
  int variant = 1;

  bool operator==(const KOLabel& o) const {
    return n_mod8 == o.n_mod8 && variant == o.variant;
  }
  bool is_even() const { return n_mod8 % 2 == 0; }
  std::string str() const;
};

KOLabel parse_ko_label(const std::string& s);  // "2+", "0-", ...

/// The twelve valid columns, even block first (0+..6+, 0-..6-, 1-,3+,5-,7+).
const std::vector<std::pair<KOLabel, KOSignature>>& ko_table();

/// The stored column for a label. Throws NotASignatureError when unknown.
KOSignature table1_signature(const KOLabel& label);

/// Marks of the selection made in the literature this table follows
/// (metadata only).
bool connes_selected(const KOLabel& label);

/// Charge conjugation C_+- as the prescribed product of gamma matrices:
/// C_+ ~ gamma^1..gamma^m for even m, gamma^{m+1}..gamma^{2m} for odd m,
/// and the other way round for C_-. Phase-fixed so the first nonzero entry
/// (row-major) is positive real. For odd n only one variant exists; the
/// other raises NoSuchJError.
AntiUnitaryOp build_charge_conjugation(int n, int variant,
                                       std::optional<int> odd_sign = {});

/// Recomputes (eps, eps', eps'') from J J, J D J^-1 and J chi J^-1.
/// Throws NotASignatureError when a relation holds with no consistent sign.
KOSignature signature_of(const AntiUnitaryOp& J, const ComplexMatrix& D,
                         const ComplexMatrix* chi = nullptr,
                         double tol = kTolAlg);

/// Table-column lookup. Throws NotASignatureError when sig matches no column.
KOLabel ko_label(const KOSignature& sig);

/// Componentwise check of eps_vec_-(n) = -eps_vec_+(n+2) on the stored table.
bool signature_negation_check(int n_even);

}  // namespace rst

#endif  // RST_REAL_STRUCTURE_HPP
