#ifndef RST_PRODUCT_HPP
#define RST_PRODUCT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rst/spectral_triple.hpp"

namespace rst {

/// D  = D1 x id + chi1 x D2   (even-even, even-odd)
/// Dt = D1 x chi2 + id x D2   (even-even, odd-even)
/// OO = D1 x id x s_a + id x D2 x s_b on (H1 x H2) x C^2, J = J1 x J2 x M K
enum class ProductVariant { D, Dt, OOPlus, OOMinus };

std::string variant_name(ProductVariant v);

struct ProductRecipe {
  ProductVariant variant = ProductVariant::D;
  /// sigma-slot assignment (D1 slot, D2 slot, chi slot) for the odd-odd
  /// construction; any permutation of (1,2,3) works, M is re-derived.
  std::array<int, 3> pauli_assignment{1, 2, 3};
  /// Build a blank-cell combination anyway (signature_of will then find no
  /// consistent sign).
  bool force = false;
};

/// M^+(n1,n2) = sigma_j, j = (5 + (-1)^{m2+1})/2 + 2 m1 mod 4;
/// M^-(n1,n2) = sigma_k, k = (1 + (-1)^{m2})/2 + 2 m1 mod 4 (n_i = 2m_i + 1).
ComplexMatrix m_matrix(int n1, int n2, int which);

/// The pair (M^+, M^-) for a general sigma-slot assignment, found by solving
/// the sign-consistency constraints; reproduces the stored table for the
/// default assignment.
std::pair<ComplexMatrix, ComplexMatrix> solve_m_matrices(
    const KOSignature& s1, const KOSignature& s2,
    const std::array<int, 3>& assignment);

/// Stored product tables (even-even D, even-even Dt, even-odd D, odd-even
/// Dt). Blank cells return nullopt.
std::optional<KOLabel> predicted_ko(const KOLabel& l1, const KOLabel& l2,
                                    ProductVariant v);

/// U = (id x id + chi1 x id + id x chi2 - chi1 x chi2)/2,
/// U D U^dagger = Dt.
ComplexMatrix intertwiner_U(const ComplexMatrix& chi1,
                            const ComplexMatrix& chi2);
ComplexMatrix intertwiner_U(const RealSpectralTriple& t1,
                            const RealSpectralTriple& t2);

struct KernelSplit {
  int k_plus = 0;
  int k_minus = 0;
};

/// Closed-form product spectrum for D = D1 x id + chi1 x D2:
/// {+-sqrt(l^2+m^2) with mult M_l N_m : l > 0} plus {+-m} on the chi1-split
/// kernel of D1. Throws AsymmetricSpectrumError when s1 is not symmetric.
SpectrumReport predicted_spectrum(const SpectrumReport& s1,
                                  const KernelSplit& split1,
                                  const SpectrumReport& s2,
                                  double tol = kTolSpec);

/// Odd-odd: every (l, m) pair contributes +-sqrt(l^2+m^2) via the C^2 factor.
SpectrumReport predicted_spectrum_oo(const SpectrumReport& s1,
                                     const SpectrumReport& s2,
                                     double tol = kTolSpec);

/// Dispatch on the recipe (Dt swaps the roles of the factors).
SpectrumReport predicted_product_spectrum(const ComplexMatrix& D1,
                                          const ComplexMatrix* chi1,
                                          const ComplexMatrix& D2,
                                          const ComplexMatrix* chi2,
                                          ProductVariant v);

struct EigenPair {
  double value = 0.0;
  ComplexVector vector;
  std::string tag;
};

/// The product Dirac operator matrix for the given variant.
ComplexMatrix product_dirac(const ComplexMatrix& D1, const ComplexMatrix* chi1,
                            const ComplexMatrix& D2, const ComplexMatrix* chi2,
                            const ProductRecipe& recipe);

/// Explicit eigenbasis: theta_{lm} = arctan(m/l)/2 rotations of
/// v x w / chi1 v x w pairs (or the (1,1),(-i,i) C^2 slots in the odd-odd
/// case), kernel vectors v_{j+-} x w. Orthonormal, spans the full space.
std::vector<EigenPair> product_eigenbasis(const ComplexMatrix& D1,
                                          const ComplexMatrix* chi1,
                                          const ComplexMatrix& D2,
                                          const ComplexMatrix* chi2,
                                          const ProductRecipe& recipe);
std::vector<EigenPair> product_eigenbasis(const RealSpectralTriple& t1,
                                          const RealSpectralTriple& t2,
                                          const ProductRecipe& recipe);

/// The full product triple. Parities select the legal variants (even-even:
/// D or Dt; even-odd: D; odd-even: Dt; odd-odd: OOPlus/OOMinus). Blank table
/// cells throw NoTableEntryError unless recipe.force is set.
RealSpectralTriple product_triple(const RealSpectralTriple& t1,
                                  const RealSpectralTriple& t2,
                                  const ProductRecipe& recipe);

}  // namespace rst

#endif  // RST_PRODUCT_HPP
