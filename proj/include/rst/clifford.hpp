#ifndef RST_CLIFFORD_HPP
#define RST_CLIFFORD_HPP

#include <optional>
#include <vector>

#include "rst/matrix.hpp"

namespace rst {

/// sigma_0 ... sigma_3 (sigma_0 is the 2x2 identity).
ComplexMatrix pauli(int i);

/// A validated set of gamma matrices for Euclidean dimension n with the
/// convention gamma^mu gamma^nu + gamma^nu gamma^mu = -2 delta^{mu nu}.
/// Odd n carries the irrep label sign (+1 or -1); even n carries none.
struct GammaRep {
  int n = 0;
  std::optional<int> sign;
  std::vector<ComplexMatrix> matrices;

  bool is_even() const { return n % 2 == 0; }
  int spinor_dim() const {
    return matrices.empty() ? 1 : static_cast<int>(matrices[0].rows());
  }
};

struct Chirality {
  int n = 0;
  ComplexMatrix matrix;  // sigma_3^{(x) n/2} for even n, +-identity for odd n
  Complex alpha;         // chi = alpha_n gamma^1 ... gamma^n
};

/// alpha_n = 1, -i, i, 1 for n = 0,1,2,3 mod 4.
Complex alpha_of(int n);

/// The canonical representation: gamma^j = i s3^{m-j} x s1 x 1^{j-1},
/// gamma^{m+j} = i s3^{m-j} x s2 x 1^{j-1} for n = 2m, and for odd n the
/// even matrices plus gamma^n = sign * i * s3^{x m}. n_cap bounds the
/// 2^{n/2} matrix sizes; raise it knowingly.
GammaRep build_gamma_rep(int n, std::optional<int> sign = {}, int n_cap = 12);

Chirality chirality_of(int n, std::optional<int> sign = {});

/// Max violation over anticommutation, anti-hermiticity and square = -1.
double clifford_violation(const std::vector<ComplexMatrix>& gammas);

/// Reads the irrep label off the central scalar gamma^1...gamma^n.
/// Throws NotScalarError when the product is not a scalar multiple of 1.
int classify_odd_rep(const std::vector<ComplexMatrix>& gammas,
                     double tol = kTolAlg);

enum class ComposeScheme { EvenOdd, OddEven, EvenEvenLeft, EvenEvenRight, OddOdd };

/// Tensor-product composition of two gamma sets into dimension n1+n2.
/// EvenOdd:  gamma^mu x 1, chi_1 x gamma^nu          (even first)
/// OddEven:  1 x gamma^nu first, gamma^mu x chi_2 last (even second)
/// EvenEvenLeft/Right: the two placements above for two even inputs
/// OddOdd:   gamma^mu x 1 x s1, 1 x gamma^nu x s2
///
/// For mixed parities the composed set classifies to
/// sign(odd input) * alpha_{n1+n2} / (alpha_{n1} alpha_{n2}); the central
/// scalar flips the label when the even dimension is 2 and the odd one is
/// 3 mod 4. The returned sign field records the classified label.
GammaRep compose_reps(const GammaRep& g1, const GammaRep& g2, ComposeScheme s);

/// Traces of all ordered monomials gamma^{mu_1 < ... < mu_k}; a complete
/// unitary-equivalence invariant for irreducible sets.
std::vector<Complex> monomial_trace_vector(
    const std::vector<ComplexMatrix>& gammas);

bool trace_vectors_match(const std::vector<Complex>& a,
                         const std::vector<Complex>& b, double tol = kTolAlg);

}  // namespace rst

#endif  // RST_CLIFFORD_HPP
