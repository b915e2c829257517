#ifndef RST_HOCHSCHILD_HPP
#define RST_HOCHSCHILD_HPP

#include <vector>

#include "rst/spectral_triple.hpp"

namespace rst {

/// One term coeff * (a0_left (x) a0_right^o) (x) a_1 (x) ... (x) a_p of a
/// Hochschild chain with coefficients in A (x) A^o. Slots are stored as
/// concrete representation matrices; chains are kept in expanded term-list
/// form and only ever compared through evaluation.
struct ChainTerm {
  Complex coeff{1.0, 0.0};
  ComplexMatrix a0_left;
  ComplexMatrix a0_right;
  std::vector<ComplexMatrix> legs;
};

struct HochschildChain {
  int degree = 0;  // leg count of every term
  std::vector<ChainTerm> terms;
};

HochschildChain make_chain(int degree, std::vector<ChainTerm> terms);

/// Standard Hochschild boundary with A (x) A^o coefficients; the bimodule
/// action is a . (x (x) y^o) . b = (a x b) (x) y^o (the A^o slot is inert).
/// Throws DegreeZeroError on degree-0 chains.
HochschildChain boundary(const HochschildChain& c);

/// Shuffle product of a chain over A1 and a chain over A2, landing over
/// A1 (x) A2: the a0 slots combine componentwise, the legs become
/// a_i (x) 1 and 1 (x) a_j, and the sum runs over all (p,q)-shuffles with
/// their signature signs. Term count multiplies by binomial(p+q, p).
HochschildChain shuffle(const HochschildChain& x, const HochschildChain& y);

/// Kron every slot with an identity factor on the right (the lift a -> a x 1
/// needed for product triples whose representation carries an extra factor,
/// e.g. the odd-odd C^2 doubling).
HochschildChain lift_right(const HochschildChain& c, int extra_dim);

/// Scale all coefficients.
HochschildChain scale(const HochschildChain& c, Complex factor);

/// Faithful multilinear evaluation sum_t coeff * x (x) y (x) a_1 (x) ... used
/// to test formal identities (boundary Leibniz, d o d = 0) on matrix data.
ComplexMatrix chain_tensor_eval(const HochschildChain& c);

/// pi_D(a0 (x) a1 (x) ... (x) ap) = tau_J(a0) [D, a1] ... [D, ap] with
/// tau_J(a (x) b^o) = a J b^dagger J^-1, extended linearly over terms.
ComplexMatrix pi_D(const RealSpectralTriple& t, const HochschildChain& c);

struct OrientationReport {
  bool is_cycle = false;
  double cycle_violation = 0.0;
  bool proportional = false;  // pi_D(c) = scalar * chi within tolerance
  Complex scalar{0.0, 0.0};   // least-squares proportionality factor
  double residual = 0.0;
  bool degenerate = false;    // pi_D(c) ~ 0, scalar meaningless
};

/// Orientation condition pi_D(c) = chi; for odd triples the comparison
/// target is the identity and the caller matches the scalar against the
/// intended +-1 grading. Evaluation is restricted to the probe subspace.
OrientationReport check_orientation(const RealSpectralTriple& t,
                                    const HochschildChain& c,
                                    double tol = kTolNum);

}  // namespace rst

#endif  // RST_HOCHSCHILD_HPP
