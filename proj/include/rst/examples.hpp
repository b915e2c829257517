#ifndef RST_EXAMPLES_HPP
#define RST_EXAMPLES_HPP

#include <optional>

#include "rst/hochschild.hpp"
#include "rst/spectral_triple.hpp"

namespace rst {

/// Hard truncation keeps the exact momentum-space spectrum but breaks the
/// shift algebra at the box edge (hence probe subspaces); cyclic truncation
/// keeps the generators exactly unitary but distorts D at the wrap seam.
enum class TruncationMode { Hard, Cyclic };

struct TorusSpec {
  int n = 1;
  int K = 1;  // momentum box {-K..K} per active axis
  TruncationMode mode = TruncationMode::Hard;
  /// Even n: required J variant (+1/-1). Odd n: ignored (the variant is
  /// forced by the dimension).
  std::optional<int> j_variant;
  /// Required iff n is odd: the gamma irrep label.
  std::optional<int> odd_sign;
  int generator_degree = 1;  // max Fourier shift of the algebra generators
  /// Axes carrying momentum; the remaining axes are frozen at k = 0 and
  /// contribute no shift generators. Keeps high dimensions desk-scale while
  /// leaving every sign relation exact. Default (-1) means all n axes.
  int active_axes = -1;
  int dim_cap = 4096;
};

/// Truncated flat-torus Dirac triple: H = (momentum modes) x (spinor space),
/// D block-diagonal with blocks i sum_mu k_mu gamma^mu, algebra generated by
/// unit Fourier shifts, J = (momentum flip) o C_variant-conjugation,
/// chi = 1 x sigma_3^{x m} for even n.
RealSpectralTriple torus_triple(const TorusSpec& spec);

/// Minimal even finite triple: A = span{diag(1,0), diag(0,1)} on C^2,
/// D = m sigma_1, chi = sigma_3, J = conjugation (0+) or sigma_3-conjugation
/// (0-). Note: zero-order holds, first-order does not (no J on C^2 fixes it
/// while D != 0); spectra, signatures and products are unaffected.
RealSpectralTriple two_point_triple(double mass, int j_variant);

/// Degree-1 orientation cycle (u (x) 1^o) (x) u* of a 1-dimensional torus
/// triple; pi_D(c) equals chi_(1,odd_sign) = odd_sign * 1 on interior modes.
HochschildChain circle_cycle(const RealSpectralTriple& t);

/// Orientation cycle of a 2-torus: the shuffle-product pattern of two circle
/// cycles, rescaled by the measured proportionality so pi_D(c) = chi. Works
/// on a product of two circle triples or on a native 2-dimensional torus.
HochschildChain torus2_cycle(const RealSpectralTriple& t);

}  // namespace rst

#endif  // RST_EXAMPLES_HPP
