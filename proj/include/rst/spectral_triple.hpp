#ifndef RST_SPECTRAL_TRIPLE_HPP
#define RST_SPECTRAL_TRIPLE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rst/matrix.hpp"
#include "rst/real_structure.hpp"

namespace rst {

struct AlgebraGen {
  std::string label;
  ComplexMatrix rep;
};

/// A finite-dimensional real spectral triple. The algebra is carried by a
/// labeled generating list whose span must be unital and *-closed; checks
/// quantify over generators (the conditions are multilinear in (a,b)).
/// probe_subspace, when present, is the projection onto the modes where the
/// truncated example satisfies the algebraic identities exactly.
struct RealSpectralTriple {
  int hilbert_dim = 0;
  std::vector<AlgebraGen> algebra;
  ComplexMatrix D;
  AntiUnitaryOp J;
  std::optional<ComplexMatrix> chi;
  std::optional<KOLabel> claimed_label;
  std::optional<int> metric_dim;
  std::optional<ComplexMatrix> probe_subspace;
  std::map<std::string, std::string> meta;

  bool is_even() const { return chi.has_value(); }
  const ComplexMatrix* find_gen(const std::string& label) const;
  /// J b^dagger J^-1, the right-action representation of b.
  ComplexMatrix opposite(const ComplexMatrix& b) const;
};

/// Type invariants: D Hermitian, J antiunitary of matching dimension, chi a
/// grading commuting with the algebra and anticommuting with D (on the probe
/// subspace when present), identity in the algebra span, probe a projection.
/// Throws InvariantViolationError.
void validate_triple(const RealSpectralTriple& t);

struct CheckReport {
  bool passed = false;
  double max_violation = 0.0;
  std::string relation;
};

/// [a, J b* J^-1] = 0 over generator pairs.
CheckReport check_zero_order(const RealSpectralTriple& t, double tol = kTolAlg);

/// [[D, a], J b* J^-1] = 0 over generator pairs.
CheckReport check_first_order(const RealSpectralTriple& t,
                              double tol = kTolAlg);

/// Recomputes the KO signature; when a claimed_label is present the label is
/// verified as well. Failures are reported, not thrown.
std::pair<CheckReport, std::optional<KOSignature>> check_reality(
    const RealSpectralTriple& t, double tol = kTolAlg);

/// spec(D_prod^2) must equal {lambda^2 + mu^2} with product multiplicities.
CheckReport check_dimension_spectrum_additivity(const RealSpectralTriple& t1,
                                                const RealSpectralTriple& t2,
                                                const RealSpectralTriple& prod,
                                                double tol = kTolSpec);

}  // namespace rst

#endif  // RST_SPECTRAL_TRIPLE_HPP
