#ifndef RST_MATRIX_HPP
#define RST_MATRIX_HPP

#include <optional>
#include <vector>

#include "rst/types.hpp"

namespace rst {

/// Entrywise max norm, the norm used in all check reports.
double max_abs(const ComplexMatrix& m);
double max_abs(const ComplexVector& v);

bool all_finite(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kTolAlg);
bool is_unitary(const ComplexMatrix& m, double tol = kTolAlg);
bool is_projection(const ComplexMatrix& m, double tol = kTolAlg);

ComplexMatrix identity(int n);

/// Standard Kronecker product; dims multiply, exactly associative.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c);

/// Eigenvalues clustered into multiplicity classes. Canonical form is
/// ascending; clustering tolerance is tol*(1+|lambda|).
struct SpectrumLine {
  double value;
  int multiplicity;
};

struct SpectrumReport {
  std::vector<SpectrumLine> lines;

  int ambient_dim() const;
  static SpectrumReport from_eigenvalues(std::vector<double> values,
                                         double tol = kTolSpec);
  /// Multiplicity of the cluster containing 0 (the kernel), 0 if none.
  int kernel_multiplicity(double tol = kTolSpec) const;
  bool is_symmetric(double tol = kTolSpec) const;
};

bool same_spectrum(const SpectrumReport& a, const SpectrumReport& b,
                   double tol = kTolSpec);

struct EighResult {
  SpectrumReport spectrum;
  RealVector eigenvalues;      // ascending, with repetition
  ComplexMatrix eigenvectors;  // unitary, columns match eigenvalues
};

/// Hermitian eigendecomposition. Throws NotHermitianError when
/// ||h - h^dagger||_max exceeds tol.
EighResult eigh(const ComplexMatrix& h, double tol = kTolAlg);

/// A unitary matrix composed with entrywise complex conjugation,
/// v |-> linear_part * conj(v).
struct AntiUnitaryOp {
  ComplexMatrix linear_part;

  AntiUnitaryOp() : linear_part(ComplexMatrix::Identity(1, 1)) {}
  explicit AntiUnitaryOp(ComplexMatrix c, double tol = kTolAlg);

  int dim() const { return static_cast<int>(linear_part.rows()); }

  ComplexVector apply(const ComplexVector& v) const;

  /// J M J^{-1} = C conj(M) C^dagger, a linear operator.
  ComplexMatrix conjugate(const ComplexMatrix& m) const;

  /// The composite of two antilinear maps is linear:
  /// (A o B) = A.linear_part * conj(B.linear_part).
  static ComplexMatrix compose_linear(const AntiUnitaryOp& a,
                                      const AntiUnitaryOp& b);

  /// J o J as a linear operator.
  ComplexMatrix squared() const { return compose_linear(*this, *this); }
};

/// Kronecker product of antiunitaries, (J1 x J2)(v x w) = J1 v x J2 w.
AntiUnitaryOp kron(const AntiUnitaryOp& a, const AntiUnitaryOp& b);

}  // namespace rst

#endif  // RST_MATRIX_HPP
