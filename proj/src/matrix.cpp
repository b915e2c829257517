#include "rst/matrix.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace rst {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double max_abs(const ComplexVector& v) {
  if (v.size() == 0) return 0.0;
  return v.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(ComplexMatrix(m - m.adjoint())) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  ComplexMatrix g = m.adjoint() * m;
  g -= identity(static_cast<int>(m.rows()));
  return max_abs(g) <= tol;
}

bool is_projection(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return is_hermitian(m, tol) && max_abs(ComplexMatrix(m * m - m)) <= tol;
}

ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c) {
  return kron(kron(a, b), c);
}

int SpectrumReport::ambient_dim() const {
  int n = 0;
  for (const auto& l : lines) n += l.multiplicity;
  return n;
}

SpectrumReport SpectrumReport::from_eigenvalues(std::vector<double> values,
                                                double tol) {
  std::sort(values.begin(), values.end());
  SpectrumReport rep;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    // grow the cluster as long as neighbours stay within tolerance of the
    // cluster's running representative
    while (j < values.size() &&
           std::abs(values[j] - values[j - 1]) <=
               tol * (1.0 + std::abs(values[j]))) {
      sum += values[j];
      ++j;
    }
    const int mult = static_cast<int>(j - i);
    rep.lines.push_back({sum / mult, mult});
    i = j;
  }
  return rep;
}

int SpectrumReport::kernel_multiplicity(double tol) const {
  for (const auto& l : lines)
    if (std::abs(l.value) <= tol) return l.multiplicity;
  return 0;
}

bool SpectrumReport::is_symmetric(double tol) const {
  const std::size_t n = lines.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lo = lines[i];
    const auto& hi = lines[n - 1 - i];
    if (std::abs(lo.value + hi.value) > tol * (1.0 + std::abs(lo.value)))
      return false;
    if (lo.multiplicity != hi.multiplicity) return false;
  }
  return true;
}

bool same_spectrum(const SpectrumReport& a, const SpectrumReport& b,
                   double tol) {
  if (a.lines.size() != b.lines.size()) return false;
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    if (std::abs(a.lines[i].value - b.lines[i].value) >
        tol * (1.0 + std::abs(a.lines[i].value)))
      return false;
    if (a.lines[i].multiplicity != b.lines[i].multiplicity) return false;
  }
  return true;
}

EighResult eigh(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols())
    throw NotHermitianError("eigh: matrix is not square");
  const double dev = max_abs(ComplexMatrix(h - h.adjoint()));
  if (dev > tol)
    throw NotHermitianError("eigh: ||h - h^dagger||_max = " +
                            std::to_string(dev));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw Error("eigh: eigensolver failed to converge");
  EighResult res;
  res.eigenvalues = solver.eigenvalues();
  res.eigenvectors = solver.eigenvectors();
  std::vector<double> vals(res.eigenvalues.data(),
                           res.eigenvalues.data() + res.eigenvalues.size());
  res.spectrum = SpectrumReport::from_eigenvalues(std::move(vals));
  return res;
}

AntiUnitaryOp::AntiUnitaryOp(ComplexMatrix c, double tol)
    : linear_part(std::move(c)) {
  if (linear_part.rows() != linear_part.cols())
    throw NotUnitaryError("AntiUnitaryOp: linear part is not square");
  if (!is_unitary(linear_part, tol))
    throw NotUnitaryError("AntiUnitaryOp: linear part is not unitary");
}

ComplexVector AntiUnitaryOp::apply(const ComplexVector& v) const {
  if (v.size() != linear_part.cols())
    throw DimensionMismatchError("AntiUnitaryOp::apply: dimension mismatch");
  return linear_part * v.conjugate();
}

ComplexMatrix AntiUnitaryOp::conjugate(const ComplexMatrix& m) const {
  if (m.rows() != linear_part.rows() || m.cols() != linear_part.cols())
    throw DimensionMismatchError(
        "AntiUnitaryOp::conjugate: dimension mismatch");
  return linear_part * m.conjugate() * linear_part.adjoint();
}

ComplexMatrix AntiUnitaryOp::compose_linear(const AntiUnitaryOp& a,
                                            const AntiUnitaryOp& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("AntiUnitaryOp composition mismatch");
  return a.linear_part * b.linear_part.conjugate();
}

AntiUnitaryOp kron(const AntiUnitaryOp& a, const AntiUnitaryOp& b) {
  return AntiUnitaryOp(kron(a.linear_part, b.linear_part));
}

}  // namespace rst
