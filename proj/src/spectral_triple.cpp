#include "rst/spectral_triple.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>

namespace rst {

namespace {

ComplexMatrix probe_restrict(const RealSpectralTriple& t,
                             const ComplexMatrix& x) {
  if (!t.probe_subspace) return x;
  return (*t.probe_subspace) * x * (*t.probe_subspace);
}

}  // namespace

const ComplexMatrix* RealSpectralTriple::find_gen(
    const std::string& label) const {
  for (const auto& g : algebra)
    if (g.label == label) return &g.rep;
  return nullptr;
}

ComplexMatrix RealSpectralTriple::opposite(const ComplexMatrix& b) const {
  return J.conjugate(b.adjoint());
}

void validate_triple(const RealSpectralTriple& t) {
  const int n = t.hilbert_dim;
  if (n < 1) throw InvariantViolationError("triple: hilbert_dim must be >= 1");
  if (t.D.rows() != n || t.D.cols() != n)
    throw InvariantViolationError("triple: D has wrong dimensions");
  if (!all_finite(t.D))
    throw InvariantViolationError("triple: D has non-finite entries");
  if (!is_hermitian(t.D))
    throw InvariantViolationError("triple: D is not Hermitian");
  if (t.J.dim() != n)
    throw InvariantViolationError("triple: J has wrong dimensions");

  for (const auto& g : t.algebra) {
    if (g.rep.rows() != n || g.rep.cols() != n)
      throw InvariantViolationError("triple: generator " + g.label +
                                    " has wrong dimensions");
    if (!all_finite(g.rep))
      throw InvariantViolationError("triple: generator " + g.label +
                                    " has non-finite entries");
  }

  if (t.probe_subspace) {
    if (t.probe_subspace->rows() != n || t.probe_subspace->cols() != n)
      throw InvariantViolationError("triple: probe has wrong dimensions");
    if (!is_projection(*t.probe_subspace))
      throw InvariantViolationError("triple: probe is not a projection");
  }

  if (t.chi) {
    const ComplexMatrix& chi = *t.chi;
    if (chi.rows() != n || chi.cols() != n)
      throw InvariantViolationError("triple: chi has wrong dimensions");
    if (!is_hermitian(chi))
      throw InvariantViolationError("triple: chi is not Hermitian");
    if (max_abs(ComplexMatrix(chi * chi - identity(n))) > kTolAlg)
      throw InvariantViolationError("triple: chi^2 != id");
    if (max_abs(ComplexMatrix(chi - identity(n))) <= kTolAlg ||
        max_abs(ComplexMatrix(chi + identity(n))) <= kTolAlg)
      throw InvariantViolationError("triple: chi = +-id is not a grading");
    for (const auto& g : t.algebra) {
      if (max_abs(probe_restrict(t, chi * g.rep - g.rep * chi)) > kTolAlg)
        throw InvariantViolationError("triple: [chi, " + g.label + "] != 0");
    }
    if (max_abs(probe_restrict(t, chi * t.D + t.D * chi)) > kTolAlg)
      throw InvariantViolationError("triple: {chi, D} != 0");
  }

  // unitality: the identity must lie in the span of the generators; solved
  // through the small Gram system to avoid vectorizing n^2 x m data
  if (t.algebra.empty())
    throw InvariantViolationError("triple: empty algebra");
  {
    const Eigen::Index m = static_cast<Eigen::Index>(t.algebra.size());
    ComplexMatrix gram(m, m);
    ComplexVector rhs(m);
    for (Eigen::Index k = 0; k < m; ++k) {
      for (Eigen::Index l = 0; l < m; ++l)
        gram(k, l) =
            (t.algebra[k].rep.adjoint() * t.algebra[l].rep).trace();
      rhs(k) = std::conj(t.algebra[k].rep.trace());
    }
    const ComplexVector coeffs =
        gram.completeOrthogonalDecomposition().solve(rhs);
    // ||sum c_k g_k - 1||_F^2 = c^H G c - 2 Re(c^H b) + n; a genuine failure
    // puts the identity at distance >= O(1) from the span
    const double res2 = std::real((coeffs.adjoint() * gram * coeffs)(0, 0)) -
                        2.0 * std::real((coeffs.adjoint() * rhs)(0, 0)) +
                        static_cast<double>(n);
    if (res2 > kTolNum * n)
      throw InvariantViolationError(
          "triple: identity not in the span of the algebra generators");
  }
}

CheckReport check_zero_order(const RealSpectralTriple& t, double tol) {
  double worst = 0.0;
  for (const auto& a : t.algebra) {
    for (const auto& b : t.algebra) {
      const ComplexMatrix bo = t.opposite(b.rep);
      const ComplexMatrix comm = a.rep * bo - bo * a.rep;
      worst = std::max(worst, max_abs(probe_restrict(t, comm)));
    }
  }
  return {worst <= tol, worst, "zero-order [a, Jb*J^-1] = 0"};
}

CheckReport check_first_order(const RealSpectralTriple& t, double tol) {
  double worst = 0.0;
  std::vector<ComplexMatrix> dcomms;
  dcomms.reserve(t.algebra.size());
  for (const auto& a : t.algebra)
    dcomms.push_back(t.D * a.rep - a.rep * t.D);
  for (std::size_t i = 0; i < t.algebra.size(); ++i) {
    for (const auto& b : t.algebra) {
      const ComplexMatrix bo = t.opposite(b.rep);
      const ComplexMatrix comm = dcomms[i] * bo - bo * dcomms[i];
      worst = std::max(worst, max_abs(probe_restrict(t, comm)));
    }
  }
  return {worst <= tol, worst, "first-order [[D,a], Jb*J^-1] = 0"};
}

std::pair<CheckReport, std::optional<KOSignature>> check_reality(
    const RealSpectralTriple& t, double tol) {
  try {
    const KOSignature sig =
        signature_of(t.J, t.D, t.chi ? &*t.chi : nullptr, tol);
    if (t.claimed_label) {
      const KOLabel found = ko_label(sig);
      if (!(found == *t.claimed_label)) {
        return {{false, 1.0,
                 "reality: recomputed label " + found.str() +
                     " != claimed " + t.claimed_label->str()},
                sig};
      }
    }
    return {{true, 0.0, "reality J^2, JD, Jchi signs"}, sig};
  } catch (const NotASignatureError& e) {
    return {{false, 1.0, std::string("reality: ") + e.what()}, std::nullopt};
  }
}

CheckReport check_dimension_spectrum_additivity(const RealSpectralTriple& t1,
                                                const RealSpectralTriple& t2,
                                                const RealSpectralTriple& prod,
                                                double tol) {
  const bool oo = !t1.is_even() && !t2.is_even();
  const Eigen::Index expected =
      t1.D.rows() * t2.D.rows() * (oo ? 2 : 1);
  if (prod.D.rows() != expected)
    throw DimensionMismatchError(
        "check_dimension_spectrum_additivity: product dimension mismatch");

  const EighResult e1 = eigh(t1.D);
  const EighResult e2 = eigh(t2.D);
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(expected));
  for (Eigen::Index i = 0; i < e1.eigenvalues.size(); ++i)
    for (Eigen::Index j = 0; j < e2.eigenvalues.size(); ++j) {
      const double s = e1.eigenvalues[i] * e1.eigenvalues[i] +
                       e2.eigenvalues[j] * e2.eigenvalues[j];
      sums.push_back(s);
      if (oo) sums.push_back(s);  // the C^2 doubling
    }
  const SpectrumReport want = SpectrumReport::from_eigenvalues(sums, tol);

  const EighResult ep = eigh(prod.D);
  std::vector<double> squares;
  squares.reserve(static_cast<std::size_t>(ep.eigenvalues.size()));
  for (Eigen::Index i = 0; i < ep.eigenvalues.size(); ++i)
    squares.push_back(ep.eigenvalues[i] * ep.eigenvalues[i]);
  const SpectrumReport got = SpectrumReport::from_eigenvalues(squares, tol);

  // report the worst per-cluster discrepancy
  double worst = 0.0;
  bool ok = want.lines.size() == got.lines.size();
  if (ok) {
    for (std::size_t i = 0; i < want.lines.size(); ++i) {
      worst = std::max(worst,
                       std::abs(want.lines[i].value - got.lines[i].value));
      if (want.lines[i].multiplicity != got.lines[i].multiplicity) ok = false;
    }
  } else {
    worst = 1.0;
  }
  ok = ok && same_spectrum(want, got, tol);
  return {ok, worst, "dimension: spec(D^2) additivity"};
}

}  // namespace rst
