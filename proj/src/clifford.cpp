#include "rst/clifford.hpp"

#include <cmath>

namespace rst {

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix pauli_chain(int slots, int special_pos, int special) {
  // s3 x ... x s3 x sigma_special x 1 x ... x 1 with the special factor at
  // position special_pos (0-based from the left); slots factors total.
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int p = 0; p < slots; ++p) {
    int which = p < special_pos ? 3 : (p == special_pos ? special : 0);
    out = kron(out, pauli(which));
  }
  return out;
}

}  // namespace

ComplexMatrix pauli(int i) {
  ComplexMatrix m(2, 2);
  switch (i) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw Error("pauli: index out of range");
  }
  return m;
}

Complex alpha_of(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return Complex(1, 0);
    case 1:
      return Complex(0, -1);
    case 2:
      return Complex(0, 1);
    default:
      return Complex(1, 0);
  }
}

GammaRep build_gamma_rep(int n, std::optional<int> sign, int n_cap) {
  if (n < 1) throw Error("build_gamma_rep: n must be positive");
  if (n > n_cap)
    throw CapExceededError("build_gamma_rep: n = " + std::to_string(n) +
                           " exceeds the cap " + std::to_string(n_cap));
  const bool odd = n % 2 == 1;
  if (odd && !sign)
    throw BadSignError("build_gamma_rep: odd n requires a sign");
  if (!odd && sign)
    throw BadSignError("build_gamma_rep: even n admits no sign");
  if (sign && *sign != 1 && *sign != -1)
    throw BadSignError("build_gamma_rep: sign must be +1 or -1");

  GammaRep rep;
  rep.n = n;
  rep.sign = sign;
  const int m = n / 2;

  if (n == 1) {
    ComplexMatrix g(1, 1);
    g(0, 0) = Complex(0, static_cast<double>(*sign));
    rep.matrices.push_back(g);
    return rep;
  }

  // first m imaginary (i * real), next m real (i * sigma_2 chain)
  for (int j = 1; j <= m; ++j)
    rep.matrices.push_back(kI * pauli_chain(m, m - j, 1));
  for (int j = 1; j <= m; ++j)
    rep.matrices.push_back(kI * pauli_chain(m, m - j, 2));
  if (odd) {
    ComplexMatrix last = ComplexMatrix::Identity(1, 1);
    for (int p = 0; p < m; ++p) last = kron(last, pauli(3));
    rep.matrices.push_back(Complex(0, static_cast<double>(*sign)) * last);
  }
  return rep;
}

Chirality chirality_of(int n, std::optional<int> sign) {
  if (n < 1) throw Error("chirality_of: n must be positive");
  const bool odd = n % 2 == 1;
  if (odd && !sign) throw BadSignError("chirality_of: odd n requires a sign");
  if (!odd && sign) throw BadSignError("chirality_of: even n admits no sign");

  Chirality chi;
  chi.n = n;
  chi.alpha = alpha_of(n);
  if (odd) {
    const int dim = 1 << (n / 2);
    chi.matrix = static_cast<double>(*sign) * identity(dim);
  } else {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int p = 0; p < n / 2; ++p) out = kron(out, pauli(3));
    chi.matrix = out;
  }
  return chi;
}

double clifford_violation(const std::vector<ComplexMatrix>& gammas) {
  double worst = 0.0;
  const int n = static_cast<int>(gammas.size());
  for (int mu = 0; mu < n; ++mu) {
    const ComplexMatrix& g = gammas[mu];
    worst = std::max(worst, max_abs(ComplexMatrix(g + g.adjoint())));
    for (int nu = mu; nu < n; ++nu) {
      ComplexMatrix anti = g * gammas[nu] + gammas[nu] * g;
      if (nu == mu) anti += 2.0 * identity(static_cast<int>(g.rows()));
      worst = std::max(worst, max_abs(anti));
    }
  }
  return worst;
}

int classify_odd_rep(const std::vector<ComplexMatrix>& gammas, double tol) {
  if (gammas.empty() || gammas.size() % 2 == 0)
    throw Error("classify_odd_rep: need an odd number of matrices");
  const int n = static_cast<int>(gammas.size());
  const int dim = static_cast<int>(gammas[0].rows());
  ComplexMatrix prod = identity(dim);
  for (const auto& g : gammas) prod = prod * g;
  const Complex s = prod.trace() / static_cast<double>(dim);
  if (max_abs(ComplexMatrix(prod - s * identity(dim))) > tol)
    throw NotScalarError(
        "classify_odd_rep: gamma^1...gamma^n is not a scalar");
  // chi_(n,+-) = +-1 = alpha_n * (scalar), so the label is alpha_n * s
  const Complex label = alpha_of(n) * s;
  if (std::abs(label - Complex(1, 0)) <= kTolNum) return 1;
  if (std::abs(label + Complex(1, 0)) <= kTolNum) return -1;
  throw NotScalarError("classify_odd_rep: central scalar is not +-alpha_n^-1");
}

GammaRep compose_reps(const GammaRep& g1, const GammaRep& g2,
                      ComposeScheme s) {
  const bool e1 = g1.is_even(), e2 = g2.is_even();
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw ParityMismatchError(what);
  };
  GammaRep out;
  out.n = g1.n + g2.n;
  const ComplexMatrix id1 = identity(g1.spinor_dim());
  const ComplexMatrix id2 = identity(g2.spinor_dim());

  switch (s) {
    case ComposeScheme::EvenOdd:
    case ComposeScheme::EvenEvenLeft: {
      if (s == ComposeScheme::EvenOdd)
        require(e1 && !e2, "compose_reps: EvenOdd needs (even, odd)");
      else
        require(e1 && e2, "compose_reps: EvenEvenLeft needs (even, even)");
      const ComplexMatrix chi1 = chirality_of(g1.n).matrix;
      for (const auto& g : g1.matrices) out.matrices.push_back(kron(g, id2));
      for (const auto& g : g2.matrices) out.matrices.push_back(kron(chi1, g));
      if (out.n % 2 == 1) out.sign = classify_odd_rep(out.matrices);
      break;
    }
    case ComposeScheme::OddEven:
    case ComposeScheme::EvenEvenRight: {
      if (s == ComposeScheme::OddEven)
        require(!e1 && e2, "compose_reps: OddEven needs (odd, even)");
      else
        require(e1 && e2, "compose_reps: EvenEvenRight needs (even, even)");
      const ComplexMatrix chi2 = chirality_of(g2.n).matrix;
      for (const auto& g : g2.matrices) out.matrices.push_back(kron(id1, g));
      for (const auto& g : g1.matrices) out.matrices.push_back(kron(g, chi2));
      if (out.n % 2 == 1) out.sign = classify_odd_rep(out.matrices);
      break;
    }
    case ComposeScheme::OddOdd: {
      require(!e1 && !e2, "compose_reps: OddOdd needs (odd, odd)");
      for (const auto& g : g1.matrices)
        out.matrices.push_back(kron(g, id2, pauli(1)));
      for (const auto& g : g2.matrices)
        out.matrices.push_back(kron(id1, g, pauli(2)));
      out.sign = std::nullopt;
      break;
    }
  }
  return out;
}

std::vector<Complex> monomial_trace_vector(
    const std::vector<ComplexMatrix>& gammas) {
  const int n = static_cast<int>(gammas.size());
  if (n > 20) throw Error("monomial_trace_vector: too many generators");
  const int dim = gammas.empty() ? 1 : static_cast<int>(gammas[0].rows());
  std::vector<Complex> traces;
  traces.reserve(std::size_t{1} << n);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    ComplexMatrix prod = identity(dim);
    for (int mu = 0; mu < n; ++mu)
      if (mask & (1ul << mu)) prod = prod * gammas[mu];
    traces.push_back(prod.trace());
  }
  return traces;
}

bool trace_vectors_match(const std::vector<Complex>& a,
                         const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace rst
