#include <doctest.h>

#include "rst/clifford.hpp"
#include "test_helpers.hpp"

using namespace rst;

namespace {
const Complex I(0.0, 1.0);

std::vector<GammaRep> all_reps_up_to(int nmax) {
  std::vector<GammaRep> reps;
  for (int n = 1; n <= nmax; ++n) {
    if (n % 2 == 0) {
      reps.push_back(build_gamma_rep(n));
    } else {
      reps.push_back(build_gamma_rep(n, 1));
      reps.push_back(build_gamma_rep(n, -1));
    }
  }
  return reps;
}
}  // namespace

TEST_CASE("gamma sets satisfy the Clifford relations up to n = 8") {
  for (const auto& rep : all_reps_up_to(8)) {
    CAPTURE(rep.n);
    CHECK(clifford_violation(rep.matrices) <= kTolAlg);
    CHECK(rep.spinor_dim() == 1 << (rep.n / 2));
    // first m imaginary, next m real, the last odd one imaginary
    const int m = rep.n / 2;
    for (int mu = 0; mu < m; ++mu)
      CHECK(rep.matrices[mu].real().cwiseAbs().maxCoeff() == 0.0);
    for (int mu = m; mu < 2 * m; ++mu)
      CHECK(rep.matrices[mu].imag().cwiseAbs().maxCoeff() == 0.0);
    if (!rep.is_even())
      CHECK(rep.matrices.back().real().cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("low-dimensional gamma examples") {
  const GammaRep g1 = build_gamma_rep(1, 1);
  REQUIRE(g1.matrices.size() == 1);
  CHECK(std::abs(g1.matrices[0](0, 0) - I) == 0.0);

  const GammaRep g2 = build_gamma_rep(2);
  CHECK(max_abs(ComplexMatrix(g2.matrices[0] - I * pauli(1))) == 0.0);
  CHECK(max_abs(ComplexMatrix(g2.matrices[1] - I * pauli(2))) == 0.0);

  const GammaRep g3m = build_gamma_rep(3, -1);
  CHECK(max_abs(ComplexMatrix(g3m.matrices[2] + I * pauli(3))) == 0.0);
  // gamma^3 = -i * i^(1 mod 2) * gamma^1 gamma^2 evaluated by hand
  const ComplexMatrix rhs = -I * I * g3m.matrices[0] * g3m.matrices[1];
  CHECK(max_abs(ComplexMatrix(g3m.matrices[2] - rhs)) <= kTolAlg);
}

TEST_CASE("last odd gamma is the signed scaled product of the even ones") {
  for (int m = 1; m <= 3; ++m) {
    const int n = 2 * m + 1;
    const GammaRep even = build_gamma_rep(n - 1);
    ComplexMatrix prod = identity(even.spinor_dim());
    for (const auto& g : even.matrices) prod = prod * g;
    const Complex phase = I * std::pow(I, m % 2);
    for (int sign : {1, -1}) {
      const GammaRep rep = build_gamma_rep(n, sign);
      CHECK(max_abs(ComplexMatrix(rep.matrices.back() -
                                  static_cast<double>(sign) * phase * prod)) <=
            kTolAlg);
    }
  }
}

TEST_CASE("chirality equals alpha_n gamma^1...gamma^n up to n = 8") {
  for (const auto& rep : all_reps_up_to(8)) {
    const Chirality chi = chirality_of(rep.n, rep.sign);
    ComplexMatrix prod = identity(rep.spinor_dim());
    for (const auto& g : rep.matrices) prod = prod * g;
    CHECK(max_abs(ComplexMatrix(chi.matrix - chi.alpha * prod)) <= kTolAlg);
    if (rep.is_even()) {
      CHECK(is_hermitian(chi.matrix));
      CHECK(max_abs(ComplexMatrix(chi.matrix * chi.matrix -
                                  identity(rep.spinor_dim()))) <= kTolAlg);
      for (const auto& g : rep.matrices)
        CHECK(max_abs(ComplexMatrix(chi.matrix * g + g * chi.matrix)) <=
              kTolAlg);
    }
  }
}

TEST_CASE("chirality examples") {
  const Chirality c2 = chirality_of(2);
  CHECK(max_abs(ComplexMatrix(c2.matrix - pauli(3))) == 0.0);
  CHECK(std::abs(c2.alpha - I) == 0.0);
  const Chirality c4 = chirality_of(4);
  CHECK(max_abs(ComplexMatrix(c4.matrix - kron(pauli(3), pauli(3)))) == 0.0);
  const Chirality c5 = chirality_of(5, -1);
  CHECK(max_abs(ComplexMatrix(c5.matrix + identity(4))) == 0.0);
}

TEST_CASE("classify_odd_rep round trips and is conjugation invariant") {
  CHECK(classify_odd_rep(build_gamma_rep(3, 1).matrices) == 1);
  CHECK(classify_odd_rep(build_gamma_rep(5, -1).matrices) == -1);
  CHECK(classify_odd_rep(build_gamma_rep(7, 1).matrices) == 1);

  std::mt19937 rng(11);
  const GammaRep g3 = build_gamma_rep(3, 1);
  const ComplexMatrix u = testing::random_unitary(rng, g3.spinor_dim());
  std::vector<ComplexMatrix> conj;
  for (const auto& g : g3.matrices) conj.push_back(u * g * u.adjoint());
  CHECK(classify_odd_rep(conj) == 1);
}

TEST_CASE("classify_odd_rep rejects reducible sets") {
  const GammaRep plus = build_gamma_rep(3, 1);
  const GammaRep minus = build_gamma_rep(3, -1);
  std::vector<ComplexMatrix> block;
  for (std::size_t i = 0; i < plus.matrices.size(); ++i) {
    ComplexMatrix b = ComplexMatrix::Zero(4, 4);
    b.block(0, 0, 2, 2) = plus.matrices[i];
    b.block(2, 2, 2, 2) = minus.matrices[i];
    block.push_back(b);
  }
  CHECK_THROWS_AS(classify_odd_rep(block), NotScalarError);
}

TEST_CASE("compose_reps sign law for n1 + n2 <= 7") {
  // the central element of the composed set evaluates to
  // alpha_{n1}^-1 alpha_{n2}^-1 sign, so the composed label is
  // sign * alpha_n / (alpha_{n1} alpha_{n2}), which equals sign except for
  // n_even = 2 and n_odd = 3 (mod 4) where it flips
  for (int n_even = 2; n_even <= 6; n_even += 2) {
    for (int n_odd = 1; n_even + n_odd <= 7; n_odd += 2) {
      const Complex phi = alpha_of(n_even + n_odd) /
                          (alpha_of(n_even) * alpha_of(n_odd));
      REQUIRE(std::abs(std::abs(phi.real()) - 1.0) <= kTolAlg);
      const int flip = phi.real() > 0 ? 1 : -1;
      CHECK(flip == ((n_even % 4 == 2 && n_odd % 4 == 3) ? -1 : 1));
      for (int sign : {1, -1}) {
        const GammaRep even = build_gamma_rep(n_even);
        const GammaRep odd = build_gamma_rep(n_odd, sign);
        const GammaRep eo =
            compose_reps(even, odd, ComposeScheme::EvenOdd);
        CHECK(clifford_violation(eo.matrices) <= kTolAlg);
        CHECK(classify_odd_rep(eo.matrices) == sign * flip);
        const GammaRep oe =
            compose_reps(odd, even, ComposeScheme::OddEven);
        CHECK(clifford_violation(oe.matrices) <= kTolAlg);
        CHECK(classify_odd_rep(oe.matrices) == sign * flip);
      }
    }
  }
}

TEST_CASE("odd-odd composition of two one-dimensional reps matches Gamma(2)") {
  const GammaRep a = build_gamma_rep(1, 1);
  const GammaRep oo = compose_reps(a, a, ComposeScheme::OddOdd);
  CHECK(oo.n == 2);
  CHECK(clifford_violation(oo.matrices) <= kTolAlg);
  const GammaRep g2 = build_gamma_rep(2);
  CHECK(trace_vectors_match(monomial_trace_vector(oo.matrices),
                            monomial_trace_vector(g2.matrices)));
}

TEST_CASE("odd-odd composed chirality is proportional to 1 x 1 x s3") {
  for (auto [s1, s2] : {std::pair{1, 1}, {1, -1}, {-1, 1}}) {
    const GammaRep g1 = build_gamma_rep(3, s1);
    const GammaRep g2 = build_gamma_rep(1, s2);
    const GammaRep oo = compose_reps(g1, g2, ComposeScheme::OddOdd);
    ComplexMatrix prod = identity(oo.spinor_dim());
    for (const auto& g : oo.matrices) prod = prod * g;
    const ComplexMatrix chi = alpha_of(oo.n) * prod;
    const ComplexMatrix target =
        kron(identity(g1.spinor_dim()), identity(g2.spinor_dim()), pauli(3));
    // scalar with chi = s * target, |s| = 1
    const Complex s = (target.adjoint() * chi).trace() /
                      static_cast<double>(chi.rows());
    CHECK(std::abs(std::abs(s) - 1.0) <= kTolNum);
    CHECK(max_abs(ComplexMatrix(chi - s * target)) <= kTolNum);
  }
}

TEST_CASE("the two even-even placements are unitarily equivalent") {
  const GammaRep g2 = build_gamma_rep(2);
  const GammaRep left = compose_reps(g2, g2, ComposeScheme::EvenEvenLeft);
  const GammaRep right = compose_reps(g2, g2, ComposeScheme::EvenEvenRight);
  CHECK(clifford_violation(left.matrices) <= kTolAlg);
  CHECK(clifford_violation(right.matrices) <= kTolAlg);
  CHECK(trace_vectors_match(monomial_trace_vector(left.matrices),
                            monomial_trace_vector(right.matrices)));
  // and both match the canonical dimension-4 set
  CHECK(trace_vectors_match(monomial_trace_vector(left.matrices),
                            monomial_trace_vector(build_gamma_rep(4).matrices)));
}

TEST_CASE("bad sign arguments are rejected") {
  CHECK_THROWS_AS(build_gamma_rep(3), BadSignError);
  CHECK_THROWS_AS(build_gamma_rep(2, 1), BadSignError);
  CHECK_THROWS_AS(chirality_of(5), BadSignError);
  CHECK_THROWS_AS(build_gamma_rep(14), CapExceededError);
  CHECK(build_gamma_rep(14, std::nullopt, 16).spinor_dim() == 128);
  const GammaRep g2 = build_gamma_rep(2);
  const GammaRep g1 = build_gamma_rep(1, 1);
  CHECK_THROWS_AS(compose_reps(g2, g2, ComposeScheme::OddOdd),
                  ParityMismatchError);
  CHECK_THROWS_AS(compose_reps(g1, g2, ComposeScheme::EvenOdd),
                  ParityMismatchError);
}
