#ifndef RST_TEST_HELPERS_HPP
#define RST_TEST_HELPERS_HPP

#include <random>

#include <Eigen/QR>

#include "rst/matrix.hpp"

namespace rst::testing {

inline ComplexMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, int n) {
  ComplexMatrix m = random_matrix(rng, n, n);
  return 0.5 * (m + m.adjoint());
}

inline ComplexMatrix random_unitary(std::mt19937& rng, int n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, n, n));
  ComplexMatrix q = qr.householderQ();
  return q;
}

// A graded factor with chi = diag(1_p, -1_q) and D = [[0, B], [B^+, 0]] of
// prescribed rank, so dim ker D = (p - rank) + (q - rank) with the chi split
// (p - rank, q - rank).
struct GradedFactor {
  ComplexMatrix D;
  ComplexMatrix chi;
  int k_plus = 0;
  int k_minus = 0;
};

inline GradedFactor random_graded_factor(std::mt19937& rng, int p, int q,
                                         int rank) {
  GradedFactor f;
  const int n = p + q;
  f.chi = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < p; ++i) f.chi(i, i) = 1.0;
  for (int i = p; i < n; ++i) f.chi(i, i) = -1.0;
  ComplexMatrix b = ComplexMatrix::Zero(p, q);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (int r = 0; r < rank; ++r) {
    ComplexMatrix u = random_matrix(rng, p, 1);
    ComplexMatrix v = random_matrix(rng, q, 1);
    b += (1.0 + std::abs(dist(rng))) * u * v.adjoint();
  }
  // a generic sum of `rank` rank-one terms has exactly that rank
  f.D = ComplexMatrix::Zero(n, n);
  f.D.block(0, p, p, q) = b;
  f.D.block(p, 0, q, p) = b.adjoint();
  f.k_plus = p - rank;
  f.k_minus = q - rank;
  return f;
}

}  // namespace rst::testing

#endif  // RST_TEST_HELPERS_HPP
