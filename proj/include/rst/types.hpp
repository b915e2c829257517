#ifndef RST_TYPES_HPP
#define RST_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rst {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Structural identities built from exact +-1 / +-i entries hold to machine
// precision; eigensolver-mediated quantities do not. Spectrum clustering is
// the coarsest of the three.
inline constexpr double kTolAlg = 1e-12;
inline constexpr double kTolNum = 1e-9;
inline constexpr double kTolSpec = 1e-8;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RST_DEFINE_ERROR(Name)       \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

RST_DEFINE_ERROR(NotHermitianError);
RST_DEFINE_ERROR(NotUnitaryError);
RST_DEFINE_ERROR(DimensionMismatchError);
RST_DEFINE_ERROR(BadSignError);
RST_DEFINE_ERROR(NoSuchJError);
RST_DEFINE_ERROR(NotASignatureError);
RST_DEFINE_ERROR(NotScalarError);
RST_DEFINE_ERROR(ParityMismatchError);
RST_DEFINE_ERROR(ParityRecipeMismatchError);
RST_DEFINE_ERROR(NoTableEntryError);
RST_DEFINE_ERROR(CapExceededError);
RST_DEFINE_ERROR(ParseError);
RST_DEFINE_ERROR(InvariantViolationError);
RST_DEFINE_ERROR(DegreeZeroError);
RST_DEFINE_ERROR(MissingKernelSplitError);
RST_DEFINE_ERROR(AsymmetricSpectrumError);
RST_DEFINE_ERROR(WrongDimensionError);

#undef RST_DEFINE_ERROR

}  // namespace rst

#endif  // RST_TYPES_HPP
