#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qsd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Central tolerance table. Every numerical gate in the library refers to one
// of these constants; scenario files may override the scan-level ones only.
namespace tol {
inline constexpr double hermiticity = 1e-12;      // max-norm ||A - A^dag||
inline constexpr double trace_one = 1e-12;        // |tr(rho) - 1|
inline constexpr double psd_floor = -1e-10;       // smallest admissible eigenvalue
inline constexpr double purity_pure = 1e-8;       // |tr(rho^2) - 1| for "pure"
inline constexpr double unitarity = 1e-11;        // ||U^dag U - I||
inline constexpr double spectrum_gap = 1e-8;      // nondegeneracy of observables
inline constexpr double entropy_eig_cut = 1e-14;  // eigenvalues excluded from -x log x
inline constexpr double schmidt_zero = 1e-10;     // Schmidt weight treated as zero
inline constexpr double singular_rel = 1e-12;     // |det| / ||Omega||_F singularity gate
inline constexpr double probe_floor = 1e-3;       // smallest probe amplitude tried
inline constexpr double fd_step = 1e-5;           // default time step for dOmega/dt
inline constexpr double zero_prefilter = 1e-6;    // entropy minimum worth refining
inline constexpr double zero_accept = 1e-10;      // refined entropy counted as a zero
inline constexpr double zero_refine = 1e-9;       // |t*| accuracy of refinement
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct NotPure : Error { using Error::Error; };
struct DegenerateSpectrum : Error { using Error::Error; };
struct ProductState : Error { using Error::Error; };
struct NonHermitianObservable : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

inline double hermiticity_defect(const ComplexMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline void require_hermitian(const ComplexMatrix& a, const std::string& what) {
  if (a.rows() != a.cols())
    throw DimensionMismatch(what + ": matrix is not square");
  if (hermiticity_defect(a) > tol::hermiticity)
    throw NotHermitian(what + ": matrix is not Hermitian within 1e-12");
}

}  // namespace qsd
