#include "qsd/states.hpp"

#include <cmath>
#include <string>

#include "qsd/rng.hpp"

namespace qsd {

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  require_hermitian(mat_, "DensityMatrix");
  const Complex tr = mat_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::trace_one)
    throw ValidationError("DensityMatrix: trace differs from 1 by more than 1e-12");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues()(0);
  if (min_eig < tol::psd_floor)
    throw NotPositive("DensityMatrix: smallest eigenvalue " + std::to_string(min_eig) +
                      " is below the -1e-10 floor");
}

OperatorBasis pauli() {
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  return {2, {sx, sy, sz}};
}

OperatorBasis gell_mann(Eigen::Index n) {
  if (n < 2) throw DimensionMismatch("gell_mann: dimension must be >= 2");
  std::vector<ComplexMatrix> elems;
  elems.reserve(n * n - 1);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = m(k, j) = 1.0;
      elems.push_back(m);
    }
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = Complex(0, -1);
      m(k, j) = Complex(0, 1);
      elems.push_back(m);
    }
  for (Eigen::Index l = 1; l < n; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < l; ++i) m(i, i) = 1.0;
    m(l, l) = -static_cast<double>(l);
    m *= std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    elems.push_back(m);
  }
  return {n, std::move(elems)};
}

DensityMatrix density_from_coherence(const CoherenceVector& v) {
  const Eigen::Index n = v.dim;
  if (v.components.size() != n * n - 1)
    throw DimensionMismatch("density_from_coherence: need N^2 - 1 components");
  const OperatorBasis basis = (n == 2) ? pauli() : gell_mann(n);
  ComplexMatrix rho = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  for (Eigen::Index a = 0; a < v.components.size(); ++a)
    rho += 0.5 * v.components(a) * basis.elements[a];
  return DensityMatrix(std::move(rho));  // PSD checked by the constructor
}

CoherenceVector coherence_from_density(const DensityMatrix& rho) {
  const Eigen::Index n = rho.dim();
  const OperatorBasis basis = (n == 2) ? pauli() : gell_mann(n);
  RealVector r(n * n - 1);
  for (Eigen::Index a = 0; a < r.size(); ++a)
    r(a) = (rho.matrix() * basis.elements[a]).trace().real();
  return {n, std::move(r)};
}

DensityMatrix ancilla_state(const Eigen::Vector3d& lambda) {
  if (lambda.norm() > 1.0 + 1e-10)
    throw NotPositive("ancilla_state: Bloch vector longer than 1");
  CoherenceVector v{2, lambda};
  return density_from_coherence(v);
}

DensityMatrix product_state(const DensityMatrix& s, const DensityMatrix& a) {
  return DensityMatrix(kron(s.matrix(), a.matrix()));
}

DensityMatrix random_state(Eigen::Index dim, bool pure, std::uint64_t seed) {
  if (dim < 2) throw DimensionMismatch("random_state: dimension must be >= 2");
  Rng rng(seed);
  if (pure) {
    const ComplexVector psi = rng.complex_ket(dim);
    return DensityMatrix(psi * psi.adjoint());
  }
  const ComplexMatrix g = rng.ginibre(dim, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

}  // namespace qsd
