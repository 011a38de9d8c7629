#include "qsd/dynamics.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace qsd {

Observable::Observable(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols())
    throw DimensionMismatch("Observable: matrix is not square");
  if (hermiticity_defect(mat_) > tol::hermiticity)
    throw NonHermitianObservable("Observable: matrix is not Hermitian within 1e-12");
}

Observable Observable::from_pauli_coefficients(const Eigen::Vector4d& c) {
  const OperatorBasis sigma = pauli();
  ComplexMatrix m = c(0) * ComplexMatrix::Identity(2, 2);
  for (int i = 0; i < 3; ++i) m += c(i + 1) * sigma.elements[i];
  return Observable(std::move(m));
}

Hamiltonian::Hamiltonian(ComplexMatrix m) : mat_(std::move(m)) {
  require_hermitian(mat_, "Hamiltonian");
  eig_ = herm_eig(mat_);
}

Hamiltonian hamiltonian_spectrum_4210() {
  const ComplexVector plus = (ComplexVector(2) << 1, 0).finished();
  const ComplexVector minus = (ComplexVector(2) << 0, 1).finished();
  const ComplexVector e1 = kron(plus, minus);
  const ComplexVector e2 = (kron(plus, plus) + kron(minus, plus)) / std::sqrt(2.0);
  const ComplexVector e3 = kron(minus, minus);
  const ComplexVector e4 = (kron(minus, plus) - kron(plus, plus)) / std::sqrt(2.0);
  ComplexMatrix h = 4.0 * e1 * e1.adjoint() + 2.0 * e2 * e2.adjoint() +
                    1.0 * e3 * e3.adjoint();
  (void)e4;  // zero eigenvalue contributes nothing to the spectral sum
  return Hamiltonian(std::move(h));
}

Hamiltonian hamiltonian_interaction(double phi) {
  const OperatorBasis sigma = pauli();
  const ComplexMatrix& sx = sigma.elements[0];
  const ComplexMatrix& sy = sigma.elements[1];
  const ComplexMatrix& sz = sigma.elements[2];
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  ComplexMatrix h = kron((sx / std::sqrt(2.0)).eval(), (c * sy + s * sz).eval()) +
                    kron(id, (0.5 * ((sy - sx) * s + sz * c)).eval());
  return Hamiltonian(std::move(h));
}

double interaction_phi_default() {
  return 0.5 * std::acos(1.0 / std::sqrt(3.0));
}

Hamiltonian hamiltonian_from_unitary(const ComplexMatrix& u, double t) {
  if (u.rows() != u.cols())
    throw DimensionMismatch("hamiltonian_from_unitary: matrix is not square");
  if (t == 0.0)
    throw ValidationError("hamiltonian_from_unitary: t must be nonzero");
  if ((u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()))
          .cwiseAbs()
          .maxCoeff() > tol::unitarity)
    throw ValidationError("hamiltonian_from_unitary: input is not unitary");
  // A unitary is normal, so its Schur form is diagonal and the Schur basis
  // is an orthonormal eigenbasis.
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  if (schur.info() != Eigen::Success)
    throw ConvergenceFailure("hamiltonian_from_unitary: Schur decomposition failed");
  const ComplexMatrix& q = schur.matrixU();
  RealVector energies(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    energies(i) = -std::arg(schur.matrixT()(i, i)) / t;
  ComplexMatrix h = q * energies.asDiagonal() * q.adjoint();
  h = 0.5 * (h + h.adjoint().eval());
  return Hamiltonian(std::move(h));
}

Hamiltonian load_hamiltonian(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("load_hamiltonian: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("load_hamiltonian: " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries_re") ||
      !j.contains("entries_im"))
    throw ParseError("load_hamiltonian: need fields dim, entries_re, entries_im");
  const Eigen::Index dim = j["dim"].get<Eigen::Index>();
  const auto re = j["entries_re"].get<std::vector<double>>();
  const auto im = j["entries_im"].get<std::vector<double>>();
  if (dim < 1 || static_cast<Eigen::Index>(re.size()) != dim * dim ||
      static_cast<Eigen::Index>(im.size()) != dim * dim)
    throw ParseError("load_hamiltonian: entry arrays must have dim^2 elements");
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index k = 0; k < dim; ++k)
      m(i, k) = Complex(re[i * dim + k], im[i * dim + k]);
  return Hamiltonian(std::move(m));  // rejects non-Hermitian input
}

Propagator propagator(const Hamiltonian& h, double t) {
  if (!std::isfinite(t))
    throw ValidationError("propagator: time must be finite");
  if (t == 0.0) return {0.0, ComplexMatrix::Identity(h.dim(), h.dim())};
  const HermEigen& eig = h.eigensystem();
  ComplexVector phases(h.dim());
  for (Eigen::Index i = 0; i < h.dim(); ++i)
    phases(i) = std::exp(Complex(0.0, -eig.eigenvalues(i) * t));
  ComplexMatrix u = eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
  return {t, std::move(u)};
}

DensityMatrix evolve(const DensityMatrix& rho0, const Hamiltonian& h, double t) {
  if (rho0.dim() != h.dim())
    throw DimensionMismatch("evolve: state and Hamiltonian dimensions differ");
  const Propagator p = propagator(h, t);
  return DensityMatrix(p.u * rho0.matrix() * p.u.adjoint());
}

double expectation(const DensityMatrix& rho, const Observable& o) {
  if (rho.dim() != o.dim())
    throw DimensionMismatch("expectation: state and observable dimensions differ");
  const Complex value = (rho.matrix() * o.matrix()).trace();
  if (std::abs(value.imag()) > 1e-11)
    throw ValidationError("expectation: imaginary residue exceeds 1e-11");
  return value.real();
}

}  // namespace qsd
