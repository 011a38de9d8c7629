#pragma once

#include <filesystem>

#include "qsd/linalg.hpp"
#include "qsd/states.hpp"
#include "qsd/types.hpp"

namespace qsd {

/// Hermitian observable. Units are dimensionless; spectra are computed on
/// demand (the operations are pure, nothing is cached).
class Observable {
 public:
  explicit Observable(ComplexMatrix m);

  /// O = c0 * I + c1 * sx + c2 * sy + c3 * sz (qubit coefficient form).
  static Observable from_pauli_coefficients(const Eigen::Vector4d& c);

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  HermEigen spectrum() const { return herm_eig(mat_); }

 private:
  ComplexMatrix mat_;
};

/// Time-independent Hamiltonian (hbar = 1, so time is 1/energy). The
/// eigensystem is computed once at construction; propagators reuse it.
class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix m);

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  const HermEigen& eigensystem() const { return eig_; }

 private:
  ComplexMatrix mat_;
  HermEigen eig_;
};

/// Two-qubit Hamiltonian with spectrum {4, 2, 1, 0}:
///   E1 = 4 : |+>|->            E2 = 2 : (|+>|+> + |->|+>)/sqrt(2)
///   E3 = 1 : |->|->            E4 = 0 : (|->|+> - |+>|+>)/sqrt(2)
/// where |+>, |-> are the sz eigenkets.
Hamiltonian hamiltonian_spectrum_4210();

/// Two-qubit coupling
///   H = (sx/sqrt(2)) (x) (cos(phi) sy + sin(phi) sz)
///     + I (x) [(sy - sx) sin(phi) + sz cos(phi)] / 2.
Hamiltonian hamiltonian_interaction(double phi);

/// phi with cos(2 phi) = 1/sqrt(3), the figures' operating point.
double interaction_phi_default();

/// Hermitian generator H with e^{-i H t} equal to the given unitary.
Hamiltonian hamiltonian_from_unitary(const ComplexMatrix& u, double t);

/// JSON file with fields dim, entries_re, entries_im (flat row-major).
Hamiltonian load_hamiltonian(const std::filesystem::path& path);

struct Propagator {
  double t;
  ComplexMatrix u;
};

/// U(t) = V e^{-i Lambda t} V^dag from the cached eigensystem.
Propagator propagator(const Hamiltonian& h, double t);

/// U(t) rho0 U(t)^dag.
DensityMatrix evolve(const DensityMatrix& rho0, const Hamiltonian& h, double t);

/// Re tr(rho O); the imaginary residue must stay below 1e-11.
double expectation(const DensityMatrix& rho, const Observable& o);

}  // namespace qsd
