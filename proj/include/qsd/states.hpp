#pragma once

#include <cstdint>
#include <vector>

#include "qsd/linalg.hpp"
#include "qsd/types.hpp"

namespace qsd {

/// A validated quantum state: Hermitian, unit trace, positive semidefinite
/// up to the numerical floor. Data is stored exactly as given; validation
/// never alters it.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  double purity() const { return (mat_ * mat_).trace().real(); }
  bool is_pure() const { return std::abs(purity() - 1.0) <= tol::purity_pure; }

 private:
  ComplexMatrix mat_;
};

struct CoherenceVector {
  Eigen::Index dim;        // Hilbert-space dimension N
  RealVector components;   // length N^2 - 1
};

struct OperatorBasis {
  Eigen::Index dim;
  std::vector<ComplexMatrix> elements;  // traceless Hermitian, tr(Ta Tb) = 2 delta_ab
};

/// The three Pauli matrices, in the order x, y, z.
OperatorBasis pauli();

/// Generalized Gell-Mann basis for dimension n, normalized tr(Ta Tb) = 2 delta_ab.
/// Order is fixed: symmetric pairs (j<k lexicographic), antisymmetric pairs,
/// then diagonal elements; gell_mann(2) coincides with pauli().
OperatorBasis gell_mann(Eigen::Index n);

/// rho = I/N + (1/2) sum_a r_a T_a. Throws NotPositive for unphysical r.
DensityMatrix density_from_coherence(const CoherenceVector& v);

/// r_a = tr(rho T_a); exact inverse of density_from_coherence.
CoherenceVector coherence_from_density(const DensityMatrix& rho);

/// Qubit ancilla (1 + lambda . s) / 2 for a full Bloch vector lambda.
DensityMatrix ancilla_state(const Eigen::Vector3d& lambda);

/// rho_s (x) rho_a on the composite space.
DensityMatrix product_state(const DensityMatrix& s, const DensityMatrix& a);

/// Seeded random state: a Haar-like ket projector when pure, a Ginibre
/// mixture otherwise. Identical seeds give identical states.
DensityMatrix random_state(Eigen::Index dim, bool pure, std::uint64_t seed);

}  // namespace qsd
