#pragma once

#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qsd/types.hpp"

namespace qsd {

class Rng;

/// Kronecker product, expression-friendly: kron(a, b)(i*br+k, j*bc+l) = a(i,j)*b(k,l).
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived()).eval();
}

struct HermEigen {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns, paired with eigenvalues
};

/// Eigendecomposition of a Hermitian matrix (checked within 1e-12 max-norm).
HermEigen herm_eig(const ComplexMatrix& a);

enum class Subsystem { System, Ancilla };

/// Trace out one factor of a (dim_s * dim_a)-dimensional bipartite operator.
ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index dim_s,
                            Eigen::Index dim_a, Subsystem keep);

struct Svd {
  ComplexMatrix u;
  RealVector singular_values;  // nonnegative, descending
  ComplexMatrix v;             // a = u * diag(s) * v^dag
};

Svd svd(const ComplexMatrix& a);

struct DetCofactors {
  double det;
  RealMatrix cofactors;  // cof(i,j) = (-1)^{i+j} * minor(i,j)
};

DetCofactors det_and_cofactors(const RealMatrix& m);

/// Solve a*x = b; throws SingularMatrix when pivoting finds no usable pivot.
RealVector solve(const RealMatrix& a, const RealVector& b);

/// 2-norm condition number; +infinity when the smallest singular value
/// underflows (below 1e-300).
double cond2(const RealMatrix& a);

/// Haar-like random unitary from the QR of a Ginibre matrix.
ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng);

}  // namespace qsd
