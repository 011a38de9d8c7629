#include "qsd/linalg.hpp"

#include <cmath>
#include <limits>

#include "qsd/rng.hpp"

namespace qsd {

HermEigen herm_eig(const ComplexMatrix& a) {
  require_hermitian(a, "herm_eig");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("herm_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index dim_s,
                            Eigen::Index dim_a, Subsystem keep) {
  if (dim_s < 1 || dim_a < 1 || m.rows() != m.cols() || m.rows() != dim_s * dim_a)
    throw DimensionMismatch("partial_trace: matrix dimension is not dim_s * dim_a");
  if (keep == Subsystem::System) {
    ComplexMatrix out(dim_s, dim_s);
    for (Eigen::Index i = 0; i < dim_s; ++i)
      for (Eigen::Index j = 0; j < dim_s; ++j)
        out(i, j) = m.block(i * dim_a, j * dim_a, dim_a, dim_a).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
  for (Eigen::Index i = 0; i < dim_s; ++i)
    out += m.block(i * dim_a, i * dim_a, dim_a, dim_a);
  return out;
}

Svd svd(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("svd: solver did not converge");
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

DetCofactors det_and_cofactors(const RealMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n < 1 || n > 16)
    throw DimensionMismatch("det_and_cofactors: need a square matrix, n <= 16");
  if (n == 1) return {m(0, 0), RealMatrix::Ones(1, 1)};

  RealMatrix cof(n, n);
  RealMatrix minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      cof(i, j) = sign * minor.determinant();
    }
  }
  return {m.determinant(), cof};
}

RealVector solve(const RealMatrix& a, const RealVector& b) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("solve: matrix is not square");
  if (a.rows() != b.size())
    throw DimensionMismatch("solve: right-hand side length does not match");
  Eigen::FullPivLU<RealMatrix> lu(a);
  if (!lu.isInvertible())
    throw SingularMatrix("solve: no usable pivot, matrix is singular");
  return lu.solve(b);
}

double cond2(const RealMatrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("cond2: matrix is not square");
  Eigen::JacobiSVD<RealMatrix> solver(a);
  const RealVector& s = solver.singularValues();
  const double smin = s(s.size() - 1);
  if (smin < 1e-300) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix g = rng.ginibre(dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity so the distribution is Haar
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  return q;
}

}  // namespace qsd
