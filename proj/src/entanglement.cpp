#include "qsd/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace qsd {

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

namespace {

double von_neumann_bits(const ComplexMatrix& reduced) {
  const HermEigen eig = herm_eig(reduced);
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lam = eig.eigenvalues(i);
    if (lam > tol::entropy_eig_cut) s -= lam * std::log2(lam);
  }
  return s;
}

ComplexMatrix spin_flip_matrix() {
  const OperatorBasis sigma = pauli();
  return kron(sigma.elements[1], sigma.elements[1]);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  const HermEigen eig = herm_eig(a);
  RealVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < roots.size(); ++i)
    roots(i) = std::sqrt(std::max(0.0, eig.eigenvalues(i)));
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

double entropy_pure(const DensityMatrix& rho_total, Eigen::Index dim_s,
                    Eigen::Index dim_a) {
  if (rho_total.dim() != dim_s * dim_a)
    throw DimensionMismatch("entropy_pure: state dimension is not dim_s * dim_a");
  if (std::abs(rho_total.purity() - 1.0) > tol::purity_pure)
    throw NotPure("entropy_pure: total state is not pure; the reduced-state entropy "
                  "is not an entanglement measure here");
  return von_neumann_bits(partial_trace(rho_total.matrix(), dim_s, dim_a,
                                        Subsystem::System));
}

SchmidtForm schmidt(const ComplexVector& psi, Eigen::Index dim_s, Eigen::Index dim_a) {
  if (psi.size() != dim_s * dim_a)
    throw DimensionMismatch("schmidt: ket length is not dim_s * dim_a");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw ValidationError("schmidt: ket is not normalized within 1e-10");

  ComplexMatrix m(dim_s, dim_a);
  for (Eigen::Index i = 0; i < dim_s; ++i)
    for (Eigen::Index j = 0; j < dim_a; ++j) m(i, j) = psi(i * dim_a + j);

  const Svd dec = svd(m);  // m = u diag(s) v^dag, so psi = sum_k s_k u_k (x) conj(v_k)
  const Eigen::Index r = dec.singular_values.size();
  SchmidtForm form;
  form.coefficients = dec.singular_values.array().square();
  form.basis_s.reserve(r);
  form.basis_a.reserve(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    ComplexVector e = dec.u.col(k);
    ComplexVector f = dec.v.col(k).conjugate();
    Complex phase(1.0, 0.0);
    for (Eigen::Index i = 0; i < e.size(); ++i) {
      if (std::abs(e(i)) > 1e-12) {
        phase = std::abs(e(i)) / e(i);
        break;
      }
    }
    form.basis_s.push_back(phase * e);
    form.basis_a.push_back(f / phase);
  }
  return form;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw DimensionMismatch("concurrence: defined for two-qubit states only");
  // mu_i are the singular values of sqrt(rho) (sy x sy) conj(sqrt(rho)),
  // identical to the eigenvalues of the usual Wootters R matrix but needing
  // only Hermitian kernels.
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  const ComplexMatrix b = root * spin_flip_matrix() * root.conjugate();
  const RealVector mu = svd(b).singular_values;
  const double c = mu(0) - mu(1) - mu(2) - mu(3);
  return std::clamp(c, 0.0, 1.0);
}

double eof(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  const double arg = (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0;
  return binary_entropy(arg);
}

ObservablePair counterexample_observables(const ComplexVector& psi, double w1,
                                          double w2) {
  const SchmidtForm form = schmidt(psi, 2, 2);
  if (form.coefficients.minCoeff() < tol::schmidt_zero)
    throw ProductState("counterexample_observables: ket is a product state, "
                       "the construction needs nonvanishing entanglement");
  const ComplexVector &e1 = form.basis_s[0], &e2 = form.basis_s[1];
  const ComplexVector &f1 = form.basis_a[0], &f2 = form.basis_a[1];
  ComplexMatrix os = w1 * (e1 * e2.adjoint() + e2 * e1.adjoint());
  ComplexMatrix oa = w2 * (f1 * f2.adjoint() + f2 * f1.adjoint());
  return {Observable(std::move(os)), Observable(std::move(oa))};
}

EntanglementReport entanglement_report(const DensityMatrix& rho_total,
                                       Eigen::Index dim_s, Eigen::Index dim_a,
                                       double t) {
  EntanglementReport report{t, std::nullopt, std::nullopt, std::nullopt,
                            rho_total.purity()};
  if (std::abs(report.purity - 1.0) <= tol::purity_pure)
    report.entropy = entropy_pure(rho_total, dim_s, dim_a);
  if (dim_s == 2 && dim_a == 2) {
    report.concurrence = concurrence(rho_total);
    report.eof = eof(rho_total);
  }
  return report;
}

}  // namespace qsd
