#include "qsd/tomography.hpp"

#include <cmath>
#include <sstream>

namespace qsd {

std::vector<Observable> qubit_observable_rows(const ObservablePair& pair) {
  if (pair.system.dim() != 2 || pair.ancilla.dim() != 2)
    throw DimensionMismatch("qubit_observable_rows: both observables must be qubit-sized");
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  std::vector<Observable> rows;
  rows.emplace_back(kron(pair.system.matrix(), id));
  rows.emplace_back(kron(id, pair.ancilla.matrix()));
  rows.emplace_back(kron(pair.system.matrix(), pair.ancilla.matrix()));
  return rows;
}

namespace {

std::vector<ComplexMatrix> spectral_projectors(const Observable& o, const char* side) {
  const HermEigen eig = o.spectrum();
  for (Eigen::Index i = 0; i + 1 < eig.eigenvalues.size(); ++i)
    if (eig.eigenvalues(i + 1) - eig.eigenvalues(i) < tol::spectrum_gap)
      throw DegenerateSpectrum(std::string("ndim_probability_components: ") + side +
                               " observable has a degenerate spectrum");
  std::vector<ComplexMatrix> proj;
  proj.reserve(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    proj.push_back(eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint());
  return proj;
}

}  // namespace

std::vector<Observable> ndim_probability_components(const Observable& o_s,
                                                    const Observable& o_a) {
  const Eigen::Index n = o_s.dim();
  if (o_a.dim() != n)
    throw DimensionMismatch("ndim_probability_components: observables differ in dimension");
  const auto ps = spectral_projectors(o_s, "system");
  const auto pa = spectral_projectors(o_a, "ancilla");
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  std::vector<Observable> comps;
  comps.reserve(n * n - 1);
  for (Eigen::Index i = 0; i < n - 1; ++i)
    comps.emplace_back(kron(ps[i], id));
  for (Eigen::Index j = 1; j < n; ++j)
    comps.emplace_back(kron(id, pa[j]));
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 1; j < n; ++j)
      comps.emplace_back(kron(ps[i], pa[j]));
  return comps;
}

namespace {

RealVector measured_values(const ComplexMatrix& u, const DensityMatrix& rho_s,
                           const DensityMatrix& ancilla,
                           const std::vector<Observable>& comps) {
  const ComplexMatrix total = kron(rho_s.matrix(), ancilla.matrix());
  const ComplexMatrix evolved = u * total * u.adjoint();
  RealVector p(static_cast<Eigen::Index>(comps.size()));
  for (std::size_t i = 0; i < comps.size(); ++i)
    p(static_cast<Eigen::Index>(i)) = (evolved * comps[i].matrix()).trace().real();
  return p;
}

}  // namespace

TomographyMap build_map(const Hamiltonian& h, const DensityMatrix& ancilla,
                        const std::vector<Observable>& comps, double t,
                        std::optional<double> probe_amplitude) {
  const Eigen::Index dim_a = ancilla.dim();
  if (h.dim() % dim_a != 0)
    throw DimensionMismatch("build_map: Hamiltonian dimension is not a multiple of the ancilla's");
  const Eigen::Index n = h.dim() / dim_a;
  const Eigen::Index ncomp = n * n - 1;
  if (static_cast<Eigen::Index>(comps.size()) != ncomp)
    throw DimensionMismatch("build_map: need N^2 - 1 measured components");
  for (const Observable& o : comps)
    if (o.dim() != h.dim())
      throw DimensionMismatch("build_map: component dimension differs from the total space");

  const ComplexMatrix u = propagator(h, t).u;
  const DensityMatrix mixed(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
  const RealVector k = measured_values(u, mixed, ancilla, comps);

  RealMatrix omega(ncomp, ncomp);
  for (Eigen::Index a = 0; a < ncomp; ++a) {
    double eps = probe_amplitude.value_or(0.5 / static_cast<double>(n));
    for (;;) {
      RealVector r = RealVector::Zero(ncomp);
      r(a) = eps;
      try {
        const DensityMatrix probe = density_from_coherence({n, r});
        omega.col(a) = (measured_values(u, probe, ancilla, comps) - k) / eps;
        break;
      } catch (const NotPositive&) {
        if (probe_amplitude || eps / 2.0 < tol::probe_floor)
          throw NotPositive("build_map: no admissible probe state along component " +
                            std::to_string(a));
        eps /= 2.0;
      }
    }
  }

  std::ostringstream meta;
  meta << (n == 2 && comps.size() == 3 ? "qubit observables" : "probability components")
       << ", N=" << n;
  return {t, std::move(omega), k, meta.str()};
}

double determinant(const TomographyMap& map) {
  return det_and_cofactors(map.omega).det;
}

DetDerivative ddet_dt(const Hamiltonian& h, const DensityMatrix& ancilla,
                      const std::vector<Observable>& comps, double t, double step) {
  if (!(step >= 1e-7 && step <= 1e-2))
    throw ValidationError("ddet_dt: step must lie in [1e-7, 1e-2]");
  const TomographyMap at_t = build_map(h, ancilla, comps, t);
  const TomographyMap fwd = build_map(h, ancilla, comps, t + step);
  const TomographyMap bwd = build_map(h, ancilla, comps, t - step);
  const RealMatrix domega = (fwd.omega - bwd.omega) / (2.0 * step);
  const DetCofactors dc = det_and_cofactors(at_t.omega);
  const double jacobi = (dc.cofactors.array() * domega.array()).sum();
  const double central = (det_and_cofactors(fwd.omega).det -
                          det_and_cofactors(bwd.omega).det) /
                         (2.0 * step);
  return {jacobi, central};
}

ReconstructionResult reconstruct(const TomographyMap& map, const RealVector& p) {
  if (p.size() != map.kvec.size())
    throw DimensionMismatch("reconstruct: measured vector has the wrong length");
  const double delta = determinant(map);
  const double scale = map.omega.norm();
  if (std::abs(delta) < tol::singular_rel * scale)
    throw SingularMatrix("reconstruct: |det| below 1e-12 * ||omega||_F, map is not invertible at t=" +
                         std::to_string(map.t));
  const RealVector x = solve(map.omega, RealVector(p - map.kvec));
  const double residual = (map.omega * x + map.kvec - p).norm();

  const Eigen::Index n =
      static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(p.size() + 1))));
  CoherenceVector rho0{n, x};
  bool valid = true;
  std::string message = "reconstructed state is a valid density matrix";
  try {
    (void)density_from_coherence(rho0);
  } catch (const Error& e) {
    valid = false;
    message = e.what();
  }
  return {std::move(rho0), residual, cond2(map.omega), delta, valid, std::move(message)};
}

}  // namespace qsd
