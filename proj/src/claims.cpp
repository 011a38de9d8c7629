#include "qsd/claims.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsd/entanglement.hpp"
#include "qsd/rng.hpp"
#include "qsd/scan.hpp"

namespace qsd {

bool ClaimsReport::all_pass() const {
  return std::none_of(verdicts.begin(), verdicts.end(), [](const ClaimVerdict& v) {
    return v.status == ClaimStatus::Fail;
  });
}

std::vector<ZeroCheck> theorem_checks(const ScenarioConfig& cfg, double t_lo,
                                      double t_hi) {
  const ZeroScan zs = find_entanglement_zeros(cfg, t_lo, t_hi);
  const Hamiltonian h = cfg.hamiltonian();
  const DensityMatrix ancilla = cfg.ancilla_density();
  const DensityMatrix rho0 = product_state(cfg.system_density(), ancilla);
  const std::vector<Observable> comps = cfg.components();
  const Eigen::Index n = cfg.system_dim();

  std::vector<ZeroCheck> checks;
  for (double t_star : zs.zeros) {
    const TomographyMap map = build_map(h, ancilla, comps, t_star);
    const DetDerivative deriv = ddet_dt(h, ancilla, comps, t_star,
                                        cfg.tolerances.fd_step);
    checks.push_back({t_star, entropy_pure(evolve(rho0, h, t_star), n, n),
                      std::abs(determinant(map)), std::abs(deriv.jacobi)});
  }
  return checks;
}

ScenarioConfig pi_half_scenario(int parameter_set) {
  ScenarioConfig cfg;
  cfg.hamiltonian_kind = "builtin_4210";
  cfg.hamiltonian_matrix = hamiltonian_spectrum_4210().matrix();
  cfg.hamiltonian_desc = "builtin_4210";
  if (parameter_set == 1)
    cfg.rho_s = (RealVector(3) << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0).finished();
  else if (parameter_set == 2)
    cfg.rho_s = (RealVector(3) << 1.0 / 3.0, 0.25, 0.5).finished();
  else
    throw ValidationError("pi_half_scenario: parameter set must be 1 or 2");
  cfg.ancilla = (RealVector(3) << 0, 0.25, 0.25).finished();
  cfg.o_s_matrix =
      Observable::from_pauli_coefficients(Eigen::Vector4d(0, 1, 1, 1)).matrix();
  cfg.o_a_matrix =
      Observable::from_pauli_coefficients(Eigen::Vector4d(0, 1, 0.5, 0)).matrix();
  cfg.tgrid = {0.0, 2.0 * std::numbers::pi, 629};
  return cfg;
}

InverseImplicationCase make_inverse_implication_case(const ComplexVector& psi,
                                                     double w1, double w2,
                                                     double t_star) {
  if (t_star <= 0.0)
    throw ValidationError("make_inverse_implication_case: t_star must be positive");
  const SchmidtForm form = schmidt(psi, 2, 2);
  ObservablePair pair = counterexample_observables(psi, w1, w2);

  // Second image vector: orthogonal to psi and chosen so that the
  // compressions of O_S (x) 1 and 1 (x) O_A to span{psi, chi} vanish, which
  // is what empties the first two rows of omega.
  const double s1 = std::sqrt(form.coefficients(0));
  const double s2 = std::sqrt(form.coefficients(1));
  const ComplexVector chi =
      s2 * kron(form.basis_s[0], form.basis_a[0]) -
      s1 * kron(form.basis_s[1], form.basis_a[1]);

  // Orthonormal completion of span{psi, chi}.
  ComplexMatrix seed(4, 6);
  seed.col(0) = psi;
  seed.col(1) = chi;
  seed.block(0, 2, 4, 4) = ComplexMatrix::Identity(4, 4);
  const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(seed).householderQ();

  // Input basis ordered so that the ancilla-|0> sector comes first: the
  // probe family rho_S (x) |0><0| is carried into span{psi, chi}.
  ComplexMatrix inputs(4, 4);
  const ComplexVector zero = (ComplexVector(2) << 1, 0).finished();
  const ComplexVector one = (ComplexVector(2) << 0, 1).finished();
  inputs.col(0) = kron(zero, zero);
  inputs.col(1) = kron(one, zero);
  inputs.col(2) = kron(zero, one);
  inputs.col(3) = kron(one, one);
  ComplexMatrix outputs(4, 4);
  outputs.col(0) = psi;
  outputs.col(1) = chi;
  outputs.col(2) = q.col(2);
  outputs.col(3) = q.col(3);

  const ComplexMatrix v = outputs * inputs.adjoint();
  Hamiltonian h = hamiltonian_from_unitary(v, t_star);
  DensityMatrix ancilla = ancilla_state(Eigen::Vector3d(0, 0, 1));
  return {std::move(h), std::move(ancilla), std::move(pair), t_star, psi,
          form.coefficients(0)};
}

namespace {

ClaimVerdict claim_pure_theorem(const ScenarioConfig& cfg, const std::string& id) {
  const DensityMatrix rho0 = product_state(cfg.system_density(), cfg.ancilla_density());
  if (!rho0.is_pure())
    return {id, ClaimStatus::Skipped, "initial total state is mixed; the pure-state "
                                      "theorem does not apply"};
  const std::vector<ZeroCheck> checks =
      theorem_checks(cfg, cfg.tgrid.t_min, cfg.tgrid.t_max);
  double worst_delta = 0.0, worst_ddelta = 0.0;
  for (const ZeroCheck& c : checks) {
    worst_delta = std::max(worst_delta, c.abs_delta);
    worst_ddelta = std::max(worst_ddelta, c.abs_ddelta);
  }
  std::ostringstream detail;
  detail << checks.size() << " entanglement zero(s); worst |Delta|=" << worst_delta
         << ", worst |dDelta/dt|=" << worst_ddelta;
  const bool ok = worst_delta < 1e-8 && worst_ddelta < 1e-6;
  return {id, ok ? ClaimStatus::Pass : ClaimStatus::Fail, detail.str()};
}

ClaimVerdict claim_pi_half(int parameter_set) {
  const ScenarioConfig cfg = pi_half_scenario(parameter_set);
  const double t_star = std::numbers::pi / 2.0;
  const Hamiltonian h = cfg.hamiltonian();
  const DensityMatrix ancilla = cfg.ancilla_density();
  const DensityMatrix rho_t =
      evolve(product_state(cfg.system_density(), ancilla), h, t_star);
  const double ef = eof(rho_t);
  const TomographyMap map = build_map(h, ancilla, cfg.components(), t_star);
  const double delta = determinant(map);
  const double expected = 9.0 / 512.0;  // 3 |O_A1^2 - O_A2^2| / 128 at (1, 1/2)
  const bool ok = ef < 1e-10 && std::abs(std::abs(delta) - expected) < 1e-9;
  std::ostringstream detail;
  detail << "EoF(pi/2)=" << ef << ", Delta(pi/2)=" << delta
         << " (|Delta| expected " << expected << ", observed sign "
         << (delta < 0 ? '-' : '+') << ")";
  return {"pi_half_counterexample_i" + std::to_string(parameter_set),
          ok ? ClaimStatus::Pass : ClaimStatus::Fail, detail.str()};
}

ClaimVerdict claim_inverse_implication() {
  // Bell-type state plus seeded random entangled kets.
  std::vector<ComplexVector> kets;
  ComplexVector bell(4);
  bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  kets.push_back(bell);
  Rng rng(31);
  while (kets.size() < 4) {
    const ComplexVector psi = rng.complex_ket(4);
    if (schmidt(psi, 2, 2).coefficients.minCoeff() > 0.02) kets.push_back(psi);
  }

  double worst_row = 0.0, worst_cross = 0.0, worst_delta = 0.0, worst_ddelta = 0.0;
  for (const ComplexVector& psi : kets) {
    const double w1 = 1.0, w2 = 1.0;
    const InverseImplicationCase c = make_inverse_implication_case(psi, w1, w2, 1.0);
    const DensityMatrix at_t(psi * psi.adjoint());
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const double ev_s = expectation(at_t, Observable(kron(c.pair.system.matrix(), id)));
    const double ev_a = expectation(at_t, Observable(kron(id, c.pair.ancilla.matrix())));
    const double ev_sa = expectation(
        at_t, Observable(kron(c.pair.system.matrix(), c.pair.ancilla.matrix())));
    const double expected_cross =
        2.0 * std::sqrt(c.lambda1 * (1.0 - c.lambda1)) * w1 * w2;
    const std::vector<Observable> comps = qubit_observable_rows(c.pair);
    const TomographyMap map = build_map(c.h, c.ancilla, comps, c.t_star);
    const DetDerivative deriv = ddet_dt(c.h, c.ancilla, comps, c.t_star);
    worst_row = std::max({worst_row, std::abs(ev_s), std::abs(ev_a)});
    worst_cross = std::max(worst_cross, std::abs(ev_sa - expected_cross));
    worst_delta = std::max(worst_delta, std::abs(determinant(map)));
    worst_ddelta = std::max(worst_ddelta, std::abs(deriv.jacobi));
  }
  const bool ok = worst_row < 1e-12 && worst_cross < 1e-12 &&
                  worst_delta < 1e-10 && worst_ddelta < 1e-7;
  std::ostringstream detail;
  detail << kets.size() << " entangled states; worst |<O_S>|,|<O_A>|=" << worst_row
         << ", worst cross-term error=" << worst_cross
         << ", worst |Delta|=" << worst_delta
         << ", worst |dDelta/dt|=" << worst_ddelta;
  return {"inverse_implication_counterexample",
          ok ? ClaimStatus::Pass : ClaimStatus::Fail, detail.str()};
}

}  // namespace

ClaimsReport check_claims_builtin() {
  ClaimsReport report;
  report.verdicts.push_back(
      claim_pure_theorem(figure_scenario(1.0), "pure_state_vanishing_theorem"));
  report.verdicts.push_back(claim_pi_half(1));
  report.verdicts.push_back(claim_pi_half(2));
  report.verdicts.push_back(claim_inverse_implication());
  return report;
}

ClaimsReport check_claims(const ScenarioConfig& cfg) {
  ClaimsReport report;
  report.verdicts.push_back(claim_pure_theorem(cfg, "pure_state_vanishing_theorem"));
  return report;
}

}  // namespace qsd
