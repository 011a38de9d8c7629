#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsd/dynamics.hpp"
#include "qsd/states.hpp"
#include "qsd/types.hpp"

namespace qsd {

struct ObservablePair {
  Observable system;
  Observable ancilla;
};

/// The affine map p(t) = omega * rho + k from the initial coherence vector
/// of the system to the measured values at time t.
struct TomographyMap {
  double t;
  RealMatrix omega;   // (N^2-1) x (N^2-1)
  RealVector kvec;    // N^2-1
  std::string meta;   // human-readable description of the measured components
};

/// The three commuting two-qubit observables [O_S (x) 1, 1 (x) O_A, O_S (x) O_A].
std::vector<Observable> qubit_observable_rows(const ObservablePair& pair);

/// Probability components of the N-dimensional protocol, built from the
/// spectral projectors s_i of O_S and a_j of O_A (eigenvalues ascending,
/// 1-based). Fixed order, N^2 - 1 components in total:
///   group 1: s_i (x) 1   for i = 1..N-1      (s_N dropped; the full set is
///            affinely dependent through sum_i <s_i (x) 1> = 1)
///   group 2: 1 (x) a_j   for j = 2..N
///   group 3: s_i (x) a_j for i, j = 2..N
std::vector<Observable> ndim_probability_components(const Observable& o_s,
                                                    const Observable& o_a);

/// Build (omega, k) at time t by probing: k from rho_S = I/N, column a from
/// the probe rho_S = I/N + (eps/2) T_a. The map is affine, so the divided
/// difference equals the derivative exactly for any admissible eps; eps
/// starts at 0.5/N and is halved (down to 1e-3) until the probe is a state.
TomographyMap build_map(const Hamiltonian& h, const DensityMatrix& ancilla,
                        const std::vector<Observable>& comps, double t,
                        std::optional<double> probe_amplitude = std::nullopt);

/// det(omega), by LU with the cofactor machinery alongside.
double determinant(const TomographyMap& map);

struct DetDerivative {
  double jacobi;        // sum_ij cof(omega)_ij * d(omega)_ij/dt
  double central_diff;  // [det omega(t+h) - det omega(t-h)] / (2h)
};

/// d(det omega)/dt at time t; d(omega)/dt estimated by central differences
/// with the given step (valid range [1e-7, 1e-2]).
DetDerivative ddet_dt(const Hamiltonian& h, const DensityMatrix& ancilla,
                      const std::vector<Observable>& comps, double t,
                      double step = tol::fd_step);

struct ReconstructionResult {
  CoherenceVector rho0;
  double residual;      // ||omega * rho0 + k - p||_2
  double condition;     // cond2(omega)
  double delta;         // det(omega)
  bool state_valid;     // reconstructed state passed DensityMatrix validation
  std::string validity_message;
};

/// Invert the map on measured values p. Throws SingularMatrix when
/// |det omega| < 1e-12 * ||omega||_F.
ReconstructionResult reconstruct(const TomographyMap& map, const RealVector& p);

}  // namespace qsd
