#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qsd/dynamics.hpp"
#include "qsd/states.hpp"
#include "qsd/tomography.hpp"
#include "qsd/types.hpp"

namespace qsd {

struct TimeGrid {
  double t_min;
  double t_max;
  int steps;
};

/// Scan-level tolerances a scenario file may override.
struct Tolerances {
  double zero_prefilter = tol::zero_prefilter;
  double zero_accept = tol::zero_accept;
  double zero_refine = tol::zero_refine;
  double fd_step = tol::fd_step;
};

struct ScenarioConfig {
  std::string hamiltonian_kind;  // builtin_4210 | builtin_interaction | file
  ComplexMatrix hamiltonian_matrix;
  std::string hamiltonian_desc;
  RealVector rho_s;    // coherence vector of the initial system state
  RealVector ancilla;  // coherence vector of the ancilla state
  ComplexMatrix o_s_matrix;
  ComplexMatrix o_a_matrix;
  TimeGrid tgrid{0.0, 20.0, 2001};
  std::uint64_t seed = 0;
  Tolerances tolerances;
  std::vector<std::string> tolerance_overrides;  // "key=value" strings, logged on emit

  Eigen::Index system_dim() const;
  Hamiltonian hamiltonian() const { return Hamiltonian(hamiltonian_matrix); }
  DensityMatrix system_density() const;
  DensityMatrix ancilla_density() const;
  Observable observable_s() const { return Observable(o_s_matrix); }
  Observable observable_a() const { return Observable(o_a_matrix); }

  /// Measured components: the three commuting observables for qubits, the
  /// projector probabilities for larger dimensions.
  std::vector<Observable> components() const;
};

/// Strict JSON loader; unknown fields are rejected, states and observables
/// are validated, defaults are filled (seed 0, standard tolerances).
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// The figures' scenario: interaction Hamiltonian at cos(2 phi) = 1/sqrt(3),
/// rho = (0, 0, 1), ancilla Bloch vector (0, 0, lambda_z), grid [0, 20] x 2001.
ScenarioConfig figure_scenario(double lambda_z);

}  // namespace qsd
