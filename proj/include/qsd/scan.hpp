#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qsd/scenario.hpp"
#include "qsd/types.hpp"

namespace qsd {

struct ScanRecord {
  double t;
  std::optional<double> entropy;  // present only when the total state is pure
  std::optional<double> eof;      // present only for two-qubit totals
  double delta;
  double ddelta;                  // Jacobi-formula d(det omega)/dt
  std::optional<double> cond;     // absent when not finite
};

/// One record per grid point; deterministic for a given config.
std::vector<ScanRecord> scan(const ScenarioConfig& cfg);

struct ZeroScan {
  std::vector<double> zeros;  // refined instants with vanishing entanglement
  bool everywhere = false;    // entanglement vanishes at every grid point
};

/// Grid scan of the entanglement entropy over [t_lo, t_hi] at the config's
/// resolution, followed by golden-section refinement of the local minima.
/// Requires a pure initial total state.
ZeroScan find_entanglement_zeros(const ScenarioConfig& cfg, double t_lo, double t_hi);

/// Golden-section minimizer used by the zero finder; refines to the given
/// |t*| accuracy. Exposed for tests and the claims checker.
double refine_minimum(const std::function<double(double)>& f, double a, double b,
                      double accuracy);

}  // namespace qsd
