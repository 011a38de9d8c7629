#include "qsd/scan.hpp"

#include <algorithm>
#include <cmath>

#include "qsd/entanglement.hpp"

namespace qsd {

std::vector<ScanRecord> scan(const ScenarioConfig& cfg) {
  const Eigen::Index n = cfg.system_dim();
  const Hamiltonian h = cfg.hamiltonian();
  const DensityMatrix ancilla = cfg.ancilla_density();
  const DensityMatrix rho_t0 = product_state(cfg.system_density(), ancilla);
  const std::vector<Observable> comps = cfg.components();

  std::vector<ScanRecord> records;
  records.reserve(cfg.tgrid.steps);
  for (int i = 0; i < cfg.tgrid.steps; ++i) {
    const double t = cfg.tgrid.t_min +
                     (cfg.tgrid.t_max - cfg.tgrid.t_min) * i / (cfg.tgrid.steps - 1);
    const DensityMatrix rho_t = evolve(rho_t0, h, t);
    const EntanglementReport ent = entanglement_report(rho_t, n, n, t);
    const TomographyMap map = build_map(h, ancilla, comps, t);
    const DetDerivative deriv = ddet_dt(h, ancilla, comps, t, cfg.tolerances.fd_step);
    const double c = cond2(map.omega);
    records.push_back({t, ent.entropy, ent.eof, determinant(map), deriv.jacobi,
                       std::isfinite(c) ? std::optional<double>(c) : std::nullopt});
  }
  return records;
}

double refine_minimum(const std::function<double(double)>& f, double a, double b,
                      double accuracy) {
  static const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_golden * (b - a);
  double d = a + inv_golden * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > accuracy) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_golden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_golden * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

ZeroScan find_entanglement_zeros(const ScenarioConfig& cfg, double t_lo, double t_hi) {
  if (!(t_lo < t_hi))
    throw ValidationError("find_entanglement_zeros: need t_lo < t_hi");
  const Eigen::Index n = cfg.system_dim();
  const Hamiltonian h = cfg.hamiltonian();
  const DensityMatrix rho_t0 = product_state(cfg.system_density(), cfg.ancilla_density());
  if (!rho_t0.is_pure())
    throw NotPure("find_entanglement_zeros: the initial total state must be pure");

  const auto entropy_at = [&](double t) {
    return entropy_pure(evolve(rho_t0, h, t), n, n);
  };

  const int steps = cfg.tgrid.steps;
  std::vector<double> ts(steps), es(steps);
  for (int i = 0; i < steps; ++i) {
    ts[i] = t_lo + (t_hi - t_lo) * i / (steps - 1);
    es[i] = entropy_at(ts[i]);
  }

  ZeroScan result;
  const Tolerances& tols = cfg.tolerances;
  if (std::all_of(es.begin(), es.end(),
                  [&](double e) { return e < tols.zero_accept; })) {
    result.everywhere = true;  // e.g. H = 0: the state never entangles
    return result;
  }

  // Local minima, endpoints included. Every minimum is refined; shallow dips
  // are discarded afterwards by the prefilter on the refined value, so narrow
  // dips undersampled by the grid cannot be missed.
  std::vector<std::pair<double, double>> brackets;
  if (es[0] <= es[1]) brackets.emplace_back(ts[0], ts[1]);
  for (int i = 1; i + 1 < steps; ++i)
    if (es[i] <= es[i - 1] && es[i] <= es[i + 1])
      brackets.emplace_back(ts[i - 1], ts[i + 1]);
  if (es[steps - 1] <= es[steps - 2]) brackets.emplace_back(ts[steps - 2], ts[steps - 1]);

  for (const auto& [a, b] : brackets) {
    const double t_star = refine_minimum(entropy_at, a, b, tols.zero_refine);
    const double e_star = entropy_at(t_star);
    if (e_star >= tols.zero_prefilter) continue;
    if (e_star < tols.zero_accept) {
      const bool duplicate =
          std::any_of(result.zeros.begin(), result.zeros.end(),
                      [&](double z) { return std::abs(z - t_star) < 1e-7; });
      if (!duplicate) result.zeros.push_back(t_star);
    }
  }
  std::sort(result.zeros.begin(), result.zeros.end());
  return result;
}

}  // namespace qsd
