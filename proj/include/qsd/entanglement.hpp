#pragma once

#include <optional>
#include <vector>

#include "qsd/states.hpp"
#include "qsd/tomography.hpp"
#include "qsd/types.hpp"

namespace qsd {

/// Von Neumann entropy (base 2) of the reduced state of a pure bipartite
/// state; the standard pure-state entanglement measure. Throws NotPure when
/// tr(rho^2) differs from 1 by more than 1e-8.
double entropy_pure(const DensityMatrix& rho_total, Eigen::Index dim_s,
                    Eigen::Index dim_a);

struct SchmidtForm {
  RealVector coefficients;             // squared Schmidt weights, descending, sum 1
  std::vector<ComplexVector> basis_s;  // |e_i>
  std::vector<ComplexVector> basis_a;  // |f_i>, psi = sum_i sqrt(c_i) |e_i>|f_i>
};

/// Schmidt decomposition of a normalized ket. Phase convention: the first
/// nonzero entry of each |e_i> is real positive (the compensating phase goes
/// into |f_i>), so decompositions are reproducible.
SchmidtForm schmidt(const ComplexVector& psi, Eigen::Index dim_s, Eigen::Index dim_a);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

/// Entanglement of formation, h((1 + sqrt(1 - C^2))/2) in bits.
double eof(const DensityMatrix& rho);

/// Binary entropy -x log2 x - (1-x) log2 (1-x), continuous extension at 0, 1.
double binary_entropy(double x);

/// Observables O_S = w1 (|e1><e2| + h.c.), O_A = w2 (|f1><f2| + h.c.) built
/// from the Schmidt bases of an entangled ket; on that ket <O_S> = <O_A> = 0
/// while <O_S (x) O_A> = 2 sqrt(l1 (1-l1)) w1 w2. Throws ProductState when a
/// Schmidt weight is below 1e-10.
ObservablePair counterexample_observables(const ComplexVector& psi, double w1,
                                          double w2);

struct EntanglementReport {
  double t;
  std::optional<double> entropy;      // pure total states only
  std::optional<double> concurrence;  // two-qubit states only
  std::optional<double> eof;          // two-qubit states only
  double purity;
};

EntanglementReport entanglement_report(const DensityMatrix& rho_total,
                                       Eigen::Index dim_s, Eigen::Index dim_a,
                                       double t);

}  // namespace qsd
