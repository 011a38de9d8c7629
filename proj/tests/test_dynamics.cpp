#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "oracles.hpp"
#include "qsd/dynamics.hpp"
#include "qsd/rng.hpp"

using namespace qsd;

TEST_CASE("4210 Hamiltonian: spectrum, orthonormal kets, spectral reassembly") {
  const Hamiltonian h = hamiltonian_spectrum_4210();
  const HermEigen eig = h.eigensystem();
  CHECK(eig.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(3) == doctest::Approx(4.0).epsilon(1e-12));

  // the listed kets, |+> = e0, |-> = e1, ordering |s a>
  const ComplexVector plus = (ComplexVector(2) << 1, 0).finished();
  const ComplexVector minus = (ComplexVector(2) << 0, 1).finished();
  const ComplexVector e1 = kron(plus, minus);
  const ComplexVector e2 = ((kron(plus, plus) + kron(minus, plus)) / std::sqrt(2.0)).eval();
  const ComplexVector e3 = kron(minus, minus);
  const ComplexVector e4 = ((kron(minus, plus) - kron(plus, plus)) / std::sqrt(2.0)).eval();
  CHECK(std::abs(e2.dot(e4)) < 1e-15);

  ComplexMatrix assembled = 4.0 * e1 * e1.adjoint() + 2.0 * e2 * e2.adjoint() +
                            1.0 * e3 * e3.adjoint() + 0.0 * e4 * e4.adjoint();
  CHECK((assembled - h.matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("interaction Hamiltonian") {
  // phi = 0 specialization: sx/sqrt(2) (x) sy + I (x) sz/2
  const Hamiltonian h0 = hamiltonian_interaction(0.0);
  const OperatorBasis sigma = pauli();
  const ComplexMatrix expected =
      kron((sigma.elements[0] / std::sqrt(2.0)).eval(), sigma.elements[1]) +
      kron(ComplexMatrix::Identity(2, 2), (0.5 * sigma.elements[2]).eval());
  CHECK((h0.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);

  // traceless at every angle
  for (double phi = 0.0; phi < 3.2; phi += 0.2)
    CHECK(std::abs(hamiltonian_interaction(phi).matrix().trace()) < 1e-14);

  // the figures' angle satisfies cos(2 phi) = 1/sqrt(3)
  CHECK(std::cos(2.0 * interaction_phi_default()) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(hermiticity_defect(
            hamiltonian_interaction(interaction_phi_default()).matrix()) < 1e-15);
}

TEST_CASE("propagator: identity, recurrence, group property, unitarity") {
  const Hamiltonian h = hamiltonian_spectrum_4210();
  const Propagator at0 = propagator(h, 0.0);
  CHECK((at0.u - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  // integer spectrum: full recurrence at t = 2 pi
  const Propagator rec = propagator(h, 2.0 * std::numbers::pi);
  CHECK((rec.u - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);

  Rng rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    const double t1 = 4.0 * rng.uniform() - 2.0;
    const double t2 = 4.0 * rng.uniform() - 2.0;
    const ComplexMatrix lhs = propagator(h, t1).u * propagator(h, t2).u;
    const ComplexMatrix rhs = propagator(h, t1 + t2).u;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
  }

  const Hamiltonian hi = hamiltonian_interaction(interaction_phi_default());
  for (double t : {0.3, 1.7, 5.0, 19.5}) {
    const ComplexMatrix u = propagator(hi, t).u;
    CHECK((u.adjoint() * u - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-11);
    CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-10);
  }
}

TEST_CASE("evolve: stationary states, purity and spectrum preservation") {
  const Hamiltonian h = hamiltonian_spectrum_4210();
  const DensityMatrix rho = random_state(4, false, 3);
  CHECK((evolve(rho, h, 0.0).matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);

  // eigenstate projector is stationary
  const HermEigen eig = h.eigensystem();
  const ComplexVector top = eig.eigenvectors.col(3);
  const DensityMatrix stat(top * top.adjoint());
  CHECK((evolve(stat, h, 1.234).matrix() - stat.matrix()).cwiseAbs().maxCoeff() <
        1e-12);

  const HermEigen spec0 = herm_eig(rho.matrix());
  for (double t : {0.5, 2.0, 7.7}) {
    const DensityMatrix rt = evolve(rho, h, t);
    CHECK(std::abs(rt.purity() - rho.purity()) < 1e-11);
    const HermEigen spec_t = herm_eig(rt.matrix());
    CHECK((spec_t.eigenvalues - spec0.eigenvalues).cwiseAbs().maxCoeff() < 1e-10);
  }

  CHECK_THROWS_AS(evolve(random_state(2, false, 1), h, 1.0), DimensionMismatch);
}

TEST_CASE("expectation: basics, brute-force trace, linearity") {
  const OperatorBasis sigma = pauli();
  const DensityMatrix up =
      DensityMatrix((ComplexMatrix(2, 2) << 1, 0, 0, 0).finished());
  CHECK(expectation(up, Observable(sigma.elements[2])) == doctest::Approx(1.0));

  const DensityMatrix mixed(0.5 * ComplexMatrix::Identity(2, 2));
  CHECK(expectation(mixed, Observable(sigma.elements[0])) ==
        doctest::Approx(0.0).epsilon(1e-15));

  const DensityMatrix rho = random_state(4, false, 14);
  const Observable xy(kron(sigma.elements[0], sigma.elements[1]));
  const double direct = expectation(rho, xy);
  const Complex oracle = oracles::trace_product_by_sum(rho.matrix(), xy.matrix());
  CHECK(direct == doctest::Approx(oracle.real()).epsilon(1e-13));

  // linearity in the state
  const DensityMatrix rho2 = random_state(4, false, 15);
  const double alpha = 0.37;
  const DensityMatrix blend(alpha * rho.matrix() + (1 - alpha) * rho2.matrix());
  CHECK(expectation(blend, xy) ==
        doctest::Approx(alpha * expectation(rho, xy) +
                        (1 - alpha) * expectation(rho2, xy))
            .epsilon(1e-12));

  ComplexMatrix skew(2, 2);
  skew << 0, Complex(0, 1), Complex(0, 1), 0;
  CHECK_THROWS_AS(Observable{skew}, NonHermitianObservable);
  CHECK_THROWS_AS(expectation(rho, Observable(sigma.elements[0])),
                  DimensionMismatch);
}

TEST_CASE("hamiltonian_from_unitary reproduces the unitary") {
  Rng rng(8);
  const ComplexMatrix u = random_unitary(4, rng);
  const double t_star = 1.5;
  const Hamiltonian h = hamiltonian_from_unitary(u, t_star);
  CHECK((propagator(h, t_star).u - u).cwiseAbs().maxCoeff() < 1e-11);

  CHECK_THROWS_AS(hamiltonian_from_unitary(rng.ginibre(4, 4), 1.0), ValidationError);
}

TEST_CASE("hamiltonian file loading") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qsd_dynamics_test";
  fs::create_directories(dir);

  const fs::path good = dir / "h_good.json";
  {
    std::ofstream out(good);
    out << R"({"dim": 2, "entries_re": [0.0, 1.0, 1.0, 0.0],)"
        << R"( "entries_im": [0.0, -0.5, 0.5, 0.0]})";
  }
  const Hamiltonian h = load_hamiltonian(good);
  CHECK(h.dim() == 2);
  CHECK(h.matrix()(0, 1) == Complex(1.0, -0.5));

  const fs::path bad = dir / "h_bad.json";
  {
    std::ofstream out(bad);
    // not Hermitian
    out << R"({"dim": 2, "entries_re": [0.0, 1.0, 0.0, 0.0],)"
        << R"( "entries_im": [0.0, 0.0, 0.0, 0.0]})";
  }
  CHECK_THROWS_AS(load_hamiltonian(bad), NotHermitian);
  CHECK_THROWS_AS(load_hamiltonian(dir / "missing.json"), IoError);

  fs::remove_all(dir);
}
