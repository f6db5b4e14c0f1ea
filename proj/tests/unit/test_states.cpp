#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ptchain/error.hpp"
#include "ptchain/oracle.hpp"
#include "ptchain/states.hpp"

using namespace ptchain;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Amplitude, KEqualsPiIsNull) {
  for (int n : {3, 4, 9}) {
    EXPECT_LT(bethe_amplitude(ChainSpec(n, 0.7), std::numbers::pi).values().cwiseAbs().maxCoeff(), kNullAmplitude);
    EXPECT_THROW(wavefunction_unbroken(ChainSpec(n, 0.7), std::numbers::pi), NullState);
  }
}

TEST(Unbroken, HermitianLimitIsStandingWave) {
  const int n = 6;
  const ChainSpec spec(n, 0.0);
  for (double k : solve_real_momenta(spec)) {
    const StateVector f = wavefunction_unbroken(spec, k);
    // Up to one global phase the state is sin(k l).
    const cplx ratio = f.site(1) / std::sin(k);
    for (int l = 1; l <= n; ++l) EXPECT_LT(std::abs(f.site(l) - ratio * std::sin(k * l)), 1e-12);
  }
}

TEST(Unbroken, PtSymmetricAndEigenvector) {
  for (int n : {2, 5, 8, 12}) {
    const ChainSpec spec(n, 0.7 * gamma_critical(n));
    const ComplexMatrix h = build_hamiltonian(spec);
    for (double k : solve_real_momenta(spec)) {
      const StateVector f = wavefunction_unbroken(spec, k);
      EXPECT_LT((apply_pt(f).values() - f.values()).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_LT(eigen_residual(h, f, -2.0 * std::cos(k)), 1e-10);
      EXPECT_GE(f.site(1).real(), 0.0);
    }
  }
}

TEST(Unbroken, TwoSiteLowerRoot) {
  const ChainSpec spec(2, 0.6);
  const double k = solve_real_momenta(spec).front();
  EXPECT_LT(eigen_residual(build_hamiltonian(spec), wavefunction_unbroken(spec, k), -0.8), 1e-10);
}

TEST(Unbroken, ClosedFormDenominatorIsTheBilinearNorm) {
  for (int n : {3, 6, 11}) {
    const ChainSpec spec(n, 0.8 * gamma_critical(n));
    for (double k : solve_real_momenta(spec)) {
      const ComplexVector a = bethe_amplitude(spec, k).values();
      const double bilinear = std::sqrt(std::abs((a.array() * a.array()).sum()));
      EXPECT_NEAR(closed_form_norm(spec, k), bilinear, 1e-10 * bilinear);
    }
  }
}

TEST(Dual, EqualsRightStateAtZeroGamma) {
  const ChainSpec spec(7, 0.0);
  for (double k : solve_real_momenta(spec)) {
    EXPECT_LT((wavefunction_dual(spec, k).values() - wavefunction_unbroken(spec, k).values()).norm(), 1e-12);
  }
}

TEST(Dual, LeftEigenvectorResidual) {
  for (int n = 2; n <= 12; ++n) {
    const ChainSpec spec(n, 0.6 * gamma_critical(n));
    const ComplexMatrix hd = build_hamiltonian(spec).adjoint();
    for (double k : solve_real_momenta(spec)) {
      EXPECT_LT(eigen_residual(hd, wavefunction_dual(spec, k), -2.0 * std::cos(k)), 1e-8);
    }
  }
}

TEST(Basis, GramIdentities) {
  for (int n = 2; n <= 12; ++n) {
    const ChainSpec spec(n, 0.5 * gamma_critical(n));
    const EigenBasis basis = build_eigen_basis(spec);
    const COperator c = build_c_operator(basis);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    EXPECT_LT(max_abs(cpt_gram(c, basis) - id), 1e-8) << "N=" << n;
    EXPECT_LT(max_abs(biorthogonal_gram(basis) - id), 1e-8) << "N=" << n;
  }
}

TEST(COperatorTest, AlgebraOnGrid) {
  for (int n = 2; n <= 12; ++n) {
    for (double f : {0.3, 0.6, 0.9}) {
      const ChainSpec spec(n, f * gamma_critical(n));
      const EigenBasis basis = build_eigen_basis(spec);
      const ComplexMatrix c = build_c_operator(basis).matrix;
      const ComplexMatrix h = build_hamiltonian(spec);
      EXPECT_LT(max_abs(c * c - ComplexMatrix::Identity(n, n)), 1e-8);
      EXPECT_LT(max_abs(c * h - h * c), 1e-8);
      // [C, PT] = 0  <=>  C = P conj(C) P.
      const ComplexMatrix p = parity_matrix(n).cast<cplx>();
      EXPECT_LT(max_abs(c - p * c.conjugate() * p), 1e-8);
    }
  }
}

TEST(COperatorTest, HermitianLimitIsEuclidean) {
  const ChainSpec spec(5, 0.0);
  const EigenBasis basis = build_eigen_basis(spec);
  const COperator c = build_c_operator(basis);
  StateVector u(5);
  StateVector v(5);
  for (int l = 1; l <= 5; ++l) {
    u.site(l) = 0.2 * l;
    v.site(l) = 1.0 - 0.1 * l * l;
  }
  EXPECT_NEAR(std::abs(cpt_inner(c, u, v) - u.values().dot(v.values())), 0.0, 1e-12);
}

TEST(COperatorTest, RejectsBrokenPhase) {
  const EigenBasis basis = build_eigen_basis(ChainSpec(6, 1.3));
  EXPECT_THROW(build_c_operator(basis), PhaseError);
}

TEST(Broken, BranchesAndZeroPairing) {
  const ChainSpec spec(8, 1.2);
  const double kappa = solve_kappa(spec);
  const StateVector fp = wavefunction_broken(spec, kappa, +1);
  const StateVector fm = wavefunction_broken(spec, kappa, -1);
  const ComplexMatrix h = build_hamiltonian(spec);
  const double e = 2.0 * std::sinh(kappa);
  EXPECT_LT(eigen_residual(h, fp, cplx(0.0, e)), 1e-8);
  EXPECT_LT(eigen_residual(h, fm, cplx(0.0, -e)), 1e-8);
  EXPECT_LT(std::abs(pt_norm(fp)), 1e-10);
  EXPECT_LT(std::abs(pt_norm(fm)), 1e-10);
  // PT f+ is proportional to f-.
  const ComplexVector ptp = apply_pt(fp).values();
  EXPECT_NEAR(std::abs(ptp.dot(fm.values())), ptp.norm() * fm.values().norm(), 1e-10);
  EXPECT_NEAR(fp.values().norm(), 1.0, 1e-14);
}

TEST(Broken, RequiresBrokenPhase) { EXPECT_THROW(wavefunction_broken(ChainSpec(8, 0.9), 0.1, 1), PhaseError); }

TEST(Broken, MatchesOracleEigenvector) {
  const ChainSpec spec(8, 1.2);
  const double kappa = solve_kappa(spec);
  const StateVector fp = wavefunction_broken(spec, kappa, +1);
  const StateVector v = oracle_eigenvector(build_hamiltonian(spec), cplx(0.0, 2.0 * std::sinh(kappa)), 1e-10);
  EXPECT_LT(1.0 - std::abs(v.values().dot(fp.values())), 1e-6);
}

TEST(PtNorm, HermitianStandingWave) {
  const ChainSpec spec(6, 0.0);
  for (double k : solve_real_momenta(spec)) {
    StateVector f = wavefunction_unbroken(spec, k);
    f.values().normalize();
    EXPECT_NEAR(std::abs(pt_norm(f)), 1.0, 1e-12);
  }
}

TEST(Basis, CriticalBandRejected) { EXPECT_THROW(build_eigen_basis(ChainSpec(8, 1.0), 1e-9), PhaseError); }
