#include <gtest/gtest.h>

#include <cmath>

#include "ptchain/error.hpp"
#include "ptchain/model.hpp"

using namespace ptchain;

TEST(ChainSpec, RejectsInvalidParameters) {
  EXPECT_THROW(ChainSpec(1, 0.5), InvalidArgument);
  EXPECT_THROW(ChainSpec(4, -0.1), InvalidArgument);
  EXPECT_THROW(ChainSpec(4, 0.1, 0.0), InvalidArgument);
  EXPECT_NO_THROW(ChainSpec(2, 0.0));
  EXPECT_DOUBLE_EQ(ChainSpec(5, 0.3).hopping(), 1.0);
}

TEST(Hamiltonian, TwoSiteMatrix) {
  const ComplexMatrix h = build_hamiltonian(ChainSpec(2, 0.6));
  EXPECT_EQ(h(0, 0), cplx(0.0, 0.6));
  EXPECT_EQ(h(0, 1), cplx(-1.0, 0.0));
  EXPECT_EQ(h(1, 0), cplx(-1.0, 0.0));
  EXPECT_EQ(h(1, 1), cplx(0.0, -0.6));
}

TEST(Hamiltonian, HermitianLimitIsRealTridiagonal) {
  const ComplexMatrix h = build_hamiltonian(ChainSpec(3, 0.0));
  EXPECT_EQ(h.imag().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(h(0, 1).real(), -1.0);
  EXPECT_EQ(h(1, 2).real(), -1.0);
  EXPECT_EQ(h(0, 2).real(), 0.0);
  EXPECT_EQ(h(1, 1).real(), 0.0);
}

TEST(Hamiltonian, TracelessWithScaledHopping) {
  const ComplexMatrix h = build_hamiltonian(ChainSpec(4, 1.0, 2.0));
  EXPECT_EQ(h.trace(), cplx(0.0, 0.0));
  EXPECT_EQ(h(0, 0), cplx(0.0, 1.0));
  EXPECT_EQ(h(0, 1), cplx(-2.0, 0.0));
}

TEST(Hamiltonian, PtInvarianceAndAdjoint) {
  for (int n : {2, 5, 8}) {
    const ChainSpec spec(n, 0.7);
    const ComplexMatrix h = build_hamiltonian(spec);
    for (int m = 0; m < n; ++m) {
      for (int l = 0; l < n; ++l) EXPECT_EQ(std::conj(h(n - 1 - m, n - 1 - l)), h(m, l));
    }
    // H^dagger is H with gamma -> -gamma, i.e. conj(H) for this symmetric matrix.
    EXPECT_EQ((h.adjoint() - h.conjugate()).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(PtAction, Definition) {
  StateVector v(2);
  v.site(1) = {1.0, 0.0};
  v.site(2) = {0.0, 1.0};
  const StateVector w = apply_pt(v);
  EXPECT_EQ(w.site(1), cplx(0.0, -1.0));
  EXPECT_EQ(w.site(2), cplx(1.0, 0.0));
}

TEST(PtAction, InvolutionAndFixedPoint) {
  StateVector v(ComplexVector::Zero(5));
  for (int l = 1; l <= 5; ++l) v.site(l) = {0.3 * l, -0.1 * l * l};
  EXPECT_EQ((apply_pt(apply_pt(v)).values() - v.values()).norm(), 0.0);

  StateVector s(4);
  s.site(1) = s.site(4) = 0.5;
  s.site(2) = s.site(3) = -1.5;
  EXPECT_EQ((apply_pt(s).values() - s.values()).norm(), 0.0);
}

TEST(GammaCritical, ClosedForms) {
  EXPECT_NEAR(gamma_critical(7), 1.1547005383792515, 1e-15);
  EXPECT_DOUBLE_EQ(gamma_critical(8), 1.0);
  EXPECT_DOUBLE_EQ(gamma_critical(2), 1.0);
  EXPECT_DOUBLE_EQ(gamma_critical(3, 2.0), 2.0 * std::sqrt(2.0));
  EXPECT_THROW(gamma_critical(1), InvalidArgument);
}

TEST(GammaCritical, OddSequenceDecreasesTowardOne) {
  double prev = gamma_critical(3);
  for (int n = 5; n <= 401; n += 2) {
    const double cur = gamma_critical(n);
    EXPECT_LT(cur, prev);
    EXPECT_GT(cur, 1.0);
    prev = cur;
  }
  EXPECT_LT(prev - 1.0, 3e-3);
}

TEST(ClassifyPhase, Examples) {
  EXPECT_EQ(classify_phase(ChainSpec(8, 0.5)), Phase::Unbroken);
  EXPECT_EQ(classify_phase(ChainSpec(8, 1.2)), Phase::Broken);
  EXPECT_EQ(classify_phase(ChainSpec(8, 1.0), 1e-9), Phase::Critical);
  EXPECT_EQ(classify_phase(ChainSpec(8, 1.0 + 5e-10)), Phase::Critical);
  EXPECT_EQ(classify_phase(ChainSpec(8, 1.0 + 5e-9)), Phase::Broken);
  EXPECT_THROW(classify_phase(ChainSpec(8, 1.0), 0.0), InvalidArgument);
  EXPECT_EQ(to_string(Phase::Broken), "broken");
}
