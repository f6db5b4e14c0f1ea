#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ptchain/bethe.hpp"
#include "ptchain/error.hpp"
#include "ptchain/exceptional.hpp"

using namespace ptchain;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(RealMomenta, ThreeSitesAtUnitGamma) {
  const auto ks = solve_real_momenta(ChainSpec(3, 1.0), 1e-12);
  ASSERT_EQ(ks.size(), 3u);
  EXPECT_NEAR(ks[0], kPi / 3, 1e-12);
  EXPECT_NEAR(ks[1], kPi / 2, 1e-12);
  EXPECT_NEAR(ks[2], 2 * kPi / 3, 1e-12);
}

TEST(RealMomenta, TwoSitesEnergies) {
  const auto ks = solve_real_momenta(ChainSpec(2, 0.6), 1e-12);
  ASSERT_EQ(ks.size(), 2u);
  EXPECT_NEAR(-2.0 * std::cos(ks[0]), -0.8, 1e-12);
  EXPECT_NEAR(-2.0 * std::cos(ks[1]), 0.8, 1e-12);
}

TEST(RealMomenta, StandingWavesAtZeroGamma) {
  for (int n : {2, 5, 8, 13}) {
    const auto ks = solve_real_momenta(ChainSpec(n, 0.0), 1e-12);
    ASSERT_EQ(static_cast<int>(ks.size()), n);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(ks[i], kPi * (i + 1) / (n + 1), 1e-12) << "N=" << n;
  }
}

TEST(RealMomenta, RootsSatisfyQuantizationAndLabels) {
  for (int n : {4, 7, 10}) {
    const ChainSpec spec(n, 0.55 * gamma_critical(n));
    const auto ks = solve_real_momenta(spec, 1e-12);
    ASSERT_EQ(static_cast<int>(ks.size()), n);
    for (double k : ks) {
      EXPECT_LT(std::abs(quantization_residual(spec, k)), 1e-12);
      const MomentumLabel lab = momentum_label(spec, k);
      EXPECT_NEAR(k, (lab.n_k * kPi + lab.theta) / n, 1e-12);
    }
  }
}

TEST(RealMomenta, OddChainAtUnitGammaHasZeroPhase) {
  for (int n : {3, 5, 9}) {
    const ChainSpec spec(n, 1.0);
    for (double k : solve_real_momenta(spec, 1e-12)) {
      // k = pi/2 is the root of the cos(k) factor; tan(k) diverges there.
      if (k == kPi / 2) continue;
      const MomentumLabel lab = momentum_label(spec, k);
      EXPECT_NEAR(lab.theta, 0.0, 1e-12);
      EXPECT_NEAR(k, lab.n_k * kPi / n, 1e-12);
    }
  }
}

TEST(RealMomenta, CountDropsByTwoAtGammaCritical) {
  for (int n : {2, 3, 6, 11, 20}) {
    const double gc = gamma_critical(n);
    EXPECT_EQ(real_root_count(ChainSpec(n, gc * (1 - 1e-7))), n);
    EXPECT_EQ(real_root_count(ChainSpec(n, gc * (1 + 1e-7))), n - 2);
    EXPECT_NEAR(locate_gamma_critical(n, 1.0, 1e-10), gc, 1e-9);
  }
}

TEST(RealMomenta, RejectsBadTolerance) { EXPECT_THROW(solve_real_momenta(ChainSpec(4, 0.2), 0.0), InvalidArgument); }

TEST(Kappa, TwoSitesClosedForm) {
  const double kappa = solve_kappa(ChainSpec(2, std::sqrt(2.0)), 1e-14);
  EXPECT_NEAR(kappa, std::asinh(0.5), 1e-13);
  EXPECT_NEAR(2.0 * std::sinh(kappa), 1.0, 1e-13);
}

TEST(Kappa, RequiresBrokenPhase) {
  EXPECT_THROW(solve_kappa(ChainSpec(8, 0.9)), PhaseError);
  EXPECT_THROW(solve_kappa(ChainSpec(8, 1.0)), PhaseError);
}

TEST(Kappa, VanishesTowardGammaCritical) {
  double prev = 1e9;
  for (double x : {1e-2, 1e-3, 1e-4, 1e-6}) {
    const double kappa = solve_kappa(ChainSpec(9, gamma_critical(9) * (1 + x)));
    EXPECT_GT(kappa, 0.0);
    EXPECT_LT(kappa, prev);
    prev = kappa;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(Kappa, LargeChainMatchesAsymptoticEstimate) {
  const ChainSpec spec(20, 1.01);
  const double kappa = solve_kappa(spec, 1e-14);
  EXPECT_NEAR(kappa, kappa_approx(spec), 0.05 * kappa);
}

TEST(Kappa, NoOverflowForLongChains) {
  const double kappa = solve_kappa(ChainSpec(400, 3.0));
  EXPECT_TRUE(std::isfinite(kappa));
  EXPECT_GT(kappa, 0.0);
}

TEST(Spectrum, ThreeSites) {
  const auto e = solve_spectrum(ChainSpec(3, 1.0)).energies();
  ASSERT_EQ(e.size(), 3u);
  EXPECT_NEAR(e[0].real(), -1.0, 1e-12);
  EXPECT_NEAR(e[1].real(), 0.0, 1e-12);
  EXPECT_NEAR(e[2].real(), 1.0, 1e-12);
  const auto h = solve_spectrum(ChainSpec(3, 0.0)).energies();
  EXPECT_NEAR(h[0].real(), -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(h[2].real(), std::sqrt(2.0), 1e-12);
}

TEST(Spectrum, EightSitesBroken) {
  // Frozen reference: 50-digit eigenvalues of the 8x8 matrix at gamma = 1.2.
  const double expected_real[] = {-1.84034857889999, -1.3808185653951, -0.652910556962127,
                                  0.652910556962127, 1.3808185653951,  1.84034857889999};
  const SpectralSolution sol = solve_spectrum(ChainSpec(8, 1.2));
  EXPECT_EQ(sol.phase, Phase::Broken);
  ASSERT_EQ(sol.modes.size(), 8u);
  int r = 0;
  cplx sum(0.0, 0.0);
  for (const Mode& m : sol.modes) {
    sum += m.energy;
    if (m.is_real()) {
      EXPECT_EQ(m.energy.imag(), 0.0);
      EXPECT_NEAR(m.energy.real(), expected_real[r++], 1e-12);
    } else {
      EXPECT_EQ(m.energy.real(), 0.0);
      EXPECT_NEAR(std::abs(m.energy.imag()), 0.399793694036826, 1e-12);
    }
  }
  EXPECT_EQ(r, 6);
  EXPECT_LT(std::abs(sum), 1e-12);
}

TEST(Spectrum, ChiralSymmetry) {
  for (int n : {5, 6, 11}) {
    const auto e = solve_spectrum(ChainSpec(n, 0.4 * gamma_critical(n))).energies();
    for (int i = 0; i < n; ++i) EXPECT_NEAR(e[i].real(), -e[n - 1 - i].real(), 1e-12);
  }
}

TEST(Spectrum, CriticalBandIsBestEffort) {
  const SpectralSolution sol = solve_spectrum(ChainSpec(8, 1.0), 1e-9);
  EXPECT_EQ(sol.phase, Phase::Critical);
  EXPECT_FALSE(sol.modes.empty());
}
