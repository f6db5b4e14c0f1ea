#include <gtest/gtest.h>

#include <cmath>

#include "ptchain/error.hpp"
#include "ptchain/exceptional.hpp"

using namespace ptchain;

TEST(DeltaApprox, TwentySites) {
  const ChainSpec spec(20, 0.99);
  EXPECT_NEAR(alpha_parameter(spec), -99.50251256281407, 1e-10);
  // Independent 50-digit evaluation of 1/sqrt(-N alpha).
  EXPECT_NEAR(delta_approx(spec), 0.0224165089553157, 1e-14);
  EXPECT_NEAR(2.0 * std::sin(delta_approx(spec)), 0.044826, 1e-5);
}

TEST(DeltaApprox, OddChainAtCriticalPointIsZero) {
  const ChainSpec spec(9, gamma_critical(9));
  EXPECT_NEAR(alpha_parameter(spec), 9.0, 1e-12);
  EXPECT_EQ(delta_approx(spec), 0.0);
  EXPECT_EQ(kappa_approx(spec), 0.0);
}

TEST(DeltaApprox, DomainErrors) {
  EXPECT_THROW(delta_approx(ChainSpec(20, 1.2)), DomainError);
  EXPECT_THROW(kappa_approx(ChainSpec(20, 0.8)), DomainError);
  // Odd chain with gamma < J: the radicand 3(alpha - N)/(N^3 - alpha) is negative.
  EXPECT_THROW(delta_approx(ChainSpec(7, 0.5)), DomainError);
}

TEST(DeltaApprox, AgreesWithBetheCloseToCriticalPoint) {
  // The formula is leading order in N * delta; at 0.3% of gamma_c it is within 5%.
  const int n = 19;
  const double gc = gamma_critical(n);
  for (double x : {1e-3, 2e-3, 3e-3}) {
    const ChainSpec spec(n, gc * (1 - x));
    const double numeric = std::abs(critical_pair(spec).modes[0].energy);
    const double predicted = 2.0 * std::sin(delta_approx(spec));
    EXPECT_LT(std::abs(numeric - predicted) / numeric, 0.05) << "x=" << x;
  }
  // At the 1% edge the asymptotic formula is about 13% off.
  const ChainSpec edge(n, gc * 0.99);
  const double numeric = std::abs(critical_pair(edge).modes[0].energy);
  EXPECT_GT(std::abs(numeric - 2.0 * std::sin(delta_approx(edge))) / numeric, 0.05);
}

TEST(KappaApprox, TwentySitesMatchesSolver) {
  const ChainSpec spec(20, 1.01);
  const double k = solve_kappa(spec);
  EXPECT_NEAR(kappa_approx(spec), k, 0.05 * k);
  EXPECT_NEAR(kappa_approx(spec), 1.0 / std::sqrt(20.0 * alpha_parameter(spec)), 1e-15);
}

TEST(KappaApprox, MirrorsDeltaAcrossCriticalPoint) {
  const double x = 1e-3;
  const double d = delta_approx(ChainSpec(20, 1.0 - x));
  const double k = kappa_approx(ChainSpec(20, 1.0 + x));
  EXPECT_NEAR(d / k, 1.0, 2e-3);
}

TEST(RepulsionLaw, Values) {
  const auto even = repulsion_law(ChainSpec(20, 0.99));
  EXPECT_NEAR(even[0], 0.044721359549995794, 1e-15);
  EXPECT_EQ(even[1], -even[0]);
  EXPECT_EQ(repulsion_law(ChainSpec(20, 1.0))[0], 0.0);
  // Even/odd prefactor ratio is sqrt(3) at equal relative offset and N.
  const double gc_odd = gamma_critical(21);
  const double odd_value = repulsion_law(ChainSpec(21, gc_odd * 0.99))[0];
  const double even_like = 2.0 * std::sqrt(0.01 / 21.0);
  EXPECT_NEAR(odd_value / even_like, std::sqrt(3.0), 1e-12);
}

TEST(RepulsionLaw, FirstOrderAgreementWithDelta) {
  double prev = 1.0;
  for (double x : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const ChainSpec spec(20, 1.0 - x);
    const double ratio = 2.0 * std::sin(delta_approx(spec)) / repulsion_law(spec)[0];
    EXPECT_LT(std::abs(ratio - 1.0), prev);
    prev = std::abs(ratio - 1.0);
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(CriticalSweep, CoalescenceGapShrinksTowardCriticalPoint) {
  for (int n : {19, 20}) {
    const double gc = gamma_critical(n);
    for (double side : {-1.0, 1.0}) {
      std::vector<double> gammas;
      for (double x : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) gammas.push_back(gc * (1 + side * x));
      const auto reports = critical_sweep(ChainSpec(n, 0.0), gammas);
      ASSERT_EQ(reports.size(), gammas.size());
      for (std::size_t i = 1; i < reports.size(); ++i) {
        EXPECT_LT(reports[i].coalescence_gap, reports[i - 1].coalescence_gap) << "N=" << n << " side=" << side;
      }
      EXPECT_LT(reports.back().coalescence_gap, 1e-2);
    }
  }
}

TEST(CriticalSweep, LevelsAndPtNorms) {
  const double gc = gamma_critical(20);
  const auto r = critical_sweep(ChainSpec(20, 0.0), {0.5 * gc, gc * (1 - 1e-4), gc, gc * (1 + 1e-2)}, 1e-9);
  EXPECT_GT(r[0].coalescence_gap, 0.1);
  EXPECT_FALSE(r[0].in_window);
  EXPECT_EQ(r[1].two_levels[0].imag(), 0.0);
  EXPECT_LT(std::abs(r[1].pt_norms[0]), std::abs(r[0].pt_norms[0]));
  EXPECT_LT(std::abs(r[1].pt_norms[0]), 0.01);
  EXPECT_TRUE(r[2].skipped);
  EXPECT_TRUE(std::isnan(r[2].coalescence_gap));
  EXPECT_EQ(r[3].two_levels[0].real(), 0.0);
  EXPECT_LT(std::abs(r[3].pt_norms[0]), 1e-10);
  EXPECT_TRUE(r[3].analytic_valid);
}

TEST(CriticalSweep, FrozenLevelsAtOnePercent) {
  // Reference: 50-digit root of the characteristic recurrence.
  struct Case {
    int n;
    double side;
    double level;
  };
  const Case cases[] = {{19, -1, 0.0781450260915097}, {19, 1, 0.0808168436407829}, {20, -1, 0.0433786151405286},
                        {20, 1, 0.0461525663520645},  {199, -1, 0.0203890573267916}, {199, 1, 0.029793026569244},
                        {200, -1, 0.0107836533155997}, {200, 1, 0.020563274080951}};
  for (const Case& c : cases) {
    const double gc = gamma_critical(c.n);
    const auto r = critical_sweep(ChainSpec(c.n, 0.0), {gc * (1 + c.side * 0.01)});
    EXPECT_NEAR(std::abs(r[0].two_levels[0]), c.level, 1e-10 * c.level) << "N=" << c.n;
  }
}

TEST(CriticalPair, OddChainExcludesZeroMode) {
  const CriticalPair p = critical_pair(ChainSpec(7, 1.0));
  EXPECT_GT(std::abs(p.modes[0].energy), 0.0);
  EXPECT_NEAR(p.modes[0].energy.real(), -p.modes[1].energy.real(), 1e-14);
}
