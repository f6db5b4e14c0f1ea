#pragma once

#include <numbers>
#include <variant>
#include <vector>

#include "ptchain/model.hpp"

namespace ptchain {

/// Root tolerance used when callers do not pass one.
inline constexpr double kDefaultRootTol = 1e-12;

/// Real quasimomentum k in (0, pi).
struct RealK {
  double k;
};

/// Complex quasimomentum pi/2 + i * branch * kappa, kappa > 0, branch = +-1.
struct ComplexK {
  double kappa;
  int branch;
};

/// One eigen-solution of the chain: quasimomentum and energy (units of J).
struct Mode {
  std::variant<RealK, ComplexK> kind;
  cplx energy;

  /// energy = -2 J cos k.
  static Mode from_real_k(double k, double hopping);
  /// energy = branch * 2 i J sinh(kappa).
  static Mode from_kappa(double kappa, int branch, double hopping);

  bool is_real() const noexcept { return std::holds_alternative<RealK>(kind); }
  cplx momentum() const;
};

struct SpectralSolution {
  ChainSpec spec;
  std::vector<Mode> modes;  // sorted by (Re E, Im E)
  Phase phase;

  std::vector<cplx> energies() const;
};

/// Decomposition k = (n_k pi + theta_k) / N with
/// theta_k = atan(((gamma^2 - J^2)/(gamma^2 + J^2)) tan k).
struct MomentumLabel {
  int n_k;
  double theta;
};

MomentumLabel momentum_label(const ChainSpec& spec, double k);

/// Quantization function G(k) = gamma^2 sin(k(N-1)) + J^2 sin(k(N+1)).
double quantization_residual(const ChainSpec& spec, double k);

/// All real Bethe roots in (0, pi) carrying a non-null state, ascending.
/// Throws RootCountMismatch when the count is neither N nor N-2.
std::vector<double> solve_real_momenta(const ChainSpec& spec, double tol = kDefaultRootTol);

/// Number of real roots found, without the N / N-2 consistency check.
int real_root_count(const ChainSpec& spec);

/// The kappa > 0 of the complex pair pi/2 +- i kappa. Broken phase only.
double solve_kappa(const ChainSpec& spec, double tol = kDefaultRootTol);

/// Complete mode list. `tol` is both the root tolerance and the half-width of
/// the Critical band; inside the band the modes are best effort.
SpectralSolution solve_spectrum(const ChainSpec& spec, double tol = kDefaultRootTol);

/// Locates gamma_c by bisection on the real-root count.
double locate_gamma_critical(int n_sites, double hopping, double tol);

}  // namespace ptchain
