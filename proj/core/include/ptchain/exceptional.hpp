#pragma once

#include <array>
#include <vector>

#include "ptchain/bethe.hpp"
#include "ptchain/model.hpp"
#include "ptchain/states.hpp"

namespace ptchain {

/// Relative distance |gamma - gamma_c| / gamma_c inside which the asymptotic
/// formulas are considered valid.
inline constexpr double kAsymptoticWindow = 0.1;

/// alpha = (J^2 + gamma^2) / (gamma^2 - J^2).
double alpha_parameter(const ChainSpec& spec);

/// Unbroken side: delta = 1/sqrt(-N alpha) (N even), sqrt(3(alpha-N)/(N^3-alpha))
/// (N odd). Throws DomainError for gamma > gamma_c or a non-positive radicand.
double delta_approx(const ChainSpec& spec);

/// Broken side: kappa = 1/sqrt(N alpha) (N even), sqrt(3(N-alpha)/(N^3-alpha))
/// (N odd). Throws DomainError for gamma < gamma_c or a non-positive radicand.
double kappa_approx(const ChainSpec& spec);

/// Square-root law +-2J sqrt(c |gamma - gamma_c| / (N gamma_c)), c = 1 (N even)
/// or 3 (N odd). Returned as {+value, -value}.
std::array<double, 2> repulsion_law(const ChainSpec& spec);

/// The two levels that coalesce at gamma_c together with their eigenvectors.
struct CriticalPair {
  std::array<Mode, 2> modes;
  std::array<StateVector, 2> states;  // unit Euclidean norm
  double offset;                      // q = |k - pi/2| (unbroken) or kappa (broken)
};

/// Throws PhaseError inside the Critical band.
CriticalPair critical_pair(const ChainSpec& spec, double tol = kDefaultRootTol);

struct CriticalReport {
  double gamma;
  double gamma_offset;  // gamma - gamma_c
  bool skipped;         // inside the Critical band; numeric fields are NaN
  bool in_window;       // |gamma - gamma_c| <= kAsymptoticWindow * gamma_c
  bool analytic_valid;  // asymptotic radicand was positive
  std::array<cplx, 2> two_levels;
  std::array<cplx, 2> analytic_pair;
  double numeric_offset;  // q or kappa from the Bethe solution
  double delta_or_kappa;  // asymptotic estimate
  double alpha;
  double coalescence_gap;  // 1 - |<u,v>| / (|u| |v|)
  std::array<cplx, 2> pt_norms;
};

/// One report per gamma, in input order. `spec.gamma()` is ignored.
std::vector<CriticalReport> critical_sweep(const ChainSpec& spec, const std::vector<double>& gamma_values,
                                           double tol = kDefaultRootTol);

}  // namespace ptchain
