#pragma once

#include <array>
#include <vector>

#include "ptchain/model.hpp"

namespace ptchain {

inline constexpr int kMaxRootIterations = 1000;
/// Above this size only the critical levels are computed, from the recurrence.
inline constexpr int kOracleDenseLimit = 64;

/// det(H - lambda I) = sum_i coefficients[i] lambda^i, leading coefficient (-1)^N.
struct CharPoly {
  std::vector<cplx> coefficients;

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  /// Compensated Horner evaluation.
  cplx operator()(cplx z) const;
};

/// Three-term recurrence D_n = (d_n - lambda) D_{n-1} - J^2 D_{n-2}.
CharPoly char_poly(const ChainSpec& spec);

/// All roots by Aberth iteration from a circle of radius 1 + max|c_i / c_N|.
/// Stops when the largest correction is below tol * max(1, |z|); throws
/// NonConvergence after kMaxRootIterations.
std::vector<cplx> poly_roots(const CharPoly& p, double tol = 1e-14);

/// Eigenvalues of spec through char_poly + poly_roots, sorted by (Re, Im).
/// Throws InvalidArgument for N > kOracleDenseLimit.
std::vector<cplx> oracle_spectrum(const ChainSpec& spec, double tol = 1e-14);

/// Unit vector with ||H v - lambda v||_inf < 10 tol by inverse iteration with a
/// small deterministic complex shift; site-1 phase fixed as for the Bethe states.
/// Throws SingularSolve after 3 reshifts, NonConvergence if the residual target
/// is not reached.
StateVector oracle_eigenvector(const ComplexMatrix& h, cplx lambda, double tol = 1e-10);

/// D_N(lambda) and its derivative, scaled by a common positive factor to stay
/// finite. Only the ratio and the sign pattern are meaningful.
std::array<cplx, 2> char_poly_tridiagonal(const ChainSpec& spec, cplx lambda);

/// The two levels that coalesce at gamma_c (smallest non-zero |E| for real
/// spectra, the imaginary pair otherwise), located by sign bracketing and
/// Newton on the recurrence along the real or imaginary axis. Works for any N.
std::array<cplx, 2> oracle_critical_levels(const ChainSpec& spec, double tol = 1e-14);

}  // namespace ptchain
