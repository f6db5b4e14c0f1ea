#pragma once

#include <vector>

#include "ptchain/bethe.hpp"
#include "ptchain/model.hpp"

namespace ptchain {

/// Amplitude vectors whose largest component is below this are null states.
inline constexpr double kNullAmplitude = 1e-10;

/// Unnormalized Bethe amplitude e^{ik(l-N0)} - eta(k) e^{-ik(l+N0)} with
/// eta(k) = (gamma e^{ik} - iJ) / (gamma e^{-ik} - iJ).
StateVector bethe_amplitude(const ChainSpec& spec, double k);

/// Same with zeta(k) = (gamma e^{ik} + iJ) / (gamma e^{-ik} + iJ), the H^dagger analogue.
StateVector dual_amplitude(const ChainSpec& spec, double k);

/// Closed-form denominator
/// |sqrt((1 + |eta|^2) sin(Nk)/sin(k) - 2 N eta e^{-ik(N+1)})|.
double closed_form_norm(const ChainSpec& spec, double k);

/// Eigenvector of H for a real root k: PT-symmetric, CPT self-product +1,
/// sign fixed by site 1 (Re >= 0, then Im >= 0). Throws NullState.
StateVector wavefunction_unbroken(const ChainSpec& spec, double k);

/// Eigenvector of H^dagger for a real root k, scaled so that
/// sum_l conj(g[l]) f[l] = 1 against wavefunction_unbroken(spec, k).
StateVector wavefunction_dual(const ChainSpec& spec, double k);

/// Broken-phase eigenvector for pi/2 + i*branch*kappa, unit Euclidean norm,
/// largest component real positive. Throws PhaseError unless gamma > gamma_c.
StateVector wavefunction_broken(const ChainSpec& spec, double kappa, int branch);

struct ModeState {
  Mode mode;
  StateVector state;
};

/// Right eigenvectors f (of H) and left eigenvectors g (of H^dagger), one per
/// mode, in the mode order of the spectral solution.
struct EigenBasis {
  ChainSpec spec;
  Phase phase;
  std::vector<ModeState> f_states;
  std::vector<ModeState> g_states;
};

/// Throws PhaseError for a Critical solution.
EigenBasis build_eigen_basis(const SpectralSolution& solution);
EigenBasis build_eigen_basis(const ChainSpec& spec, double tol = kDefaultRootTol);

struct COperator {
  ComplexMatrix matrix;
};

/// C(m,l) = sum_k f_k[m] f_k[l]. Unbroken phase only.
COperator build_c_operator(const EigenBasis& basis);

/// sum_l (C PT u)[l] v[l].
cplx cpt_inner(const COperator& c, const StateVector& u, const StateVector& v);

/// sum_l conj(u[N+1-l]) u[l].
cplx pt_norm(const StateVector& u);

/// ||H v - e v||_inf.
double eigen_residual(const ComplexMatrix& h, const StateVector& v, cplx e);

/// G[a][b] = cpt_inner(f_a, f_b).
ComplexMatrix cpt_gram(const COperator& c, const EigenBasis& basis);

/// G[a][b] = sum_l conj(g_a[l]) f_b[l].
ComplexMatrix biorthogonal_gram(const EigenBasis& basis);

/// P as a matrix (site reflection l -> N+1-l).
RealMatrix parity_matrix(int n_sites);

}  // namespace ptchain
