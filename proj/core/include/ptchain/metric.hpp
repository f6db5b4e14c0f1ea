#pragma once

#include <vector>

#include "ptchain/jacobi.hpp"
#include "ptchain/model.hpp"
#include "ptchain/states.hpp"

namespace ptchain {

/// Eigenvalues closer than this (relative) form one degenerate cluster.
inline constexpr double kClusterTol = 1e-10;
/// gamma used for the continuity reference when the metric is fully degenerate.
inline constexpr double kReferenceGamma = 1e-6;

/// eta[m][n] = sum_k g_k[m] conj(g_k[n]). Unbroken phase only.
ComplexMatrix build_metric(const EigenBasis& basis);

/// Diagonal of the gauge D with D^dagger eta D real, symmetric and bisymmetric:
/// d_l = i^{l mod 2} s_l, s_l = 1 except for odd N on the right half where
/// s_{N+1-m} = (-1)^{N0} (-1)^m.
ComplexVector gauge_phases(int n_sites);

/// D^dagger eta D. Throws GaugeError if the imaginary residue exceeds 1e-8.
RealMatrix gauge_real(const ComplexMatrix& eta);

/// R = diag((-1)^l).
RealMatrix alternating_matrix(int n_sites);

struct MetricDecomposition {
  ChainSpec spec;
  ComplexMatrix eta;     // before the gauge
  RealMatrix eta_real;   // after the gauge
  RealVector eigenvalues;  // canonical order: sublattice A, then B
  RealMatrix basis;        // column n is |eps_n>, real, parity definite
  std::vector<int> pairing;       // basis[n] = pairing_sign[n] * R basis[pairing[n]]
  std::vector<int> pairing_sign;
  int n_a;
  int n_b;
};

/// Canonical metric basis of eta (as returned by build_metric).
/// Throws DegeneracyError if parity or reciprocal pairing cannot be
/// established.
MetricDecomposition canonical_basis(const ChainSpec& spec, const ComplexMatrix& eta);

/// Full pipeline: spectrum, dual basis, metric, canonical basis.
MetricDecomposition metric_decomposition(const ChainSpec& spec, double tol = kDefaultRootTol);

struct Coupling {
  int i;  // 1-based row in A
  int j;  // 1-based column in A
  double lambda;
};

struct HermitianEquivalent {
  RealMatrix h_matrix;
  RealMatrix block_a;  // n_a x n_b
  std::vector<Coupling> couplings;  // row-major over A
  int n_a;
  int n_b;
  double imaginary_residue;      // largest |Im h| before taking the real part
  double diagonal_block_residue; // largest entry of the A-A and B-B blocks
};

/// h_mn = sqrt(eps_m / eps_n) <eps_m|H'|eps_n> with H' the gauged H, then
/// |eps_n> -> i |eps_n> on sublattice B. Throws StructureError if the result
/// is not real with vanishing diagonal blocks (residue > 1e-6).
HermitianEquivalent hermitian_equivalent(const MetricDecomposition& decomp, const ComplexMatrix& h);

HermitianEquivalent hermitian_equivalent(const ChainSpec& spec, double tol = kDefaultRootTol);

}  // namespace ptchain
