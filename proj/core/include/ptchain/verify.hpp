#pragma once

#include <string>
#include <vector>

#include "ptchain/metric.hpp"
#include "ptchain/model.hpp"
#include "ptchain/states.hpp"

namespace ptchain {

/// Largest |a_i - b_pi(i)| after matching the two multisets greedily by
/// increasing distance. Throws InvalidArgument on a size mismatch.
double matched_max_error(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// Residuals of the CPT construction (unbroken phase); each should vanish.
struct CptResiduals {
  double eigen_residual;   // max ||H f - E f||_inf
  double dual_residual;    // max ||H^dagger g - E g||_inf
  double cpt_gram;         // ||G_CPT - I||_inf
  double biorthogonal_gram;
  double c_squared;        // ||C^2 - I||
  double c_commutes_h;     // ||[C, H]||
  double c_commutes_pt;    // ||C PT v - PT C v|| on the basis vectors
};

CptResiduals cpt_residuals(const ChainSpec& spec, double tol = kDefaultRootTol);

/// Metric identities; "min_eigenvalue" should be positive, the rest vanish.
struct MetricResiduals {
  double hermitian;           // ||eta - eta^dagger||
  double min_eigenvalue;
  double conjugate_inverse;   // ||conj(eta) eta - I||
  double pt_invariance;       // ||P conj(eta) P - eta||
  double bisymmetry;          // ||P eta_r P - eta_r|| after the gauge
  double gauge_imaginary;     // imaginary residue of the gauged metric
  double r_conjugation;       // ||R eta_r R eta_r - I||
  double reciprocal_pairs;    // max |eps_n eps_pair(n) - 1|
  double determinant;         // |det eta - 1|
  double pseudo_hermiticity;  // ||eta H - H^dagger eta||
};

MetricResiduals metric_residuals(const MetricDecomposition& decomp);

/// Structure of the Hermitian equivalent.
struct HermitianResiduals {
  double spectrum;        // sorted eigenvalues of h vs sorted energies of H
  double symmetry;        // ||h - h^T||
  double imaginary;       // largest imaginary part before taking the real part
  double diagonal_blocks;
  double reflection;      // A reflection symmetry
};

HermitianResiduals hermitian_residuals(const ChainSpec& spec, const HermitianEquivalent& he);

/// A_ij - A_{N_A+1-j, N_B+1-i} (even N) or A_ij - A_{N_A+1-i, N_B+1-j} (odd N).
double reflection_residual(const HermitianEquivalent& he, bool odd_chain);

struct CheckResult {
  std::string name;
  int n_sites;
  double gamma;
  double value;
  double limit;
  bool passed;
  std::string error;  // set when the check threw
};

struct SuiteOptions {
  int n_max = 12;
  double hopping = 1.0;
  double tol = 1e-10;
  /// Multiples of gamma_c probed in the unbroken phase.
  std::vector<double> unbroken_fractions{0.3, 0.6, 0.9};
  /// Multiples of gamma_c probed in the broken phase (spectra only).
  std::vector<double> broken_fractions{1.3};
};

/// Runs every invariant check for N = 2..n_max; each failure is recorded
/// rather than thrown.
std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options);

}  // namespace ptchain
