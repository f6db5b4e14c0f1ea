#include "ptchain/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "ptchain/bethe.hpp"
#include "ptchain/error.hpp"
#include "ptchain/oracle.hpp"

namespace ptchain {

namespace {

constexpr double kIdentityTol = 1e-8;

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

double matched_max_error(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("cannot match " + std::to_string(a.size()) + " values against " + std::to_string(b.size()));
  }
  struct Candidate {
    double dist;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Candidate> all;
  all.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) all.push_back({std::abs(a[i] - b[j]), i, j});
  }
  std::stable_sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) { return x.dist < y.dist; });
  std::vector<bool> used_a(a.size(), false);
  std::vector<bool> used_b(b.size(), false);
  double worst = 0.0;
  for (const auto& c : all) {
    if (used_a[c.i] || used_b[c.j]) continue;
    used_a[c.i] = used_b[c.j] = true;
    worst = std::max(worst, c.dist);
  }
  return worst;
}

CptResiduals cpt_residuals(const ChainSpec& spec, double tol) {
  const EigenBasis basis = build_eigen_basis(spec, tol);
  const COperator c = build_c_operator(basis);
  const ComplexMatrix h = build_hamiltonian(spec);
  const ComplexMatrix hd = h.adjoint();
  const int n = spec.n_sites();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  CptResiduals r{};
  for (std::size_t a = 0; a < basis.f_states.size(); ++a) {
    const cplx e = basis.f_states[a].mode.energy;
    r.eigen_residual = std::max(r.eigen_residual, eigen_residual(h, basis.f_states[a].state, e));
    r.dual_residual = std::max(r.dual_residual, eigen_residual(hd, basis.g_states[a].state, std::conj(e)));
    const StateVector cv(ComplexVector(c.matrix * basis.f_states[a].state.values()));
    const StateVector ptv = apply_pt(basis.f_states[a].state);
    const ComplexVector lhs = c.matrix * ptv.values();
    r.c_commutes_pt = std::max(r.c_commutes_pt, (lhs - apply_pt(cv).values()).cwiseAbs().maxCoeff());
  }
  r.cpt_gram = max_abs(ComplexMatrix(cpt_gram(c, basis) - id));
  r.biorthogonal_gram = max_abs(ComplexMatrix(biorthogonal_gram(basis) - id));
  r.c_squared = max_abs(ComplexMatrix(c.matrix * c.matrix - id));
  r.c_commutes_h = max_abs(ComplexMatrix(c.matrix * h - h * c.matrix));
  return r;
}

MetricResiduals metric_residuals(const MetricDecomposition& d) {
  const int n = d.spec.n_sites();
  const ComplexMatrix& eta = d.eta;
  const ComplexMatrix h = build_hamiltonian(d.spec);
  const RealMatrix p = parity_matrix(n);
  const RealMatrix r = alternating_matrix(n);
  const ComplexMatrix pc = p.cast<cplx>();
  const RealMatrix id = RealMatrix::Identity(n, n);

  MetricResiduals m{};
  m.hermitian = max_abs(ComplexMatrix(eta - eta.adjoint()));
  const SymmetricEigensystem es = jacobi_eigensystem(d.eta_real);
  m.min_eigenvalue = es.values.minCoeff();
  m.conjugate_inverse = max_abs(ComplexMatrix(eta.conjugate() * eta - id.cast<cplx>()));
  m.pt_invariance = max_abs(ComplexMatrix(pc * eta.conjugate() * pc - eta));
  m.bisymmetry = max_abs(RealMatrix(p * d.eta_real * p - d.eta_real));
  const ComplexVector g = gauge_phases(n);
  const ComplexMatrix gauged = g.asDiagonal().toDenseMatrix().adjoint() * eta * g.asDiagonal();
  m.gauge_imaginary = gauged.imag().cwiseAbs().maxCoeff();
  m.r_conjugation = max_abs(RealMatrix(r * d.eta_real * r * d.eta_real - id));
  for (int i = 0; i < n; ++i) {
    m.reciprocal_pairs =
        std::max(m.reciprocal_pairs, std::abs(d.eigenvalues(i) * d.eigenvalues(d.pairing[i]) - 1.0));
  }
  m.determinant = std::abs(es.values.prod() - 1.0);
  m.pseudo_hermiticity = max_abs(ComplexMatrix(eta * h - h.adjoint() * eta));
  return m;
}

double reflection_residual(const HermitianEquivalent& he, bool odd_chain) {
  const RealMatrix& a = he.block_a;
  const int na = he.n_a;
  const int nb = he.n_b;
  double worst = 0.0;
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      double mirror = 0.0;
      if (odd_chain) {
        mirror = a(na - 1 - i, nb - 1 - j);
      } else {
        // Requires a square block; (N_A+1-j, N_B+1-i) in 1-based indices.
        mirror = a(na - 1 - j, nb - 1 - i);
      }
      worst = std::max(worst, std::abs(a(i, j) - mirror));
    }
  }
  return worst;
}

HermitianResiduals hermitian_residuals(const ChainSpec& spec, const HermitianEquivalent& he) {
  HermitianResiduals r{};
  const SymmetricEigensystem es = jacobi_eigensystem(0.5 * (he.h_matrix + he.h_matrix.transpose()));
  std::vector<double> energies;
  for (const auto& e : solve_spectrum(spec).energies()) energies.push_back(e.real());
  std::sort(energies.begin(), energies.end());
  for (int i = 0; i < spec.n_sites(); ++i) r.spectrum = std::max(r.spectrum, std::abs(es.values(i) - energies[i]));
  r.symmetry = max_abs(RealMatrix(he.h_matrix - he.h_matrix.transpose()));
  r.imaginary = he.imaginary_residue;
  r.diagonal_blocks = he.diagonal_block_residue;
  r.reflection = reflection_residual(he, spec.odd());
  return r;
}

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options) {
  if (options.n_max < 2) throw InvalidArgument("n_max must be at least 2");
  std::vector<CheckResult> out;

  auto guarded = [&](int n, double gamma, const std::string& scope,
                     const std::function<void(std::vector<CheckResult>&)>& body) {
    try {
      body(out);
    } catch (const std::exception& e) {
      out.push_back({scope, n, gamma, std::nan(""), 0.0, false, e.what()});
    }
  };
  auto add = [&](std::vector<CheckResult>& v, const char* name, int n, double gamma, double value, double limit) {
    v.push_back({name, n, gamma, value, limit, value <= limit, {}});
  };

  for (int n = 2; n <= options.n_max; ++n) {
    const double gc = gamma_critical(n, options.hopping);
    std::vector<double> gammas;
    for (double f : options.unbroken_fractions) gammas.push_back(f * gc);
    for (double f : options.broken_fractions) gammas.push_back(f * gc);

    for (double gamma : gammas) {
      const ChainSpec spec(n, gamma, options.hopping);
      const Phase phase = classify_phase(spec);
      if (phase == Phase::Critical) continue;

      guarded(n, gamma, "spectrum", [&](auto& v) {
        const SpectralSolution sol = solve_spectrum(spec, options.tol);
        const int real_count = static_cast<int>(std::count_if(sol.modes.begin(), sol.modes.end(),
                                                              [](const Mode& m) { return m.is_real(); }));
        const int expected = phase == Phase::Unbroken ? n : n - 2;
        add(v, "real_root_count", n, gamma, std::abs(real_count - expected), 0.0);
        if (n <= kOracleDenseLimit) {
          add(v, "oracle_spectrum", n, gamma, matched_max_error(sol.energies(), oracle_spectrum(spec)), kIdentityTol);
        }
        const auto es = sol.energies();
        const cplx trace = std::accumulate(es.begin(), es.end(), cplx(0.0, 0.0));
        add(v, "trace", n, gamma, std::abs(trace), kIdentityTol);
        const EigenBasis basis = build_eigen_basis(sol);
        const ComplexMatrix h = build_hamiltonian(spec);
        double worst = 0.0;
        for (const auto& fs : basis.f_states) worst = std::max(worst, eigen_residual(h, fs.state, fs.mode.energy));
        add(v, "eigen_residual", n, gamma, worst, kIdentityTol);
      });

      if (phase != Phase::Unbroken) continue;

      guarded(n, gamma, "cpt", [&](auto& v) {
        const CptResiduals r = cpt_residuals(spec, options.tol);
        add(v, "dual_residual", n, gamma, r.dual_residual, kIdentityTol);
        add(v, "cpt_gram", n, gamma, r.cpt_gram, kIdentityTol);
        add(v, "biorthogonal_gram", n, gamma, r.biorthogonal_gram, kIdentityTol);
        add(v, "c_squared", n, gamma, r.c_squared, kIdentityTol);
        add(v, "c_commutes_h", n, gamma, r.c_commutes_h, kIdentityTol);
        add(v, "c_commutes_pt", n, gamma, r.c_commutes_pt, kIdentityTol);
      });

      guarded(n, gamma, "metric", [&](auto& v) {
        const MetricDecomposition d = metric_decomposition(spec, options.tol);
        const MetricResiduals m = metric_residuals(d);
        add(v, "metric_hermitian", n, gamma, m.hermitian, kIdentityTol);
        add(v, "metric_positive", n, gamma, m.min_eigenvalue > 0.0 ? 0.0 : -m.min_eigenvalue, 0.0);
        add(v, "metric_conjugate_inverse", n, gamma, m.conjugate_inverse, kIdentityTol);
        add(v, "metric_pt_invariance", n, gamma, m.pt_invariance, kIdentityTol);
        add(v, "metric_bisymmetry", n, gamma, m.bisymmetry, kIdentityTol);
        add(v, "metric_gauge_imaginary", n, gamma, m.gauge_imaginary, kIdentityTol);
        add(v, "metric_r_conjugation", n, gamma, m.r_conjugation, kIdentityTol);
        add(v, "metric_reciprocal_pairs", n, gamma, m.reciprocal_pairs, kIdentityTol);
        add(v, "metric_determinant", n, gamma, m.determinant, kIdentityTol);
        add(v, "metric_pseudo_hermiticity", n, gamma, m.pseudo_hermiticity, kIdentityTol);

        const HermitianEquivalent he = hermitian_equivalent(d, build_hamiltonian(spec));
        const HermitianResiduals hr = hermitian_residuals(spec, he);
        add(v, "hermitian_spectrum", n, gamma, hr.spectrum, kIdentityTol);
        add(v, "hermitian_symmetry", n, gamma, hr.symmetry, 1e-9);
        add(v, "hermitian_imaginary", n, gamma, hr.imaginary, 1e-9);
        add(v, "hermitian_diagonal_blocks", n, gamma, hr.diagonal_blocks, kIdentityTol);
        add(v, "hermitian_reflection", n, gamma, hr.reflection, kIdentityTol);
        add(v, "sublattice_sizes", n, gamma, std::abs(std::abs(he.n_a - he.n_b) - (n % 2)), 0.0);
      });
    }
  }
  return out;
}

}  // namespace ptchain
