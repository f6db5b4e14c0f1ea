#include "ptchain/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ptchain/error.hpp"

namespace ptchain {

namespace {

constexpr cplx kI(0.0, 1.0);

// Shared by f (signed_gamma = gamma) and g (signed_gamma = -gamma).
cplx anisotropy(double signed_gamma, double hopping, double k) {
  return (signed_gamma * std::exp(kI * k) - kI * hopping) / (signed_gamma * std::exp(-kI * k) - kI * hopping);
}

StateVector amplitude(int n_sites, double signed_gamma, double hopping, double k) {
  const double n0 = 0.5 * (n_sites + 1);
  const cplx eta = anisotropy(signed_gamma, hopping, k);
  StateVector v(n_sites);
  for (int l = 1; l <= n_sites; ++l) {
    v.site(l) = std::exp(kI * (k * (l - n0))) - eta * std::exp(-kI * (k * (l + n0)));
  }
  return v;
}

double max_abs(const StateVector& v) { return v.values().cwiseAbs().maxCoeff(); }

cplx bilinear(const ComplexVector& a, const ComplexVector& b) { return (a.array() * b.array()).sum(); }

// Multiplies by +-1 so that site 1 has Re >= 0 (Im >= 0 when Re vanishes).
void fix_site_one_sign(StateVector& v) {
  const cplx s = v.site(1);
  const double scale = max_abs(v);
  const double cut = 1e-12 * scale;
  const bool flip = std::abs(s.real()) > cut ? s.real() < 0.0 : s.imag() < -cut;
  if (flip) v.values() = -v.values();
}

}  // namespace

StateVector bethe_amplitude(const ChainSpec& spec, double k) {
  return amplitude(spec.n_sites(), spec.gamma(), spec.hopping(), k);
}

StateVector dual_amplitude(const ChainSpec& spec, double k) {
  return amplitude(spec.n_sites(), -spec.gamma(), spec.hopping(), k);
}

double closed_form_norm(const ChainSpec& spec, double k) {
  const double n = spec.n_sites();
  const cplx eta = anisotropy(spec.gamma(), spec.hopping(), k);
  const cplx inner = (1.0 + std::norm(eta)) * std::sin(n * k) / std::sin(k) - 2.0 * n * eta * std::exp(-kI * (k * (n + 1)));
  return std::abs(std::sqrt(inner));
}

StateVector wavefunction_unbroken(const ChainSpec& spec, double k) {
  StateVector f = bethe_amplitude(spec, k);
  if (max_abs(f) < kNullAmplitude) throw NullState("Bethe amplitude vanishes at k = " + std::to_string(k));
  f.values() /= closed_form_norm(spec, k);

  // Rotate into the PT-symmetric gauge: PT(a f) = a f for a = sqrt(<f|PT f>/<f|f>).
  const ComplexVector& fv = f.values();
  const cplx c = fv.dot(apply_pt(fv)) / fv.squaredNorm();
  f.values() *= std::sqrt(c / std::abs(c));

  const cplx s = bilinear(f.values(), f.values());
  if (std::abs(s) == 0.0) throw NullState("state has zero PT norm at k = " + std::to_string(k));
  f.values() /= std::sqrt(std::abs(s));
  fix_site_one_sign(f);
  return f;
}

StateVector wavefunction_dual(const ChainSpec& spec, double k) {
  const StateVector f = wavefunction_unbroken(spec, k);
  StateVector g = dual_amplitude(spec, k);
  if (max_abs(g) < kNullAmplitude) throw NullState("dual amplitude vanishes at k = " + std::to_string(k));
  const cplx overlap = g.values().dot(f.values());
  g.values() /= std::conj(overlap);
  return g;
}

StateVector wavefunction_broken(const ChainSpec& spec, double kappa, int branch) {
  if (!(spec.gamma() > gamma_critical(spec))) throw PhaseError("broken-phase state requested with gamma <= gamma_c");
  if (!(kappa > 0.0)) throw InvalidArgument("kappa must be positive");
  const int n = spec.n_sites();
  const double n0 = spec.center();
  const double s = branch >= 0 ? 1.0 : -1.0;
  const double j = spec.hopping();
  const double g = spec.gamma();
  const double rho = (j - g * std::exp(-s * kappa)) / (j + g * std::exp(s * kappa));

  // f[l] = e^{s kappa N0} (i^l e^{-s kappa l} - (-i)^l rho e^{s kappa l});
  // every exponent is shifted by its maximum over l to stay finite.
  auto ex_a = [&](int l) { return s * kappa * (n0 - l); };
  auto ex_b = [&](int l) { return s * kappa * (n0 + l); };
  double shift = -std::numeric_limits<double>::infinity();
  for (int l = 1; l <= n; ++l) shift = std::max({shift, ex_a(l), ex_b(l)});

  StateVector f(n);
  cplx ip(1.0, 0.0);
  cplx im(1.0, 0.0);
  for (int l = 1; l <= n; ++l) {
    ip *= kI;
    im *= -kI;
    f.site(l) = ip * std::exp(ex_a(l) - shift) - im * rho * std::exp(ex_b(l) - shift);
  }
  const double norm = f.values().norm();
  if (!(norm > 0.0)) throw NullState("broken-phase amplitude vanishes");
  f.values() /= norm;

  Eigen::Index big = 0;
  f.values().cwiseAbs().maxCoeff(&big);
  const cplx ref = f.values()(big);
  f.values() *= std::conj(ref) / std::abs(ref);
  return f;
}

EigenBasis build_eigen_basis(const SpectralSolution& solution) {
  if (solution.phase == Phase::Critical) throw PhaseError("eigenbasis is defective at the critical point");
  EigenBasis basis{solution.spec, solution.phase, {}, {}};
  for (const Mode& mode : solution.modes) {
    if (const auto* r = std::get_if<RealK>(&mode.kind)) {
      basis.f_states.push_back({mode, wavefunction_unbroken(solution.spec, r->k)});
      basis.g_states.push_back({mode, wavefunction_dual(solution.spec, r->k)});
      continue;
    }
    const auto& c = std::get<ComplexK>(mode.kind);
    StateVector f = wavefunction_broken(solution.spec, c.kappa, c.branch);
    // H^dagger = conj(H), so conj(f) is the left partner; scale to <g|f> = 1.
    const cplx s = bilinear(f.values(), f.values());
    if (std::abs(s) < kNullAmplitude) throw NullState("broken-phase state is self-orthogonal");
    StateVector g(ComplexVector(f.values().conjugate() / std::conj(s)));
    basis.f_states.push_back({mode, std::move(f)});
    basis.g_states.push_back({mode, std::move(g)});
  }
  return basis;
}

EigenBasis build_eigen_basis(const ChainSpec& spec, double tol) {
  return build_eigen_basis(solve_spectrum(spec, tol));
}

COperator build_c_operator(const EigenBasis& basis) {
  if (basis.phase != Phase::Unbroken) throw PhaseError("C operator exists only in the unbroken phase");
  const int n = basis.spec.n_sites();
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (const auto& fs : basis.f_states) c += fs.state.values() * fs.state.values().transpose();
  return {c};
}

cplx cpt_inner(const COperator& c, const StateVector& u, const StateVector& v) {
  const ComplexVector cptu = c.matrix * apply_pt(u.values());
  return bilinear(cptu, v.values());
}

cplx pt_norm(const StateVector& u) { return bilinear(apply_pt(u.values()), u.values()); }

double eigen_residual(const ComplexMatrix& h, const StateVector& v, cplx e) {
  return (h * v.values() - e * v.values()).cwiseAbs().maxCoeff();
}

ComplexMatrix cpt_gram(const COperator& c, const EigenBasis& basis) {
  const auto m = static_cast<Eigen::Index>(basis.f_states.size());
  ComplexMatrix gram(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) gram(a, b) = cpt_inner(c, basis.f_states[a].state, basis.f_states[b].state);
  }
  return gram;
}

ComplexMatrix biorthogonal_gram(const EigenBasis& basis) {
  const auto m = static_cast<Eigen::Index>(basis.f_states.size());
  ComplexMatrix gram(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      gram(a, b) = basis.g_states[a].state.values().dot(basis.f_states[b].state.values());
    }
  }
  return gram;
}

RealMatrix parity_matrix(int n_sites) {
  RealMatrix p = RealMatrix::Zero(n_sites, n_sites);
  for (int l = 0; l < n_sites; ++l) p(l, n_sites - 1 - l) = 1.0;
  return p;
}

}  // namespace ptchain
