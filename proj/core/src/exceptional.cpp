#include "ptchain/exceptional.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ptchain/error.hpp"

namespace ptchain {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double checked_sqrt(double radicand, const char* what) {
  if (!(radicand > 0.0)) throw DomainError(std::string(what) + ": asymptotic radicand is not positive");
  return std::sqrt(radicand);
}

}  // namespace

double alpha_parameter(const ChainSpec& spec) {
  const double g2 = spec.gamma() * spec.gamma();
  const double j2 = spec.hopping() * spec.hopping();
  return (j2 + g2) / (g2 - j2);
}

double delta_approx(const ChainSpec& spec) {
  const double gc = gamma_critical(spec);
  if (spec.gamma() > gc) throw DomainError("delta_approx requires gamma <= gamma_c");
  if (spec.gamma() == gc) return 0.0;
  const double n = spec.n_sites();
  const double a = alpha_parameter(spec);
  if (!spec.odd()) return 1.0 / checked_sqrt(-n * a, "delta_approx");
  return checked_sqrt(3.0 * (a - n) / (n * n * n - a), "delta_approx");
}

double kappa_approx(const ChainSpec& spec) {
  const double gc = gamma_critical(spec);
  if (spec.gamma() < gc) throw DomainError("kappa_approx requires gamma >= gamma_c");
  if (spec.gamma() == gc) return 0.0;
  const double n = spec.n_sites();
  const double a = alpha_parameter(spec);
  if (!spec.odd()) return 1.0 / checked_sqrt(n * a, "kappa_approx");
  return checked_sqrt(3.0 * (n - a) / (n * n * n - a), "kappa_approx");
}

std::array<double, 2> repulsion_law(const ChainSpec& spec) {
  const double gc = gamma_critical(spec);
  const double c = spec.odd() ? 3.0 : 1.0;
  const double v = 2.0 * spec.hopping() * std::sqrt(c * std::abs(spec.gamma() - gc) / (spec.n_sites() * gc));
  return {v, -v};
}

CriticalPair critical_pair(const ChainSpec& spec, double tol) {
  const SpectralSolution sol = solve_spectrum(spec, tol);
  if (sol.phase == Phase::Critical) throw PhaseError("critical pair is defective inside the Critical band");

  if (sol.phase == Phase::Broken) {
    const Mode* plus = nullptr;
    const Mode* minus = nullptr;
    for (const auto& m : sol.modes) {
      if (const auto* c = std::get_if<ComplexK>(&m.kind)) (c->branch > 0 ? plus : minus) = &m;
    }
    const double kappa = std::get<ComplexK>(plus->kind).kappa;
    return {{*plus, *minus},
            {wavefunction_broken(spec, kappa, +1), wavefunction_broken(spec, kappa, -1)},
            kappa};
  }

  // Unbroken: the pair pi/2 +- q with the smallest q > 0.
  constexpr double half_pi = std::numbers::pi / 2.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : sol.modes) {
    const double q = std::abs(std::get<RealK>(m.kind).k - half_pi);
    if (q > 0.0 && q < best) best = q;
  }
  if (!std::isfinite(best)) throw RootCountMismatch("no non-zero level pair found");
  const double k_lo = half_pi - best;
  const double k_hi = half_pi + best;
  // Re-derive the partner from the symmetric root so both states share q exactly.
  auto unit = [&](double k) {
    StateVector v = wavefunction_unbroken(spec, k);
    v.values().normalize();
    return v;
  };
  return {{Mode::from_real_k(k_hi, spec.hopping()), Mode::from_real_k(k_lo, spec.hopping())},
          {unit(k_hi), unit(k_lo)},
          best};
}

std::vector<CriticalReport> critical_sweep(const ChainSpec& spec, const std::vector<double>& gamma_values,
                                           double tol) {
  const double gc = gamma_critical(spec);
  std::vector<CriticalReport> out;
  out.reserve(gamma_values.size());
  for (double gamma : gamma_values) {
    const ChainSpec s = spec.with_gamma(gamma);
    CriticalReport r{};
    r.gamma = gamma;
    r.gamma_offset = gamma - gc;
    r.in_window = std::abs(gamma - gc) <= kAsymptoticWindow * gc;
    r.alpha = alpha_parameter(s);
    r.two_levels = {cplx(kNaN, kNaN), cplx(kNaN, kNaN)};
    r.analytic_pair = r.two_levels;
    r.pt_norms = r.two_levels;
    r.numeric_offset = kNaN;
    r.delta_or_kappa = kNaN;
    r.coalescence_gap = kNaN;

    const Phase phase = classify_phase(s, tol);
    if (phase == Phase::Critical) {
      r.skipped = true;
      out.push_back(r);
      continue;
    }

    const CriticalPair pair = critical_pair(s, tol);
    r.two_levels = {pair.modes[0].energy, pair.modes[1].energy};
    r.numeric_offset = pair.offset;
    const auto& u = pair.states[0].values();
    const auto& v = pair.states[1].values();
    r.coalescence_gap = std::max(0.0, 1.0 - std::abs(u.dot(v)) / (u.norm() * v.norm()));
    r.pt_norms = {pt_norm(pair.states[0]), pt_norm(pair.states[1])};

    const double hop = s.hopping();
    try {
      if (phase == Phase::Unbroken) {
        r.delta_or_kappa = delta_approx(s);
        const double e = 2.0 * hop * std::sin(r.delta_or_kappa);
        r.analytic_pair = {cplx(e, 0.0), cplx(-e, 0.0)};
      } else {
        r.delta_or_kappa = kappa_approx(s);
        const double e = 2.0 * hop * std::sinh(r.delta_or_kappa);
        r.analytic_pair = {cplx(0.0, e), cplx(0.0, -e)};
      }
      r.analytic_valid = true;
    } catch (const DomainError&) {
      r.analytic_valid = false;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace ptchain
