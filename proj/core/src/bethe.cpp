#include "ptchain/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail/bracket.hpp"
#include "ptchain/error.hpp"
#include "ptchain/states.hpp"

namespace ptchain {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kSamplesPerSite = 50;
constexpr int kMaxRefinements = 4;

// G is even (N even) or odd (N odd) about k = pi/2. In q = k - pi/2 the
// nontrivial part reduces to
//   N even: J^2 cos((N+1) q) - gamma^2 cos((N-1) q)
//   N odd:  gamma^2 sin((N-1) q) - J^2 sin((N+1) q)   (root q = 0 divided out)
// so the pair that coalesces at gamma_c is a single simple root next to q = 0.
struct ReducedQuantization {
  double n;
  double g2;
  double j2;
  bool odd;

  explicit ReducedQuantization(const ChainSpec& spec)
      : n(spec.n_sites()),
        g2(spec.gamma() * spec.gamma()),
        j2(spec.hopping() * spec.hopping()),
        odd(spec.odd()) {}

  // Value whose sign matches the reduced function on [0, pi/2).
  double sign_value(double q) const {
    if (!odd) return j2 * std::cos((n + 1) * q) - g2 * std::cos((n - 1) * q);
    if (q == 0.0) return g2 * (n - 1) - j2 * (n + 1);
    return g2 * std::sin((n - 1) * q) - j2 * std::sin((n + 1) * q);
  }

  std::pair<double, double> newton(double q) const {
    if (!odd) {
      return {j2 * std::cos((n + 1) * q) - g2 * std::cos((n - 1) * q),
              -j2 * (n + 1) * std::sin((n + 1) * q) + g2 * (n - 1) * std::sin((n - 1) * q)};
    }
    return {g2 * std::sin((n - 1) * q) - j2 * std::sin((n + 1) * q),
            g2 * (n - 1) * std::cos((n - 1) * q) - j2 * (n + 1) * std::cos((n + 1) * q)};
  }
};

bool is_null_state(const ChainSpec& spec, double k) {
  return bethe_amplitude(spec, k).values().cwiseAbs().maxCoeff() < kNullAmplitude;
}

std::vector<double> scan_real_momenta(const ChainSpec& spec, double tol, int samples) {
  const ReducedQuantization f(spec);
  const double step = kHalfPi / samples;

  // q = pi/2 is excluded: it maps to k = 0, pi where G vanishes identically.
  std::vector<double> q_roots;
  bool double_root_at_center = false;
  double prev = f.sign_value(0.0);
  if (prev == 0.0) double_root_at_center = true;
  for (int j = 1; j < samples; ++j) {
    const double q_hi = j * step;
    const double cur = f.sign_value(q_hi);
    if (cur == 0.0) {
      q_roots.push_back(q_hi);
    } else if (prev != 0.0 && ((prev < 0.0) != (cur < 0.0))) {
      q_roots.push_back(detail::bracketed_root([&](double q) { return f.sign_value(q); },
                                               [&](double q) { return f.newton(q); }, q_hi - step, q_hi,
                                               tol));
    }
    prev = cur;
  }

  std::vector<double> ks;
  if (spec.odd()) ks.push_back(kHalfPi);
  if (double_root_at_center) {
    ks.push_back(kHalfPi);
    ks.push_back(kHalfPi);
  }
  for (double q : q_roots) {
    ks.push_back(kHalfPi - q);
    ks.push_back(kHalfPi + q);
  }
  std::erase_if(ks, [&](double k) { return is_null_state(spec, k); });
  std::sort(ks.begin(), ks.end());
  return ks;
}

int base_samples(const ChainSpec& spec) { return std::max(kSamplesPerSite * spec.n_sites(), 256); }

}  // namespace

Mode Mode::from_real_k(double k, double hopping) { return Mode{RealK{k}, cplx(-2.0 * hopping * std::cos(k), 0.0)}; }

Mode Mode::from_kappa(double kappa, int branch, double hopping) {
  const int sign = branch >= 0 ? 1 : -1;
  return Mode{ComplexK{kappa, sign}, cplx(0.0, sign * 2.0 * hopping * std::sinh(kappa))};
}

cplx Mode::momentum() const {
  if (const auto* r = std::get_if<RealK>(&kind)) return {r->k, 0.0};
  const auto& c = std::get<ComplexK>(kind);
  return {kHalfPi, c.branch * c.kappa};
}

std::vector<cplx> SpectralSolution::energies() const {
  std::vector<cplx> out;
  out.reserve(modes.size());
  for (const auto& m : modes) out.push_back(m.energy);
  return out;
}

MomentumLabel momentum_label(const ChainSpec& spec, double k) {
  const double g2 = spec.gamma() * spec.gamma();
  const double j2 = spec.hopping() * spec.hopping();
  const double theta = std::atan((g2 - j2) / (g2 + j2) * std::tan(k));
  const int n_k = static_cast<int>(std::lround((spec.n_sites() * k - theta) / std::numbers::pi));
  return {n_k, theta};
}

double quantization_residual(const ChainSpec& spec, double k) {
  const double n = spec.n_sites();
  const double g = spec.gamma();
  const double j = spec.hopping();
  return g * g * std::sin(k * (n - 1)) + j * j * std::sin(k * (n + 1));
}

std::vector<double> solve_real_momenta(const ChainSpec& spec, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("root tolerance must be positive");
  const int n = spec.n_sites();
  int samples = base_samples(spec);
  std::vector<double> ks;
  for (int attempt = 0; attempt < kMaxRefinements; ++attempt, samples *= 2) {
    ks = scan_real_momenta(spec, tol, samples);
    const int count = static_cast<int>(ks.size());
    if (count == n || count == n - 2) return ks;
  }
  throw RootCountMismatch("found " + std::to_string(ks.size()) + " real Bethe roots for N=" +
                          std::to_string(n) + "; expected N or N-2");
}

int real_root_count(const ChainSpec& spec) {
  return static_cast<int>(scan_real_momenta(spec, kDefaultRootTol, base_samples(spec)).size());
}

double solve_kappa(const ChainSpec& spec, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("root tolerance must be positive");
  const double gc = gamma_critical(spec);
  if (!(spec.gamma() > gc)) {
    throw PhaseError("solve_kappa requires gamma > gamma_c (" + std::to_string(gc) + ")");
  }
  const double n = spec.n_sites();
  const double g2 = spec.gamma() * spec.gamma();
  const double j2 = spec.hopping() * spec.hopping();
  const bool odd = spec.odd();

  // Residuals divided by exp((N+1) kappa) / 2 so that large N cannot overflow.
  //   odd:  J^2 sinh((N+1)k) - gamma^2 sinh((N-1)k)
  //   even: J^2 cosh((N+1)k) - gamma^2 cosh((N-1)k)
  auto scaled = [=](double k) -> std::pair<double, double> {
    const double a = std::exp(-2.0 * (n + 1) * k);
    const double b = std::exp(-2.0 * k);
    const double c = std::exp(-2.0 * (n - 1) * k);
    if (odd) {
      const double value = -j2 * std::expm1(-2.0 * (n + 1) * k) + g2 * b * std::expm1(-2.0 * (n - 1) * k);
      const double slope = 2.0 * (n + 1) * j2 * a - 2.0 * g2 * b * std::expm1(-2.0 * (n - 1) * k) -
                           2.0 * (n - 1) * g2 * b * c;
      return {value, slope};
    }
    const double value = j2 * (1.0 + a) - g2 * b * (1.0 + c);
    const double slope = -2.0 * (n + 1) * j2 * a + 2.0 * g2 * b * (1.0 + c) + 2.0 * (n - 1) * g2 * b * c;
    return {value, slope};
  };
  // The odd residual vanishes at kappa = 0; its sign just above zero is that
  // of the first-order coefficient J^2 (N+1) - gamma^2 (N-1).
  auto sign_fn = [&](double k) {
    if (odd && k == 0.0) return j2 * (n + 1) - g2 * (n - 1);
    return scaled(k).first;
  };

  const double lo = 0.0;
  const double hi = std::log(spec.gamma() / spec.hopping()) + 1.0;
  if (!((sign_fn(lo) < 0.0) && (sign_fn(hi) > 0.0))) {
    throw NonConvergence("kappa residual does not change sign on (0, ln(gamma/J) + 1]");
  }
  return detail::bracketed_root(sign_fn, scaled, lo, hi, tol);
}

SpectralSolution solve_spectrum(const ChainSpec& spec, double tol) {
  const Phase phase = classify_phase(spec, tol);
  const double hop = spec.hopping();
  SpectralSolution sol{spec, {}, phase};

  std::vector<double> ks;
  if (phase == Phase::Critical) {
    ks = scan_real_momenta(spec, tol, base_samples(spec));
  } else {
    ks = solve_real_momenta(spec, tol);
  }
  for (double k : ks) sol.modes.push_back(Mode::from_real_k(k, hop));

  const bool has_pair = static_cast<int>(ks.size()) == spec.n_sites() - 2;
  if (phase == Phase::Broken || (phase == Phase::Critical && has_pair && spec.gamma() > gamma_critical(spec))) {
    if (static_cast<int>(ks.size()) != spec.n_sites() - 2) {
      throw RootCountMismatch("broken phase must carry N-2 real roots");
    }
    const double kappa = solve_kappa(spec, tol);
    sol.modes.push_back(Mode::from_kappa(kappa, +1, hop));
    sol.modes.push_back(Mode::from_kappa(kappa, -1, hop));
  } else if (phase == Phase::Unbroken && static_cast<int>(ks.size()) != spec.n_sites()) {
    throw RootCountMismatch("unbroken phase must carry N real roots");
  }

  std::stable_sort(sol.modes.begin(), sol.modes.end(), [](const Mode& a, const Mode& b) {
    if (a.energy.real() != b.energy.real()) return a.energy.real() < b.energy.real();
    return a.energy.imag() < b.energy.imag();
  });
  return sol;
}

double locate_gamma_critical(int n_sites, double hopping, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  double lo = 0.0;
  double hi = 2.0 * hopping;
  if (real_root_count(ChainSpec(n_sites, hi, hopping)) != n_sites - 2) {
    throw RootCountMismatch("no broken phase below gamma = 2J");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (real_root_count(ChainSpec(n_sites, mid, hopping)) == n_sites) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ptchain
