#include "ptchain/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "detail/bracket.hpp"
#include "ptchain/error.hpp"

namespace ptchain {

namespace {

// Error-free transformations for double-double arithmetic.
struct DD {
  double hi;
  double lo;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return two_sum(s.hi, s.lo);
}

DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return two_sum(p.hi, p.lo);
}

DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

struct CDD {
  DD re;
  DD im;
};

CDD cdd_mul(CDD a, CDD b) {
  return {dd_add(dd_mul(a.re, b.re), dd_neg(dd_mul(a.im, b.im))), dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

CDD cdd_add(CDD a, CDD b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

CDD to_cdd(cplx z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

cplx to_cplx(CDD z) { return {z.re.hi + z.re.lo, z.im.hi + z.im.lo}; }

// Value and derivative in double-double Horner.
std::array<cplx, 2> horner_with_derivative(const std::vector<cplx>& c, cplx z) {
  const CDD zz = to_cdd(z);
  CDD p = to_cdd(c.back());
  CDD dp = to_cdd(0.0);
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    dp = cdd_add(cdd_mul(dp, zz), p);
    p = cdd_add(cdd_mul(p, zz), to_cdd(c[i]));
  }
  return {to_cplx(p), to_cplx(dp)};
}

void fix_site_one_phase(StateVector& v) {
  const double scale = v.values().cwiseAbs().maxCoeff();
  const cplx s = v.site(1);
  if (std::abs(s) > 1e-12 * scale) {
    v.values() *= std::conj(s) / std::abs(s);
    return;
  }
  Eigen::Index big = 0;
  v.values().cwiseAbs().maxCoeff(&big);
  const cplx ref = v.values()(big);
  v.values() *= std::conj(ref) / std::abs(ref);
}

constexpr double kRescale = 1e100;

}  // namespace

cplx CharPoly::operator()(cplx z) const { return horner_with_derivative(coefficients, z)[0]; }

CharPoly char_poly(const ChainSpec& spec) {
  const int n = spec.n_sites();
  const double j2 = spec.hopping() * spec.hopping();
  auto diag = [&](int l) -> cplx {
    if (l == 1) return {0.0, spec.gamma()};
    if (l == n) return {0.0, -spec.gamma()};
    return {0.0, 0.0};
  };
  // D_{n-2}, D_{n-1} as coefficient lists in lambda.
  std::vector<cplx> prev{cplx(1.0, 0.0)};
  std::vector<cplx> cur{diag(1), cplx(-1.0, 0.0)};
  for (int l = 2; l <= n; ++l) {
    std::vector<cplx> next(cur.size() + 1, cplx(0.0, 0.0));
    const cplx d = diag(l);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] += d * cur[i];
      next[i + 1] -= cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= j2 * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur};
}

std::vector<cplx> poly_roots(const CharPoly& p, double tol) {
  const int deg = p.degree();
  if (deg < 1) throw InvalidArgument("poly_roots needs degree >= 1");
  if (!(tol > 0.0)) throw InvalidArgument("root tolerance must be positive");
  const auto& c = p.coefficients;
  const cplx lead = c.back();
  if (std::abs(lead) == 0.0) throw InvalidArgument("leading coefficient vanishes");

  double radius = 0.0;
  for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(c[i] / lead));
  radius += 1.0;
  std::vector<cplx> z(deg);
  for (int i = 0; i < deg; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / deg + 0.4;
    z[i] = std::polar(radius, angle);
  }

  std::vector<bool> done(deg, false);
  for (int iter = 0; iter < kMaxRootIterations; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < deg; ++i) {
      if (done[i]) continue;
      const auto [val, der] = horner_with_derivative(c, z[i]);
      if (val == cplx(0.0, 0.0)) {
        done[i] = true;
        continue;
      }
      const cplx ratio = val / der;
      cplx repulsion(0.0, 0.0);
      for (int j = 0; j < deg; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      const double rel = std::abs(step) / std::max(1.0, std::abs(z[i]));
      if (rel < tol) done[i] = true;
      worst = std::max(worst, rel);
    }
    if (std::all_of(done.begin(), done.end(), [](bool b) { return b; })) return z;
    (void)worst;
  }
  throw NonConvergence("Aberth iteration did not converge in " + std::to_string(kMaxRootIterations) + " steps");
}

std::vector<cplx> oracle_spectrum(const ChainSpec& spec, double tol) {
  if (spec.n_sites() > kOracleDenseLimit) {
    throw InvalidArgument("dense oracle is limited to N <= " + std::to_string(kOracleDenseLimit));
  }
  std::vector<cplx> roots = poly_roots(char_poly(spec), tol);
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

StateVector oracle_eigenvector(const ComplexMatrix& h, cplx lambda, double tol) {
  if (h.rows() != h.cols()) throw InvalidArgument("oracle_eigenvector needs a square matrix");
  const Eigen::Index n = h.rows();
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  double shift_size = 1e-10 * scale;
  for (int attempt = 0; attempt <= 3; ++attempt, shift_size *= 100.0) {
    const cplx shift = lambda + std::polar(shift_size, 0.3);
    const ComplexMatrix a = h - shift * ComplexMatrix::Identity(n, n);
    const Eigen::PartialPivLU<ComplexMatrix> lu(a);
    ComplexVector v = ComplexVector::Constant(n, cplx(1.0, 0.0));
    for (Eigen::Index i = 0; i < n; ++i) v(i) += cplx(0.01 * static_cast<double>(i), 0.001 * static_cast<double>(i * i));
    v.normalize();
    bool finite = true;
    for (int it = 0; it < 8; ++it) {
      v = lu.solve(v);
      const double norm = v.norm();
      if (!std::isfinite(norm) || norm == 0.0) {
        finite = false;
        break;
      }
      v /= norm;
      if ((h * v - lambda * v).cwiseAbs().maxCoeff() < 10.0 * tol) break;
    }
    if (!finite) continue;
    StateVector out(v);
    fix_site_one_phase(out);
    if ((h * out.values() - lambda * out.values()).cwiseAbs().maxCoeff() >= 10.0 * tol) {
      throw NonConvergence("inverse iteration residual above 10 * tol");
    }
    return out;
  }
  throw SingularSolve("shifted system stayed singular after 3 reshifts");
}

std::array<cplx, 2> char_poly_tridiagonal(const ChainSpec& spec, cplx lambda) {
  const int n = spec.n_sites();
  const double j2 = spec.hopping() * spec.hopping();
  auto diag = [&](int l) -> cplx {
    if (l == 1) return {0.0, spec.gamma()};
    if (l == n) return {0.0, -spec.gamma()};
    return {0.0, 0.0};
  };
  cplx d_prev(1.0, 0.0);
  cplx dd_prev(0.0, 0.0);
  cplx d = diag(1) - lambda;
  cplx dd(-1.0, 0.0);
  for (int l = 2; l <= n; ++l) {
    const cplx a = diag(l) - lambda;
    const cplx d_next = a * d - j2 * d_prev;
    const cplx dd_next = -d + a * dd - j2 * dd_prev;
    d_prev = d;
    dd_prev = dd;
    d = d_next;
    dd = dd_next;
    if (std::max(std::abs(d), std::abs(dd)) > kRescale) {
      d /= kRescale;
      dd /= kRescale;
      d_prev /= kRescale;
      dd_prev /= kRescale;
    }
  }
  return {d, dd};
}

std::array<cplx, 2> oracle_critical_levels(const ChainSpec& spec, double tol) {
  const Phase phase = classify_phase(spec);
  if (phase == Phase::Critical) throw PhaseError("critical levels are degenerate inside the Critical band");
  const int n = spec.n_sites();
  const double hop = spec.hopping();
  const bool odd = spec.odd();
  const bool imaginary = phase == Phase::Broken;

  // Along lambda = t (real) or lambda = i t the (reduced) determinant is real:
  // even N: p is even; odd N: p is odd and p(lambda)/lambda is even.
  auto eval = [&](double t) -> std::pair<double, double> {
    const cplx lam = imaginary ? cplx(0.0, t) : cplx(t, 0.0);
    const auto [d, dd] = char_poly_tridiagonal(spec, lam);
    const cplx dlam = imaginary ? cplx(0.0, 1.0) * dd : dd;  // d/dt
    if (!imaginary) return {d.real(), dlam.real()};
    return odd ? std::pair{d.imag(), dlam.imag()} : std::pair{d.real(), dlam.real()};
  };
  // Sign of p / lambda next to t = 0 for odd N is the sign of p'(0).
  auto sign_value = [&](double t) {
    if (t == 0.0 && odd) return eval(0.0).second;
    return eval(t).first;
  };

  const double step = hop * std::numbers::pi / (20.0 * n);
  const double t_max = imaginary ? 2.0 * hop * std::sinh(std::log(spec.gamma() / hop) + 1.0) + hop : 2.0 * hop;
  double prev = sign_value(0.0);
  for (double lo = 0.0; lo < t_max; lo += step) {
    const double hi = lo + step;
    const double cur = sign_value(hi);
    if (cur == 0.0 || (prev < 0.0) != (cur < 0.0)) {
      const double t = cur == 0.0 ? hi : detail::bracketed_root(sign_value, eval, lo, hi, tol * hop);
      if (imaginary) return {cplx(0.0, t), cplx(0.0, -t)};
      return {cplx(t, 0.0), cplx(-t, 0.0)};
    }
    prev = cur;
  }
  throw NonConvergence("no critical level found by sign bracketing");
}

}  // namespace ptchain
