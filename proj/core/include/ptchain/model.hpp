#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

namespace ptchain {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Default half-width of the Critical band around gamma_c, in units of J.
inline constexpr double kDefaultPhaseTol = 1e-9;

/// N-site chain with uniform hopping J and potentials +i gamma (site 1),
/// -i gamma (site N).
class ChainSpec {
 public:
  /// Throws InvalidArgument unless n_sites >= 2, hopping > 0, gamma >= 0.
  ChainSpec(int n_sites, double gamma, double hopping = 1.0);

  int n_sites() const noexcept { return n_sites_; }
  double gamma() const noexcept { return gamma_; }
  double hopping() const noexcept { return hopping_; }

  ChainSpec with_gamma(double gamma) const { return ChainSpec(n_sites_, gamma, hopping_); }

  /// Chain center N0 = (N + 1) / 2.
  double center() const noexcept { return 0.5 * (n_sites_ + 1); }
  bool odd() const noexcept { return n_sites_ % 2 == 1; }

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

 private:
  int n_sites_;
  double gamma_;
  double hopping_;
};

/// Complex site amplitudes. Sites are addressed 1..N through site(); values()
/// exposes the underlying 0-based storage for linear algebra.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n_sites) : amps_(ComplexVector::Zero(n_sites)) {}
  explicit StateVector(ComplexVector amps) : amps_(std::move(amps)) {}

  int size() const noexcept { return static_cast<int>(amps_.size()); }

  cplx site(int l) const { return amps_(l - 1); }
  cplx& site(int l) { return amps_(l - 1); }

  const ComplexVector& values() const noexcept { return amps_; }
  ComplexVector& values() noexcept { return amps_; }

 private:
  ComplexVector amps_;
};

enum class Phase { Unbroken, Broken, Critical };

std::string_view to_string(Phase phase);

/// Tridiagonal Hamiltonian: -J on the off-diagonals, i gamma at (1,1),
/// -i gamma at (N,N).
ComplexMatrix build_hamiltonian(const ChainSpec& spec);

/// (PT v)_l = conj(v_{N+1-l}).
StateVector apply_pt(const StateVector& v);
ComplexVector apply_pt(const ComplexVector& v);

/// Exact phase boundary: J sqrt((n+1)/n) for N = 2n+1, J for N = 2n.
double gamma_critical(int n_sites, double hopping = 1.0);
inline double gamma_critical(const ChainSpec& spec) {
  return gamma_critical(spec.n_sites(), spec.hopping());
}

/// Unbroken below gamma_c - tol, Broken above gamma_c + tol, else Critical.
/// tol is in the same units as gamma.
Phase classify_phase(const ChainSpec& spec, double tol);

/// Uses a band of kDefaultPhaseTol * J.
inline Phase classify_phase(const ChainSpec& spec) {
  return classify_phase(spec, kDefaultPhaseTol * spec.hopping());
}

}  // namespace ptchain
