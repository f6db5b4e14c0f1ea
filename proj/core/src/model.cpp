#include "ptchain/model.hpp"

#include <cmath>
#include <string>

#include "ptchain/error.hpp"

namespace ptchain {

ChainSpec::ChainSpec(int n_sites, double gamma, double hopping)
    : n_sites_(n_sites), gamma_(gamma), hopping_(hopping) {
  if (n_sites < 2) {
    throw InvalidArgument("chain needs at least 2 sites, got " + std::to_string(n_sites));
  }
  if (!(hopping > 0.0) || !std::isfinite(hopping)) {
    throw InvalidArgument("hopping J must be positive and finite");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("gamma must be non-negative and finite");
  }
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Unbroken:
      return "unbroken";
    case Phase::Broken:
      return "broken";
    case Phase::Critical:
      return "critical";
  }
  return "unknown";
}

ComplexMatrix build_hamiltonian(const ChainSpec& spec) {
  const int n = spec.n_sites();
  const double hop = spec.hopping();
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (int l = 0; l + 1 < n; ++l) {
    h(l, l + 1) = -hop;
    h(l + 1, l) = -hop;
  }
  h(0, 0) += cplx(0.0, spec.gamma());
  h(n - 1, n - 1) += cplx(0.0, -spec.gamma());
  return h;
}

ComplexVector apply_pt(const ComplexVector& v) {
  const Eigen::Index n = v.size();
  ComplexVector out(n);
  for (Eigen::Index l = 0; l < n; ++l) out(l) = std::conj(v(n - 1 - l));
  return out;
}

StateVector apply_pt(const StateVector& v) { return StateVector(apply_pt(v.values())); }

double gamma_critical(int n_sites, double hopping) {
  if (n_sites < 2) throw InvalidArgument("gamma_critical needs N >= 2");
  if (n_sites % 2 == 0) return hopping;
  const double n = (n_sites - 1) / 2;
  return hopping * std::sqrt((n + 1.0) / n);
}

Phase classify_phase(const ChainSpec& spec, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("phase tolerance must be positive");
  const double gc = gamma_critical(spec);
  if (spec.gamma() < gc - tol) return Phase::Unbroken;
  if (spec.gamma() > gc + tol) return Phase::Broken;
  return Phase::Critical;
}

}  // namespace ptchain
