#include "ptchain/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ptchain/error.hpp"

namespace ptchain {

namespace {

constexpr double kGaugeTol = 1e-8;
constexpr double kStructureTol = 1e-6;
constexpr double kPairTol = 1e-8;
constexpr double kSignificant = 1e-8;

struct Eigenpair {
  double value;
  RealVector vec;
  double parity;
};

void fix_sign(RealVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kSignificant) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

// Eigenpairs of eta_real with P-definite vectors; degenerate clusters are
// rotated onto the eigenvectors of P restricted to the cluster.
std::vector<Eigenpair> parity_resolved(const RealMatrix& eta_real) {
  const int n = static_cast<int>(eta_real.rows());
  const SymmetricEigensystem es = jacobi_eigensystem(eta_real);
  const RealMatrix p = parity_matrix(n);
  std::vector<Eigenpair> out;
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && es.values(stop) - es.values(start) <= kClusterTol * std::max(1.0, std::abs(es.values(start)))) {
      ++stop;
    }
    const RealMatrix block = es.vectors.middleCols(start, stop - start);
    RealMatrix rotated = block;
    if (stop - start > 1) {
      const SymmetricEigensystem pe = jacobi_eigensystem(block.transpose() * p * block);
      rotated = block * pe.vectors;
    }
    for (int c = 0; c < stop - start; ++c) {
      const RealVector v = rotated.col(c);
      const double par = v.dot(p * v);
      if (std::abs(std::abs(par) - 1.0) > 1e-6) {
        throw DegeneracyError("metric eigenvector is not parity definite (<v|P|v> = " + std::to_string(par) + ")");
      }
      out.push_back({v.dot(eta_real * v), v, par});
    }
    start = stop;
  }
  return out;
}

// Orders one parity group by descending eigenvalue and rebuilds the second
// half from the first as sigma * R v so that partners are exact.
void pair_within_group(std::vector<Eigenpair>& group, const RealMatrix& r, int sigma, std::vector<int>& pairing,
                       std::vector<int>& signs, int offset) {
  const int m = static_cast<int>(group.size());
  for (int i = 0; i < m / 2; ++i) {
    Eigenpair& lo = group[i];
    Eigenpair& hi = group[m - 1 - i];
    if (std::abs(lo.value * hi.value - 1.0) > kPairTol) {
      throw DegeneracyError("metric eigenvalues are not reciprocal: " + std::to_string(lo.value) + " * " +
                            std::to_string(hi.value));
    }
    fix_sign(lo.vec);
    const RealVector partner = sigma * (r * lo.vec);
    if (std::abs(std::abs(partner.dot(hi.vec)) - 1.0) > 1e-6) {
      throw DegeneracyError("R does not map a metric eigenvector onto its reciprocal partner");
    }
    hi.vec = partner;
    hi.value = 1.0 / lo.value;
    pairing[offset + i] = offset + m - 1 - i;
    pairing[offset + m - 1 - i] = offset + i;
    signs[offset + i] = sigma;
    signs[offset + m - 1 - i] = sigma;
  }
  if (m % 2 == 1) {
    Eigenpair& mid = group[m / 2];
    fix_sign(mid.vec);
    pairing[offset + m / 2] = offset + m / 2;
    signs[offset + m / 2] = sigma;
  }
}

// R-eigenvalue of the self-paired (eps = 1) vector of an odd-sized group.
int self_pair_sign(const std::vector<Eigenpair>& group, const RealMatrix& r) {
  const Eigenpair& mid = group[group.size() / 2];
  if (std::abs(mid.value - 1.0) > kPairTol) throw DegeneracyError("odd chain lacks the eps = 1 metric eigenvector");
  const double rv = mid.vec.dot(r * mid.vec);
  if (std::abs(std::abs(rv) - 1.0) > 1e-6) throw DegeneracyError("self-paired metric eigenvector is not R definite");
  return rv > 0.0 ? 1 : -1;
}

MetricDecomposition from_reference(const ChainSpec& spec, const ComplexMatrix& eta, const RealMatrix& eta_real) {
  MetricDecomposition ref =
      canonical_basis(spec.with_gamma(kReferenceGamma * spec.hopping()),
                      build_metric(build_eigen_basis(spec.with_gamma(kReferenceGamma * spec.hopping()))));
  // The reference vectors are accurate only to eps / (eigenvalue gap ~ gamma_ref).
  // Symmetric orthonormalization commutes with the signed R-pairing and with P.
  const SymmetricEigensystem overlap = jacobi_eigensystem(ref.basis.transpose() * ref.basis);
  const RealMatrix inv_sqrt =
      overlap.vectors * overlap.values.cwiseSqrt().cwiseInverse().asDiagonal() * overlap.vectors.transpose();
  ref.basis = ref.basis * inv_sqrt;
  ref.spec = spec;
  ref.eta = eta;
  ref.eta_real = eta_real;
  for (Eigen::Index c = 0; c < ref.basis.cols(); ++c) {
    ref.eigenvalues(c) = ref.basis.col(c).dot(eta_real * ref.basis.col(c));
  }
  return ref;
}

}  // namespace

ComplexMatrix build_metric(const EigenBasis& basis) {
  if (basis.phase != Phase::Unbroken) throw PhaseError("metric operator exists only in the unbroken phase");
  const int n = basis.spec.n_sites();
  ComplexMatrix eta = ComplexMatrix::Zero(n, n);
  for (const auto& gs : basis.g_states) eta += gs.state.values() * gs.state.values().adjoint();
  return eta;
}

ComplexVector gauge_phases(int n_sites) {
  ComplexVector d(n_sites);
  const int n0 = (n_sites + 1) / 2;
  const bool odd = n_sites % 2 == 1;
  for (int l = 1; l <= n_sites; ++l) {
    double s = 1.0;
    if (odd && l > n0) {
      const int m = n_sites + 1 - l;
      s = ((n0 + m) % 2 == 0) ? 1.0 : -1.0;
    }
    d(l - 1) = (l % 2 == 1) ? cplx(0.0, s) : cplx(s, 0.0);
  }
  return d;
}

RealMatrix gauge_real(const ComplexMatrix& eta) {
  if (eta.rows() != eta.cols()) throw InvalidArgument("metric must be square");
  const ComplexVector d = gauge_phases(static_cast<int>(eta.rows()));
  const ComplexMatrix g = d.asDiagonal().toDenseMatrix().adjoint() * eta * d.asDiagonal();
  const double residue = g.imag().cwiseAbs().maxCoeff();
  if (residue > kGaugeTol) {
    throw GaugeError("gauged metric keeps an imaginary part of " + std::to_string(residue));
  }
  RealMatrix re = g.real();
  return 0.5 * (re + re.transpose());
}

RealMatrix alternating_matrix(int n_sites) {
  RealMatrix r = RealMatrix::Zero(n_sites, n_sites);
  for (int l = 1; l <= n_sites; ++l) r(l - 1, l - 1) = (l % 2 == 0) ? 1.0 : -1.0;
  return r;
}

MetricDecomposition canonical_basis(const ChainSpec& spec, const ComplexMatrix& eta) {
  const int n = spec.n_sites();
  if (eta.rows() != n || eta.cols() != n) throw InvalidArgument("metric size does not match the chain");
  const RealMatrix eta_real = gauge_real(eta);
  const RealMatrix r = alternating_matrix(n);

  std::vector<Eigenpair> pairs = parity_resolved(eta_real);
  const auto [lo_it, hi_it] =
      std::minmax_element(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  if (hi_it->value - lo_it->value <= kClusterTol * std::max(1.0, hi_it->value) && n > 1) {
    if (spec.gamma() == 0.0) return from_reference(spec, eta, eta_real);
    throw DegeneracyError("metric is fully degenerate away from gamma = 0");
  }

  std::vector<Eigenpair> even_group;
  std::vector<Eigenpair> odd_group;
  for (auto& e : pairs) (e.parity > 0.0 ? even_group : odd_group).push_back(std::move(e));
  auto by_desc = [](const Eigenpair& a, const Eigenpair& b) { return a.value > b.value; };
  std::stable_sort(even_group.begin(), even_group.end(), by_desc);
  std::stable_sort(odd_group.begin(), odd_group.end(), by_desc);

  MetricDecomposition out{spec, eta, eta_real, RealVector(n), RealMatrix(n, n), std::vector<int>(n),
                          std::vector<int>(n), 0, 0};

  std::vector<Eigenpair> group_a;
  std::vector<Eigenpair> group_b;
  if (spec.odd()) {
    if (even_group.size() < odd_group.size()) {
      group_a = std::move(even_group);
      group_b = std::move(odd_group);
    } else {
      group_a = std::move(odd_group);
      group_b = std::move(even_group);
    }
    if (group_a.size() + 1 != group_b.size()) throw DegeneracyError("unexpected parity split of the metric basis");
    // R commutes with P for odd N, so partners stay inside a parity group.
    const bool a_holds_self = group_a.size() % 2 == 1;
    const int sigma = self_pair_sign(a_holds_self ? group_a : group_b, r);
    const int na = static_cast<int>(group_a.size());
    pair_within_group(group_a, r, a_holds_self ? sigma : 1, out.pairing, out.pairing_sign, 0);
    pair_within_group(group_b, r, a_holds_self ? 1 : sigma, out.pairing, out.pairing_sign, na);
  } else {
    if (even_group.size() != odd_group.size()) throw DegeneracyError("unexpected parity split of the metric basis");
    group_a = std::move(even_group);
    group_b = std::move(odd_group);
    // R anticommutes with P for even N: B_j = R A_{N_A+1-j}.
    const int na = static_cast<int>(group_a.size());
    std::vector<double> expected;
    for (auto& e : group_a) {
      fix_sign(e.vec);
      expected.push_back(1.0 / e.value);
    }
    std::vector<double> found;
    for (const auto& e : group_b) found.push_back(e.value);
    std::sort(expected.begin(), expected.end());
    std::sort(found.begin(), found.end());
    for (int i = 0; i < na; ++i) {
      if (std::abs(expected[i] - found[i]) > kPairTol * std::max(1.0, found[i])) {
        throw DegeneracyError("metric eigenvalues do not come in reciprocal pairs");
      }
    }
    for (int j = 0; j < na; ++j) {
      const Eigenpair& src = group_a[na - 1 - j];
      group_b[j] = {1.0 / src.value, r * src.vec, -src.parity};
      out.pairing[na + j] = na - 1 - j;
      out.pairing[na - 1 - j] = na + j;
      out.pairing_sign[na + j] = 1;
      out.pairing_sign[na - 1 - j] = 1;
    }
  }

  out.n_a = static_cast<int>(group_a.size());
  out.n_b = static_cast<int>(group_b.size());
  int col = 0;
  for (const auto* group : {&group_a, &group_b}) {
    for (const auto& e : *group) {
      out.eigenvalues(col) = e.value;
      out.basis.col(col) = e.vec;
      ++col;
    }
  }
  return out;
}

MetricDecomposition metric_decomposition(const ChainSpec& spec, double tol) {
  return canonical_basis(spec, build_metric(build_eigen_basis(spec, tol)));
}

HermitianEquivalent hermitian_equivalent(const MetricDecomposition& decomp, const ComplexMatrix& h) {
  const int n = decomp.spec.n_sites();
  if (h.rows() != n || h.cols() != n) throw InvalidArgument("Hamiltonian size does not match the metric");
  const ComplexVector d = gauge_phases(n);
  const ComplexMatrix hg = d.asDiagonal().toDenseMatrix().adjoint() * h * d.asDiagonal();
  const ComplexMatrix v = decomp.basis.cast<cplx>();
  const ComplexMatrix k = v.transpose() * hg * v;

  ComplexMatrix hh(n, n);
  for (int m = 0; m < n; ++m) {
    const cplx pm = m < decomp.n_a ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
    for (int c = 0; c < n; ++c) {
      const cplx pc = c < decomp.n_a ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
      hh(m, c) = std::sqrt(decomp.eigenvalues(m) / decomp.eigenvalues(c)) * k(m, c) * std::conj(pm) * pc;
    }
  }

  const double imag = hh.imag().cwiseAbs().maxCoeff();
  if (imag > kStructureTol) throw StructureError("Hermitian equivalent keeps an imaginary part of " + std::to_string(imag));
  const int na = decomp.n_a;
  const int nb = decomp.n_b;
  const RealMatrix re = hh.real();
  const double diag_a = na > 0 ? re.topLeftCorner(na, na).cwiseAbs().maxCoeff() : 0.0;
  const double diag_b = nb > 0 ? re.bottomRightCorner(nb, nb).cwiseAbs().maxCoeff() : 0.0;
  if (std::max(diag_a, diag_b) > kStructureTol) {
    throw StructureError("Hermitian equivalent has non-vanishing diagonal blocks (" +
                         std::to_string(std::max(diag_a, diag_b)) + ")");
  }

  HermitianEquivalent out{re, re.topRightCorner(na, nb), {}, na, nb, imag, std::max(diag_a, diag_b)};
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) out.couplings.push_back({i + 1, j + 1, out.block_a(i, j)});
  }
  return out;
}

HermitianEquivalent hermitian_equivalent(const ChainSpec& spec, double tol) {
  return hermitian_equivalent(metric_decomposition(spec, tol), build_hamiltonian(spec));
}

}  // namespace ptchain
