#include "ptchain/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ptchain/error.hpp"

namespace ptchain {

namespace {

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

// Zeroes a(p,q) with a plane rotation and accumulates it into v.
void rotate(RealMatrix& a, RealMatrix& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricEigensystem jacobi_eigensystem(const RealMatrix& sym, double tol) {
  if (sym.rows() != sym.cols()) throw InvalidArgument("jacobi_eigensystem needs a square matrix");
  if (!(tol > 0.0)) throw InvalidArgument("jacobi tolerance must be positive");
  const Eigen::Index n = sym.rows();
  const double scale = std::max(1.0, sym.norm());
  if ((sym - sym.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw InvalidArgument("jacobi_eigensystem needs a symmetric matrix");
  }

  RealMatrix a = 0.5 * (sym + sym.transpose());
  RealMatrix v = RealMatrix::Identity(n, n);
  const double target = tol * scale;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kJacobiMaxSweeps) throw NonConvergence("Jacobi sweeps exceeded the cap");
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  SymmetricEigensystem out{RealVector(n), RealMatrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[i], order[i]);
    out.vectors.col(i) = v.col(order[i]);
  }
  return out;
}

}  // namespace ptchain
