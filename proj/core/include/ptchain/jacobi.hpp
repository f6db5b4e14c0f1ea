#pragma once

#include "ptchain/model.hpp"

namespace ptchain {

inline constexpr int kJacobiMaxSweeps = 100;

struct SymmetricEigensystem {
  RealVector values;   // ascending
  RealMatrix vectors;  // column i belongs to values(i)
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below
/// tol * max(1, ||A||_F). Throws InvalidArgument for non-square or
/// non-symmetric input, NonConvergence after kJacobiMaxSweeps sweeps.
SymmetricEigensystem jacobi_eigensystem(const RealMatrix& sym, double tol = 1e-15);

}  // namespace ptchain
