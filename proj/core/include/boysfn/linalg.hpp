#pragma once

#include <vector>

#include "boysfn/highprec.hpp"

namespace boysfn {

/// Dense symmetric matrix, row-major, dimension d.
struct SymmetricEigenResult {
  std::vector<hp::Real> values;               // d eigenvalues, unordered
  std::vector<std::vector<hp::Real>> vectors; // vectors[j] is the j-th eigenvector
};

/// Cyclic Jacobi diagonalization of a small real symmetric matrix at the
/// working extended precision.
SymmetricEigenResult jacobi_eigensolve(std::vector<std::vector<hp::Real>> a,
                                       int max_sweeps = 60);

}  // namespace boysfn
