#pragma once

#include "boysfn/highprec.hpp"

namespace boysfn {

/// The partition [0, inf) = [0, x0) u [x0, x1) u [x1, inf) together with the
/// order range and target accuracy it was built for.
struct RegionPartition {
  double x0 = 0;
  double x1 = 0;
  int k_max = 0;
  double eps_tol = 0;
};

/// x0 = max{1, (prod_{k=0}^{kmax-1} (k+1/2))^(1/kmax)}: the smallest point
/// from which upward recursion up to order kmax does not amplify the seed
/// error (to zeroth order in round-off).
hp::Real compute_x0(int k_max);

/// Solves Gamma(kmax+1/2, x1) / (2 x1^(kmax+1/2)) = eps_tol for x1, the start
/// of the asymptotic region. Safeguarded Newton in extended precision;
/// residual is driven below eps_tol * 1e-20.
hp::Real compute_x1(int k_max, const hp::Real& eps_tol);

/// Downward-recursion stability weight
///   rho_{A,k}(x) = max_{l=0..k} prod_{n=l}^{k-1} x/(n+1/2),
/// with the empty product (l = k) contributing 1, so always >= 1.
hp::Real weight_rho_A(int k, const hp::Real& x);

RegionPartition make_partition(int k_max, double eps_tol);

}  // namespace boysfn
